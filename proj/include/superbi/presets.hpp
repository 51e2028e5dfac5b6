#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superbi/algebra_spec.hpp"

namespace superbi {

/// Built-in algebras: witt, virasoro, thv-centerless, ns2-centerless, ns2-central.
/// Throws std::invalid_argument for any other name.
AlgebraSpec preset(std::string_view name);

/// The DSL source a preset is parsed from.
std::string_view preset_source(std::string_view name);

const std::vector<std::string>& preset_names();

}  // namespace superbi
