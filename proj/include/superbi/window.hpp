#pragma once

#include <stdexcept>
#include <string>

#include "superbi/half_int.hpp"

namespace superbi {

/// Finite truncation of the graded algebra. Domain keys have |degree| <= domain,
/// tensor values keep each component within |degree| <= codomain, and quotients
/// and comparisons are taken on keys with |degree| <= core.
struct Window {
    HalfInt domain{};
    HalfInt codomain{};
    HalfInt core{};

    /// Throws std::invalid_argument unless 0 <= core <= domain <= codomain.
    static Window make(HalfInt domain, HalfInt codomain, HalfInt core) {
        if (core.doubled < 0 || core > domain || domain > codomain)
            throw std::invalid_argument("window needs 0 <= core <= domain <= codomain, got core " + core.to_string() +
                                        ", domain " + domain.to_string() + ", codomain " + codomain.to_string());
        return Window{domain, codomain, core};
    }
    static Window uniform(HalfInt bound) { return make(bound, bound, bound); }

    Window grown(HalfInt by) const { return make(domain + by, codomain + by, core + by); }
};

}  // namespace superbi
