#pragma once

#include <cstddef>
#include <optional>

#include "superbi/algebra_spec.hpp"

namespace superbi {

struct SkewFailure {
    BasisKey a, b;
    Element defect;  ///< [a,b] + (-1)^{[a][b]} [b,a]
};

struct JacobiFailure {
    BasisKey a, b, c;
    Element defect;  ///< [a,[b,c]] - [[a,b],c] - (-1)^{[a][b]} [b,[a,c]]
};

struct ConsistencyReport {
    HalfInt bound;
    std::size_t keys = 0;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::optional<SkewFailure> skew_failure;      ///< first in canonical order
    std::optional<JacobiFailure> jacobi_failure;  ///< first in canonical order

    bool passed() const { return !skew_failure && !jacobi_failure; }
};

/// Exhaustive super-skew check on all basis pairs and super-Jacobi check on all
/// basis triples with |degree| <= bound. Brackets are evaluated exactly, so no
/// output truncation is involved.
ConsistencyReport check_spec_consistency(const AlgebraSpec& spec, HalfInt bound);

}  // namespace superbi
