#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "superbi/algebra_spec.hpp"
#include "superbi/tensor.hpp"
#include "superbi/window.hpp"

namespace superbi {

/// τ(a⊗b) = (-1)^{[a][b]} b⊗a.
Tensor2 tensor2_twist(const Tensor2& t);

/// ξ(x1⊗x2⊗x3) = (-1)^{[x1]([x2]+[x3])} x2⊗x3⊗x1.
Tensor3 tensor3_cyclic(const Tensor3& t);

/// Adds c · (x ∗ key) to `out`: the adjoint diagonal action of a basis key on
/// one tensor term, with the Koszul sign of every factor x passes.
template <std::size_t N>
void act_on_term(StructureConstants& sc, const BasisKey& x, const KeyTuple<N>& key, const Scalar& c,
                 Tensor<N>& out) {
    Parity px = key_parity(x);
    Parity passed = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const auto& terms = sc(x, key[i]);
        if (!terms.empty()) {
            Scalar s = (px & passed) ? -c : c;
            KeyTuple<N> k = key;
            for (const auto& [target, coeff] : terms) {
                k[i] = target;
                out.add(k, s * coeff);
            }
        }
        passed ^= key_parity(key[i]);
    }
}

template <std::size_t N>
Tensor<N> diag_act(StructureConstants& sc, const BasisKey& x, const Tensor<N>& t) {
    Tensor<N> out;
    for (const auto& [k, c] : t) act_on_term(sc, x, k, c, out);
    return out;
}

/// Throws std::invalid_argument unless x is parity-homogeneous.
void require_homogeneous(const Element& x, const char* what);

template <std::size_t N>
Tensor<N> diag_act(StructureConstants& sc, const Element& x, const Tensor<N>& t) {
    require_homogeneous(x, "acting element");
    Tensor<N> out;
    for (const auto& [kx, cx] : x)
        for (const auto& [k, c] : t) act_on_term(sc, kx[0], k, cx * c, out);
    return out;
}

/// x ∗ Σ a⊗b = Σ [x,a]⊗b + (-1)^{[x][a]} a⊗[x,b]. x must be parity-homogeneous.
Tensor2 diag_act2(const AlgebraSpec& spec, const Element& x, const Tensor2& t);
Tensor3 diag_act3(const AlgebraSpec& spec, const Element& x, const Tensor3& t);

/// (1+τ)t = 0, equivalently t ∈ Im(1-τ).
bool is_super_skew(const Tensor2& t);

/// (1-τ)t.
Tensor2 skewize(const Tensor2& t);

/// Throws std::invalid_argument unless every term of r has even total parity.
void require_even(const Tensor2& r);

/// c(r) = [r12,r13] + [r12,r23] + [r13,r23] for even r.
Tensor3 cybe(const AlgebraSpec& spec, const Tensor2& r);
Tensor3 cybe(StructureConstants& sc, const Tensor2& r);

/// Basis keys x with |degree| <= window.domain and x ∗ c(r) ≠ 0.
std::vector<std::pair<BasisKey, Tensor3>> mybe_defect(const AlgebraSpec& spec, const Tensor2& r,
                                                      const Window& window);

}  // namespace superbi
