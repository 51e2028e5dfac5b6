#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "superbi/algebra_spec.hpp"
#include "superbi/tensor.hpp"
#include "superbi/tensor_ops.hpp"
#include "superbi/window.hpp"

namespace superbi {

/// Δ_r(x) = (-1)^{[r][x]} x ∗ r = x ∗ r for even r.
Tensor2 delta_r(const AlgebraSpec& spec, const Tensor2& r, const Element& x);
Tensor2 delta_r(StructureConstants& sc, const Tensor2& r, const Element& x);

/// (1 + ξ + ξ²)(1⊗Δ_r)Δ_r(x).
Tensor3 co_jacobi_defect(const AlgebraSpec& spec, const Tensor2& r, const Element& x);
Tensor3 co_jacobi_defect(StructureConstants& sc, const Tensor2& r, const Element& x);

/// co_jacobi_defect(r, x) == x ∗ c(r). Requires r skew and even.
bool lemma_identity_check(const AlgebraSpec& spec, const Tensor2& r, const Element& x);

/// Δ_r([x,y]) - x∗Δ_r(y) + (-1)^{[x][y]} y∗Δ_r(x).
Tensor2 compatibility_defect(const AlgebraSpec& spec, const Tensor2& r, const Element& x, const Element& y);
Tensor2 compatibility_defect(StructureConstants& sc, const Tensor2& r, const Element& x, const Element& y);

/// Raised when a derivation is evaluated outside its domain window.
class OutOfWindowError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A homogeneous map from basis keys with |degree| <= domain to L^{⊗N}.
/// Keys of the domain window that are absent from `values` map to zero.
/// With even_only set the domain is the even part of the window.
template <std::size_t N>
struct DerivationTableT {
    Parity parity = 0;
    HalfInt degree{};
    HalfInt domain{};
    bool even_only = false;
    std::map<BasisKey, Tensor<N>> values;

    bool in_domain(const BasisKey& k) const {
        return key_degree(k).abs() <= domain && !(even_only && key_parity(k));
    }

    const Tensor<N>& value(const BasisKey& k) const {
        static const Tensor<N> zero;
        if (!in_domain(k)) throw OutOfWindowError(k.to_string() + " lies outside the table's domain window");
        auto it = values.find(k);
        return it == values.end() ? zero : it->second;
    }

    void set(const BasisKey& k, Tensor<N> v) {
        if (v.is_zero())
            values.erase(k);
        else
            values[k] = std::move(v);
    }

    bool is_zero() const { return values.empty(); }
    friend bool operator==(const DerivationTableT&, const DerivationTableT&) = default;
};

using DerivationTable = DerivationTableT<2>;
using AdjointDerivationTable = DerivationTableT<1>;

/// d([x,y]) - (-1)^{[d][x]} x∗d(y) + (-1)^{[y]([d]+[x])} y∗d(x).
/// Throws OutOfWindowError if x, y or a key of [x,y] is outside d's domain.
template <std::size_t N>
Tensor<N> derivation_defect(StructureConstants& sc, const DerivationTableT<N>& d, const BasisKey& x,
                            const BasisKey& y) {
    Tensor<N> out;
    for (const auto& [k, c] : sc(x, y)) {
        if (!d.in_domain(k))
            throw OutOfWindowError("[" + x.to_string() + ", " + y.to_string() + "] leaves the domain window at " +
                                   k.to_string());
        Tensor<N> v = d.value(k);
        v *= c;
        out += v;
    }
    Parity px = key_parity(x), py = key_parity(y);
    Tensor<N> xdy = diag_act(sc, x, d.value(y));
    if (d.parity & px)
        out += xdy;
    else
        out -= xdy;
    Tensor<N> ydx = diag_act(sc, y, d.value(x));
    if (py & (d.parity ^ px))
        out -= ydx;
    else
        out += ydx;
    return out;
}

template <std::size_t N>
Tensor<N> derivation_defect(const AlgebraSpec& spec, const DerivationTableT<N>& d, const BasisKey& x,
                            const BasisKey& y) {
    StructureConstants sc(spec);
    return derivation_defect(sc, d, x, y);
}

/// a_inn: x ↦ (-1)^{[a][x]} x ∗ a on every basis key of the domain window.
template <std::size_t N>
DerivationTableT<N> inner_derivation(StructureConstants& sc, const Tensor<N>& a, HalfInt domain) {
    auto parity = a.parity();
    if (!parity) throw std::invalid_argument("inner derivation needs a parity-homogeneous element");
    auto degree = a.degree();
    if (!degree && !a.is_zero()) throw std::invalid_argument("inner derivation needs a degree-homogeneous element");
    DerivationTableT<N> t;
    t.parity = *parity;
    t.degree = degree.value_or(HalfInt{});
    t.domain = domain;
    for (const auto& x : basis_keys(sc.spec(), domain)) {
        Tensor<N> v = diag_act(sc, x, a);
        if (*parity & key_parity(x)) v *= Scalar(-1);
        t.set(x, std::move(v));
    }
    return t;
}

DerivationTable inner_derivation(const AlgebraSpec& spec, const Tensor2& a, const Window& window);

struct RhoParams {
    Scalar alpha, alpha_dagger, beta, beta_dagger, gamma, gamma_dagger;
};

/// ϱ(L_n) = (nα+γ) I_0⊗I_n + (nα†+γ†) I_n⊗I_0,  ϱ(I_n) = β I_0⊗I_n + β† I_n⊗I_0.
/// Degree 0, even, supported on the even-part keys L(n), I(n) of the window.
/// The table's domain is the whole window, so odd keys read as zero.
DerivationTable rho(const RhoParams& params, const Window& window);

/// The six unit-parameter tables, in the order α, α†, β, β†, γ, γ†.
std::array<RhoParams, 6> rho_unit_params();

struct VerdictReport {
    bool skew = false;
    bool even_parity = false;
    bool cybe_zero = false;
    bool mybe_empty = false;
    bool co_jacobi_zero = false;
    bool compatibility_zero = false;
    bool verdict = false;  ///< triangular coboundary superbialgebra on the window
};

/// Checks that need an even r are reported false for odd or mixed r.
VerdictReport superbialgebra_verdict(const AlgebraSpec& spec, const Tensor2& r, const Window& window);

}  // namespace superbi
