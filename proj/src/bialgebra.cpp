#include "superbi/bialgebra.hpp"

namespace superbi {

Tensor2 delta_r(StructureConstants& sc, const Tensor2& r, const Element& x) {
    require_even(r);
    return diag_act(sc, x, r);
}

Tensor2 delta_r(const AlgebraSpec& spec, const Tensor2& r, const Element& x) {
    StructureConstants sc(spec);
    return delta_r(sc, r, x);
}

Tensor3 co_jacobi_defect(StructureConstants& sc, const Tensor2& r, const Element& x) {
    Tensor2 dx = delta_r(sc, r, x);
    // Δ_r is even, so (1⊗Δ)(a⊗b) = a⊗Δ(b) with no sign.
    Tensor3 t;
    std::map<BasisKey, Tensor2> memo;
    for (const auto& [k, c] : dx) {
        auto it = memo.find(k[1]);
        if (it == memo.end()) it = memo.emplace(k[1], diag_act(sc, k[1], r)).first;
        for (const auto& [kb, cb] : it->second) t.add({k[0], kb[0], kb[1]}, c * cb);
    }
    Tensor3 xi = tensor3_cyclic(t);
    return t + xi + tensor3_cyclic(xi);
}

Tensor3 co_jacobi_defect(const AlgebraSpec& spec, const Tensor2& r, const Element& x) {
    StructureConstants sc(spec);
    return co_jacobi_defect(sc, r, x);
}

bool lemma_identity_check(const AlgebraSpec& spec, const Tensor2& r, const Element& x) {
    require_even(r);
    if (!is_super_skew(r)) throw std::invalid_argument("lemma identity needs a skew r");
    StructureConstants sc(spec);
    return co_jacobi_defect(sc, r, x) == diag_act(sc, x, cybe(sc, r));
}

Tensor2 compatibility_defect(StructureConstants& sc, const Tensor2& r, const Element& x, const Element& y) {
    require_homogeneous(x, "x");
    require_homogeneous(y, "y");
    Tensor2 out = delta_r(sc, r, sc.bracket(x, y));
    out -= diag_act(sc, x, delta_r(sc, r, y));
    Tensor2 tail = diag_act(sc, y, delta_r(sc, r, x));
    if (*x.parity() & *y.parity())
        out -= tail;
    else
        out += tail;
    return out;
}

Tensor2 compatibility_defect(const AlgebraSpec& spec, const Tensor2& r, const Element& x, const Element& y) {
    StructureConstants sc(spec);
    return compatibility_defect(sc, r, x, y);
}

DerivationTable inner_derivation(const AlgebraSpec& spec, const Tensor2& a, const Window& window) {
    StructureConstants sc(spec);
    return inner_derivation(sc, a, window.domain);
}

DerivationTable rho(const RhoParams& p, const Window& window) {
    DerivationTable t;
    t.domain = window.domain;
    const BasisKey i0 = I(0);
    for (std::int64_t n = -(window.domain.doubled / 2); n <= window.domain.doubled / 2; ++n) {
        Scalar sn(n);
        Tensor2 vl = tensor_of(i0, I(n), sn * p.alpha + p.gamma) + tensor_of(I(n), i0, sn * p.alpha_dagger + p.gamma_dagger);
        Tensor2 vi = tensor_of(i0, I(n), p.beta) + tensor_of(I(n), i0, p.beta_dagger);
        t.set(L(n), std::move(vl));
        t.set(I(n), std::move(vi));
    }
    return t;
}

std::array<RhoParams, 6> rho_unit_params() {
    std::array<RhoParams, 6> out{};
    out[0].alpha = 1;
    out[1].alpha_dagger = 1;
    out[2].beta = 1;
    out[3].beta_dagger = 1;
    out[4].gamma = 1;
    out[5].gamma_dagger = 1;
    return out;
}

VerdictReport superbialgebra_verdict(const AlgebraSpec& spec, const Tensor2& r, const Window& window) {
    VerdictReport rep;
    rep.skew = is_super_skew(r);
    auto parity = r.parity();
    rep.even_parity = parity && *parity == 0;
    if (rep.even_parity) {
        StructureConstants sc(spec);
        Tensor3 c = cybe(sc, r);
        rep.cybe_zero = c.is_zero();
        auto keys = basis_keys(spec, window.domain);
        rep.mybe_empty = true;
        rep.co_jacobi_zero = true;
        for (const auto& x : keys) {
            Element ex = element_of(x);
            if (!c.is_zero() && !diag_act(sc, x, c).is_zero()) rep.mybe_empty = false;
            if (rep.co_jacobi_zero && !co_jacobi_defect(sc, r, ex).is_zero()) rep.co_jacobi_zero = false;
        }
        rep.compatibility_zero = true;
        for (const auto& x : keys) {
            for (const auto& y : keys)
                if (!compatibility_defect(sc, r, element_of(x), element_of(y)).is_zero()) {
                    rep.compatibility_zero = false;
                    break;
                }
            if (!rep.compatibility_zero) break;
        }
    }
    rep.verdict = rep.skew && rep.even_parity && rep.cybe_zero;
    return rep;
}

}  // namespace superbi
