#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "superbi/bialgebra.hpp"
#include "superbi/presets.hpp"

using namespace superbi;

namespace {

const AlgebraSpec& ns2() {
    static const AlgebraSpec s = preset("ns2-centerless");
    return s;
}

const Tensor2 kTri = tensor_of(L(0), L(1)) - tensor_of(L(1), L(0));
const Tensor2 kNonTri = tensor_of(L(-1), L(1)) - tensor_of(L(1), L(-1));

// Skew even r, mixing even⊗even and odd⊗odd terms across degrees up to 3.
std::vector<Tensor2> sample_skew(int count, unsigned seed) {
    std::mt19937 rng(seed);
    auto keys = basis_keys(ns2(), HalfInt::from_int(3));
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Tensor2> out;
    while (static_cast<int>(out.size()) < count) {
        Tensor2 t;
        for (int i = 0; i < 3; ++i) {
            BasisKey a = keys[pick(rng)], b = keys[pick(rng)];
            if (key_parity(a) != key_parity(b)) continue;
            t.add({a, b}, Scalar(coeff(rng)));
        }
        Tensor2 r = skewize(t);
        if (!r.is_zero()) out.push_back(r);
    }
    return out;
}

// x ∗ t on Tensor3, written from the three-factor Koszul rule with the oracle bracket.
Tensor3 oracle_act3(const BasisKey& x, const Tensor3& t) {
    Tensor3 out;
    for (const auto& [k, c] : t) {
        int passed = 0;
        for (int i = 0; i < 3; ++i) {
            Scalar s = (key_parity(x) & passed) ? -c : c;
            for (const auto& [e, ce] : oracle::ns2_bracket(x, k[i], false)) {
                auto nk = k;
                nk[i] = e[0];
                out.add(nk, s * ce);
            }
            passed ^= key_parity(k[i]);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("delta_r examples") {
    const AlgebraSpec& s = ns2();
    CHECK(delta_r(s, kTri, element_of(L(1))).is_zero());
    CHECK(delta_r(s, kTri, Element{}).is_zero());
    CHECK(delta_r(s, kTri, element_of(L(-1))) == tensor_of(L(1), L(-1)) - tensor_of(L(-1), L(1)));
    CHECK_THROWS_AS(delta_r(s, tensor_of(L(0), Gp(1)), element_of(L(1))), std::invalid_argument);
}

TEST_CASE("co-Jacobi defect examples") {
    const AlgebraSpec& s = ns2();
    CHECK(co_jacobi_defect(s, kTri, element_of(L(-1))).is_zero());
    CHECK(co_jacobi_defect(s, Tensor2{}, element_of(Gp(1))).is_zero());
    bool some_nonzero = false;
    for (const auto& x : basis_keys(s, HalfInt::from_int(2)))
        some_nonzero |= !co_jacobi_defect(s, kNonTri, element_of(x)).is_zero();
    CHECK(some_nonzero);
}

TEST_CASE("lemma identity: co-Jacobi defect equals x acting on c(r)") {
    const AlgebraSpec& s = ns2();
    CHECK(lemma_identity_check(s, kTri, element_of(L(2))));
    CHECK(lemma_identity_check(s, Tensor2{}, element_of(Gm(3))));
    CHECK_THROWS_AS(lemma_identity_check(s, tensor_of(L(0), L(0)), element_of(L(1))), std::invalid_argument);
    StructureConstants sc(s);
    auto keys = basis_keys(s, HalfInt::from_int(2));
    for (const auto& r : sample_skew(8, 17)) {
        Tensor3 c = oracle::cybe_by_expansion(r, [](const BasisKey& a, const BasisKey& b) {
            return oracle::ns2_bracket(a, b, false);
        });
        for (const auto& x : keys) {
            INFO(to_string(r) << " with x = " << x.to_string());
            CHECK(co_jacobi_defect(sc, r, element_of(x)) == oracle_act3(x, c));
        }
    }
}

TEST_CASE("compatibility defect vanishes for coboundaries") {
    const AlgebraSpec& s = ns2();
    StructureConstants sc(s);
    CHECK(compatibility_defect(s, Tensor2{}, element_of(L(1)), element_of(L(-1))).is_zero());
    auto keys = basis_keys(s, HalfInt::from_int(2));
    for (const auto& r : sample_skew(3, 4)) {
        CHECK(compatibility_defect(sc, r, element_of(L(1)), element_of(L(-1))).is_zero());
        CHECK(compatibility_defect(sc, r, element_of(Gp(1)), element_of(Gm(1))).is_zero());
        for (const auto& x : keys)
            for (const auto& y : keys) CHECK(compatibility_defect(sc, r, element_of(x), element_of(y)).is_zero());
    }
    CHECK_THROWS_AS(compatibility_defect(s, kTri, element_of(L(1)) + element_of(Gp(1)), element_of(L(0))),
                    std::invalid_argument);
}

TEST_CASE("coboundaries of skew r are skew") {
    const AlgebraSpec& s = ns2();
    StructureConstants sc(s);
    for (const auto& r : sample_skew(5, 8))
        for (const auto& x : basis_keys(s, HalfInt::from_int(3))) CHECK(is_super_skew(delta_r(sc, r, element_of(x))));
}

TEST_CASE("inner derivations") {
    const AlgebraSpec& s = ns2();
    Window w = Window::make(HalfInt::from_int(3), HalfInt::from_int(5), HalfInt::from_int(2));
    DerivationTable t = inner_derivation(s, tensor_of(I(0), I(0)), w);
    CHECK(t.degree == HalfInt{});
    CHECK(t.parity == 0);
    for (std::int64_t n = -3; n <= 3; ++n) {
        CHECK(t.value(L(n)).is_zero());
        CHECK(t.value(I(n)).is_zero());
    }
    for (std::int64_t r = -5; r <= 5; r += 2)
        CHECK(t.value(Gp(r)) == -tensor_of(Gp(r), I(0)) - tensor_of(I(0), Gp(r)));
    CHECK(inner_derivation(s, Tensor2{}, w).is_zero());
    DerivationTable u = inner_derivation(s, skewize(tensor_of(L(-1), L(1))), w);
    CHECK(u.value(L(0)).is_zero());
    CHECK_THROWS_AS(t.value(L(4)), OutOfWindowError);
    CHECK_THROWS_AS(inner_derivation(s, tensor_of(L(0), L(1)) + tensor_of(L(0), L(2)), w), std::invalid_argument);
}

TEST_CASE("inner derivations have zero defect") {
    const AlgebraSpec& s = ns2();
    StructureConstants sc(s);
    HalfInt domain = HalfInt::from_int(3);
    std::vector<Tensor2> samples = {kTri, tensor_of(Gp(1), L(2)) - tensor_of(L(2), Gp(1)), tensor_of(Gm(-1), I(1)),
                                    tensor_of(Gp(1), Gm(-3))};
    for (const auto& a : samples) {
        DerivationTable d = inner_derivation(sc, a, domain);
        for (const auto& x : basis_keys(s, domain))
            for (const auto& y : basis_keys(s, domain)) {
                HalfInt sum = key_degree(x) + key_degree(y);
                if (sum.abs() > domain && !sc(x, y).empty()) {
                    CHECK_THROWS_AS(derivation_defect(sc, d, x, y), OutOfWindowError);
                    continue;
                }
                CHECK(derivation_defect(sc, d, x, y).is_zero());
            }
    }
    // adjoint coefficients
    AdjointDerivationTable ad = inner_derivation(sc, element_of(Gp(1)), domain);
    CHECK(ad.parity == 1);
    for (const auto& x : basis_keys(s, HalfInt::from_int(1)))
        for (const auto& y : basis_keys(s, HalfInt::from_int(1))) CHECK(derivation_defect(sc, ad, x, y).is_zero());
}

TEST_CASE("rho examples and derivation property on the even part") {
    const AlgebraSpec& thv = preset("thv-centerless");
    Window w = Window::uniform(HalfInt::from_int(12));
    RhoParams beta{};
    beta.beta = 1;
    CHECK(rho(beta, w).value(I(2)) == tensor_of(I(0), I(2)));
    CHECK(rho(RhoParams{}, w).is_zero());

    StructureConstants sc(thv);
    auto units = rho_unit_params();
    for (const auto& p : units) {
        DerivationTable d = rho(p, w);
        CHECK(d.degree == HalfInt{});
        CHECK(d.parity == 0);
        for (const auto& [k, v] : d.values) {
            CHECK(v.degree() == key_degree(k));
            CHECK(v.parity() == Parity{0});
        }
        for (std::int64_t m = -6; m <= 6; ++m)
            for (std::int64_t n = -6; n <= 6; ++n)
                for (const auto& x : {L(m), I(m)})
                    for (const auto& y : {L(n), I(n)}) CHECK(derivation_defect(sc, d, x, y).is_zero());
    }

    // hand expansion for α: both sides equal (m²-n²) I0⊗I(m+n)
    RhoParams alpha{};
    alpha.alpha = 1;
    DerivationTable d = rho(alpha, w);
    CHECK(d.value(L(2)) == tensor_of(I(0), I(2), 2));
    for (std::int64_t m = -6; m <= 6; ++m)
        for (std::int64_t n = -6; n <= 6; ++n) {
            Tensor2 lhs = diag_act(sc, element_of(L(m)), d.value(L(n))) - diag_act(sc, element_of(L(n)), d.value(L(m)));
            CHECK(lhs == tensor_of(I(0), I(m + n), Scalar((m - n) * (m + n))));
        }

    // against ns2 the odd keys carry no value, and the defect on even pairs still vanishes
    StructureConstants sc_ns2(ns2());
    DerivationTable g = rho(units[4], w);
    CHECK(g.value(Gp(1)).is_zero());
    for (std::int64_t m = -6; m <= 6; ++m)
        for (std::int64_t n = -6; n <= 6; ++n) CHECK(derivation_defect(sc_ns2, g, L(m), I(n)).is_zero());
}

TEST_CASE("superbialgebra verdict") {
    const AlgebraSpec& s = ns2();
    Window w = Window::uniform(HalfInt::from_int(2));
    VerdictReport tri = superbialgebra_verdict(s, kTri, w);
    CHECK(tri.skew);
    CHECK(tri.even_parity);
    CHECK(tri.cybe_zero);
    CHECK(tri.mybe_empty);
    CHECK(tri.co_jacobi_zero);
    CHECK(tri.compatibility_zero);
    CHECK(tri.verdict);

    VerdictReport sym = superbialgebra_verdict(s, tensor_of(L(0), L(0)), w);
    CHECK_FALSE(sym.skew);
    CHECK_FALSE(sym.verdict);

    CHECK(superbialgebra_verdict(s, Tensor2{}, w).verdict);

    VerdictReport non = superbialgebra_verdict(s, kNonTri, w);
    CHECK(non.skew);
    CHECK_FALSE(non.cybe_zero);
    CHECK_FALSE(non.mybe_empty);
    CHECK_FALSE(non.co_jacobi_zero);
    CHECK(non.compatibility_zero);
    CHECK_FALSE(non.verdict);

    VerdictReport odd = superbialgebra_verdict(s, tensor_of(L(0), Gp(1)), w);
    CHECK_FALSE(odd.even_parity);
    CHECK_FALSE(odd.verdict);
}
