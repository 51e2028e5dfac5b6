#include "superbi/tensor_ops.hpp"

namespace superbi {

Tensor2 tensor2_twist(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t) {
        bool neg = key_parity(k[0]) & key_parity(k[1]);
        out.add({k[1], k[0]}, neg ? -c : c);
    }
    return out;
}

Tensor3 tensor3_cyclic(const Tensor3& t) {
    Tensor3 out;
    for (const auto& [k, c] : t) {
        bool neg = key_parity(k[0]) & (key_parity(k[1]) ^ key_parity(k[2]));
        out.add({k[1], k[2], k[0]}, neg ? -c : c);
    }
    return out;
}

void require_homogeneous(const Element& x, const char* what) {
    if (!x.parity()) throw std::invalid_argument(std::string(what) + " is not parity-homogeneous");
}

Tensor2 diag_act2(const AlgebraSpec& spec, const Element& x, const Tensor2& t) {
    StructureConstants sc(spec);
    return diag_act(sc, x, t);
}

Tensor3 diag_act3(const AlgebraSpec& spec, const Element& x, const Tensor3& t) {
    StructureConstants sc(spec);
    return diag_act(sc, x, t);
}

bool is_super_skew(const Tensor2& t) { return (t + tensor2_twist(t)).is_zero(); }

Tensor2 skewize(const Tensor2& t) { return t - tensor2_twist(t); }

void require_even(const Tensor2& r) {
    auto p = r.parity();
    if (!p || *p != 0) throw std::invalid_argument("r must have even total parity");
}

Tensor3 cybe(StructureConstants& sc, const Tensor2& r) {
    require_even(r);
    Tensor3 out;
    for (const auto& [ki, ci] : r) {
        const BasisKey &ai = ki[0], &bi = ki[1];
        for (const auto& [kj, cj] : r) {
            const BasisKey &aj = kj[0], &bj = kj[1];
            Scalar c = ci * cj;
            Scalar signed_c = (key_parity(aj) & key_parity(bi)) ? -c : c;
            for (const auto& [k, v] : sc(ai, aj)) out.add({k, bi, bj}, signed_c * v);
            for (const auto& [k, v] : sc(bi, aj)) out.add({ai, k, bj}, c * v);
            for (const auto& [k, v] : sc(bi, bj)) out.add({ai, aj, k}, signed_c * v);
        }
    }
    return out;
}

Tensor3 cybe(const AlgebraSpec& spec, const Tensor2& r) {
    StructureConstants sc(spec);
    return cybe(sc, r);
}

std::vector<std::pair<BasisKey, Tensor3>> mybe_defect(const AlgebraSpec& spec, const Tensor2& r,
                                                      const Window& window) {
    StructureConstants sc(spec);
    Tensor3 c = cybe(sc, r);
    std::vector<std::pair<BasisKey, Tensor3>> out;
    if (c.is_zero()) return out;
    for (const auto& x : basis_keys(spec, window.domain)) {
        Tensor3 v = diag_act(sc, x, c);
        if (!v.is_zero()) out.emplace_back(x, std::move(v));
    }
    return out;
}

}  // namespace superbi
