#include "superbi/consistency.hpp"

namespace superbi {

namespace {

Element bracket_key_element(StructureConstants& sc, const BasisKey& a, const Element& y) {
    Element out;
    for (const auto& [k, c] : y)
        for (const auto& [t, v] : sc(a, k[0])) out.add({t}, c * v);
    return out;
}

Element bracket_element_key(StructureConstants& sc, const Element& x, const BasisKey& b) {
    Element out;
    for (const auto& [k, c] : x)
        for (const auto& [t, v] : sc(k[0], b)) out.add({t}, c * v);
    return out;
}

Element to_element(const StructureConstants::Terms& terms) {
    Element e;
    for (const auto& [k, c] : terms) e.add({k}, c);
    return e;
}

}  // namespace

ConsistencyReport check_spec_consistency(const AlgebraSpec& spec, HalfInt bound) {
    ConsistencyReport report;
    report.bound = bound;
    StructureConstants sc(spec);
    auto keys = basis_keys(spec, bound);
    report.keys = keys.size();

    for (const auto& a : keys)
        for (const auto& b : keys) {
            ++report.pairs_checked;
            if (report.skew_failure) continue;
            Element ab = to_element(sc(a, b));
            Element ba = to_element(sc(b, a));
            Element defect = (key_parity(a) & key_parity(b)) ? ab - ba : ab + ba;
            if (!defect.is_zero()) report.skew_failure = SkewFailure{a, b, defect};
        }

    for (const auto& a : keys)
        for (const auto& b : keys) {
            Element ab = to_element(sc(a, b));
            bool neg = key_parity(a) & key_parity(b);
            for (const auto& c : keys) {
                ++report.triples_checked;
                if (report.jacobi_failure) continue;
                Element defect = bracket_key_element(sc, a, to_element(sc(b, c)));
                defect -= bracket_element_key(sc, ab, c);
                Element third = bracket_key_element(sc, b, to_element(sc(a, c)));
                if (neg)
                    defect += third;
                else
                    defect -= third;
                if (!defect.is_zero()) report.jacobi_failure = JacobiFailure{a, b, c, defect};
            }
        }
    return report;
}

}  // namespace superbi
