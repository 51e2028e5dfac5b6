#pragma once
// Span comparisons between derivation tables, over keys within a bound.

#include <map>
#include <vector>

#include "superbi/bialgebra.hpp"
#include "superbi/linalg.hpp"

namespace superbi {

// Flattens tables into one shared coordinate system so spans can be compared.
template <std::size_t N>
struct Coords {
    std::map<std::pair<BasisKey, KeyTuple<N>>, std::uint32_t> index;

    SparseVector vec(const DerivationTableT<N>& t, HalfInt bound) {
        std::map<std::uint32_t, Scalar> acc;
        for (const auto& [key, value] : t.values) {
            if (key_degree(key).abs() > bound) continue;
            for (const auto& [k, c] : value) {
                auto [it, fresh] = index.try_emplace({key, k}, static_cast<std::uint32_t>(index.size()));
                acc[it->second] += c;
            }
        }
        SparseVector v;
        for (const auto& [i, c] : acc)
            if (!c.is_zero()) v.emplace_back(i, c);
        return v;
    }
};

template <std::size_t N>
inline std::size_t span_rank(Coords<N>& co, const std::vector<DerivationTableT<N>>& ts, HalfInt bound) {
    SparseMatrix m;
    for (const auto& t : ts) m.rows.push_back(co.vec(t, bound));
    m.cols = static_cast<std::uint32_t>(co.index.size());
    return rank(m);
}

// True iff every table of `sub` lies in the span of `sup` over keys within `bound`.
template <std::size_t N>
inline bool spans(const std::vector<DerivationTableT<N>>& sup, const std::vector<DerivationTableT<N>>& sub, HalfInt bound) {
    Coords<N> co;
    std::size_t base = span_rank(co, sup, bound);
    auto both = sup;
    both.insert(both.end(), sub.begin(), sub.end());
    return span_rank(co, both, bound) == base;
}

}  // namespace superbi
