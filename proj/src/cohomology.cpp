#include "superbi/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "superbi/linalg.hpp"
#include "superbi/tensor_ops.hpp"

namespace superbi {

BlockPart block_part(Family f) {
    switch (f) {
        case Family::Gplus: return BlockPart::Gplus;
        case Family::Gminus: return BlockPart::Gminus;
        default: return BlockPart::Even;
    }
}

namespace {

std::string_view part_name(BlockPart p) {
    switch (p) {
        case BlockPart::Even: return "even";
        case BlockPart::Gplus: return "G+";
        case BlockPart::Gminus: return "G-";
    }
    return "?";
}

BlockPart parse_part(std::string_view s) {
    if (s == "even") return BlockPart::Even;
    if (s == "G+") return BlockPart::Gplus;
    if (s == "G-") return BlockPart::Gminus;
    throw std::invalid_argument("unknown block part '" + std::string(s) + "' (expected even, G+ or G-)");
}

}  // namespace

CoeffDescriptor CoeffDescriptor::parse(std::string_view text) {
    if (text == "adjoint") return adjoint();
    if (text == "tensor2") return tensor_square();
    constexpr std::string_view prefix = "block:";
    if (text.substr(0, prefix.size()) != prefix)
        throw std::invalid_argument("unknown coefficient module '" + std::string(text) +
                                    "' (expected adjoint, tensor2 or block:X.Y)");
    std::vector<std::pair<BlockPart, BlockPart>> blocks;
    std::string_view rest = text.substr(prefix.size());
    while (true) {
        std::size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        // "G+.G-": split on the dot that follows the first part
        std::size_t dot = item.find('.');
        if (dot == std::string_view::npos) throw std::invalid_argument("block needs the form X.Y");
        blocks.emplace_back(parse_part(item.substr(0, dot)), parse_part(item.substr(dot + 1)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return sub_block(std::move(blocks));
}

std::string CoeffDescriptor::to_string() const {
    switch (kind) {
        case Kind::Adjoint: return "adjoint";
        case Kind::TensorSquare: return "tensor2";
        case Kind::SubBlock: break;
    }
    std::string out = "block:";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ",";
        out += std::string(part_name(blocks[i].first)) + "." + std::string(part_name(blocks[i].second));
    }
    return out;
}

bool CoeffDescriptor::admits(const BasisKey& a, const BasisKey& b) const {
    if (kind != Kind::SubBlock) return true;
    for (const auto& [x, y] : blocks)
        if (block_part(a.family) == x && block_part(b.family) == y) return true;
    return false;
}

namespace {

Parity degree_parity(HalfInt degree) { return static_cast<Parity>(degree.doubled & 1); }

std::vector<BasisKey> domain_keys(const AlgebraSpec& spec, const CoeffDescriptor& coeff, HalfInt bound) {
    std::vector<BasisKey> out;
    for (const auto& k : basis_keys(spec, bound))
        if (!coeff.even_domain() || key_parity(k) == 0) out.push_back(k);
    return out;
}

/// Module elements with every factor inside the box, grouped by total degree.
template <std::size_t N>
std::map<HalfInt, std::vector<KeyTuple<N>>> module_box(const AlgebraSpec& spec, const CoeffDescriptor& coeff,
                                                       HalfInt bound) {
    std::map<HalfInt, std::vector<KeyTuple<N>>> out;
    auto keys = basis_keys(spec, bound);
    if constexpr (N == 1) {
        for (const auto& a : keys) out[key_degree(a)].push_back({a});
    } else {
        for (const auto& a : keys)
            for (const auto& b : keys)
                if (coeff.admits(a, b)) out[key_degree(a) + key_degree(b)].push_back({a, b});
    }
    return out;
}

template <std::size_t N>
bool tuple_in_box(const KeyTuple<N>& k, HalfInt bound) {
    for (const auto& key : k)
        if (key_degree(key).abs() > bound) return false;
    return true;
}

/// Column layout and constraint list of one windowed derivation problem.
template <std::size_t N>
struct System {
    HalfInt degree{};
    Parity parity = 0;
    Window window{};
    bool even_only = false;
    std::vector<BasisKey> keys;  ///< domain keys in column order
    std::vector<std::uint32_t> offset;
    std::vector<std::vector<KeyTuple<N>>> allowed;
    std::map<BasisKey, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t dropped = 0;
    std::size_t dropped_core = 0;

    std::uint32_t cols() const { return offset.back(); }

    std::optional<std::uint32_t> column(std::size_t key, const KeyTuple<N>& t) const {
        const auto& a = allowed[key];
        auto it = std::lower_bound(a.begin(), a.end(), t);
        if (it == a.end() || *it != t) return std::nullopt;
        return offset[key] + static_cast<std::uint32_t>(it - a.begin());
    }

    std::pair<std::size_t, std::size_t> locate(std::uint32_t col) const {
        std::size_t i = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), col) - offset.begin()) - 1;
        return {i, col - offset[i]};
    }
};

template <std::size_t N>
System<N> build_system(StructureConstants& sc, const CoeffDescriptor& coeff, HalfInt degree, const Window& window) {
    const AlgebraSpec& spec = sc.spec();
    System<N> sys;
    sys.degree = degree;
    sys.parity = degree_parity(degree);
    sys.window = window;
    sys.even_only = coeff.even_domain();
    auto box = module_box<N>(spec, coeff, window.codomain);

    std::vector<BasisKey> canonical = domain_keys(spec, coeff, window.domain);
    // Outer keys first: pivots then fall on large-degree values, which the
    // constraints express through values on small-degree keys.
    sys.keys = canonical;
    std::stable_sort(sys.keys.begin(), sys.keys.end(),
                     [](const BasisKey& a, const BasisKey& b) { return key_degree(a).abs() > key_degree(b).abs(); });
    sys.offset.push_back(0);
    for (std::size_t i = 0; i < sys.keys.size(); ++i) {
        const BasisKey& x = sys.keys[i];
        sys.index[x] = i;
        std::vector<KeyTuple<N>> allowed;
        auto it = box.find(key_degree(x) + degree);
        if (it != box.end())
            for (const auto& t : it->second)
                if (tuple_parity(t) == (key_parity(x) ^ sys.parity)) allowed.push_back(t);
        sys.offset.push_back(sys.offset.back() + static_cast<std::uint32_t>(allowed.size()));
        sys.allowed.push_back(std::move(allowed));
    }

    for (std::size_t a = 0; a < canonical.size(); ++a)
        for (std::size_t b = a; b < canonical.size(); ++b) {
            const BasisKey &x = canonical[a], &y = canonical[b];
            bool inside = true;
            for (const auto& [z, c] : sc(x, y))
                if (!sys.index.count(z)) inside = false;
            if (!inside) {
                ++sys.dropped;
                if (key_degree(x).abs() <= window.core && key_degree(y).abs() <= window.core) ++sys.dropped_core;
                continue;
            }
            sys.pairs.emplace_back(sys.index[x], sys.index[y]);
        }
    // Pairs containing a small-degree key first: their rows give short pivots.
    std::stable_sort(sys.pairs.begin(), sys.pairs.end(), [&](const auto& p, const auto& q) {
        auto key = [&](const std::pair<std::size_t, std::size_t>& r) {
            HalfInt u = key_degree(sys.keys[r.first]).abs(), v = key_degree(sys.keys[r.second]).abs();
            return std::make_pair(std::min(u, v), std::max(u, v));
        };
        return key(p) < key(q);
    });
    return sys;
}

template <std::size_t N>
using Contribution = std::tuple<KeyTuple<N>, std::uint32_t, Scalar>;

/// Emits the rows of one constraint pair: the components of
/// d([x,y]) - (-1)^{[d][x]} x∗d(y) + (-1)^{[y]([d]+[x])} y∗d(x).
template <std::size_t N>
void emit_pair_rows(StructureConstants& sc, const System<N>& sys, std::size_t xi, std::size_t yi,
                    std::vector<Contribution<N>>& buf, const std::function<void(const SparseVector&)>& emit) {
    const BasisKey &x = sys.keys[xi], &y = sys.keys[yi];
    buf.clear();
    for (const auto& [z, c] : sc(x, y)) {
        std::size_t zi = sys.index.at(z);
        for (std::size_t j = 0; j < sys.allowed[zi].size(); ++j)
            buf.emplace_back(sys.allowed[zi][j], sys.offset[zi] + static_cast<std::uint32_t>(j), c);
    }
    auto act = [&](const BasisKey& actor, std::size_t target, const Scalar& sign) {
        Tensor<N> image;
        for (std::size_t j = 0; j < sys.allowed[target].size(); ++j) {
            image = Tensor<N>();
            act_on_term(sc, actor, sys.allowed[target][j], sign, image);
            std::uint32_t col = sys.offset[target] + static_cast<std::uint32_t>(j);
            for (const auto& [k, c] : image) buf.emplace_back(k, col, c);
        }
    };
    Parity px = key_parity(x), py = key_parity(y);
    act(x, yi, (sys.parity & px) ? Scalar(1) : Scalar(-1));
    act(y, xi, (py & (sys.parity ^ px)) ? Scalar(-1) : Scalar(1));

    std::sort(buf.begin(), buf.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    SparseVector row;
    for (std::size_t i = 0; i < buf.size();) {
        std::size_t j = i;
        row.clear();
        while (j < buf.size() && std::get<0>(buf[j]) == std::get<0>(buf[i])) {
            std::uint32_t col = std::get<1>(buf[j]);
            Scalar sum;
            while (j < buf.size() && std::get<0>(buf[j]) == std::get<0>(buf[i]) && std::get<1>(buf[j]) == col) {
                sum += std::get<2>(buf[j]);
                ++j;
            }
            if (!sum.is_zero()) row.emplace_back(col, sum);
        }
        if (!row.empty()) emit(row);
        i = j;
    }
}

template <std::size_t N>
DerivationTableT<N> table_from_vector(const System<N>& sys, const SparseVector& v, HalfInt domain) {
    DerivationTableT<N> t;
    t.parity = sys.parity;
    t.degree = sys.degree;
    t.domain = domain;
    t.even_only = sys.even_only;
    for (const auto& [col, c] : v) {
        auto [i, j] = sys.locate(col);
        t.values[sys.keys[i]].add(sys.allowed[i][j], c);
    }
    for (auto it = t.values.begin(); it != t.values.end();)
        it = it->second.is_zero() ? t.values.erase(it) : std::next(it);
    return t;
}

/// Coordinates of a table on the keys with |degree| <= bound.
template <std::size_t N>
SparseVector vector_from_table(const System<N>& sys, const DerivationTableT<N>& t, HalfInt bound) {
    SparseVector v;
    for (const auto& [key, value] : t.values) {
        if (key_degree(key).abs() > bound) continue;
        auto it = sys.index.find(key);
        if (it == sys.index.end()) throw std::logic_error("table key outside the system domain");
        for (const auto& [k, c] : value) {
            auto col = sys.column(it->second, k);
            if (!col) throw std::logic_error("table value outside the system box: " + to_string(value));
            v.emplace_back(*col, c);
        }
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

template <std::size_t N>
struct Solved {
    System<N> sys;
    SolveReportT<N> report;
};

template <std::size_t N>
Solved<N> solve_impl(StructureConstants& sc, const CoeffDescriptor& coeff, HalfInt degree, const Window& window) {
    if (coeff.rank() != N) throw std::invalid_argument("coefficient module rank does not match the table rank");
    Solved<N> out{build_system<N>(sc, coeff, degree, window), {}};
    const System<N>& sys = out.sys;
    SolveReportT<N>& rep = out.report;
    rep.degree = degree;
    rep.window = window;
    rep.coeff = coeff;
    rep.unknowns = sys.cols();
    rep.constraint_pairs = sys.pairs.size();
    rep.dropped_pairs = sys.dropped;
    if (sys.dropped)
        rep.boundary_flags.push_back(std::to_string(sys.dropped) + " constraint pairs dropped: bracket leaves |deg| <= " +
                                     window.domain.to_string());
    if (sys.dropped_core)
        rep.boundary_flags.push_back(std::to_string(sys.dropped_core) +
                                     " dropped pairs lie entirely within the core |deg| <= " + window.core.to_string());

    std::vector<Contribution<N>> buf;
    RowSource rows = [&](const std::function<void(const SparseVector&)>& emit) {
        for (const auto& [a, b] : sys.pairs) emit_pair_rows(sc, sys, a, b, buf, emit);
    };
    for (const auto& v : nullspace(sys.cols(), rows))
        rep.solution_basis.push_back(table_from_vector(sys, v, window.domain));
    return out;
}

template <std::size_t N>
DerivationTableT<N> inner_table(StructureConstants& sc, const System<N>& sys, const Tensor<N>& a) {
    DerivationTableT<N> t;
    t.parity = sys.parity;
    t.degree = sys.degree;
    t.domain = sys.window.domain;
    t.even_only = sys.even_only;
    for (const auto& x : sys.keys) {
        Tensor<N> v = diag_act(sc, x, a);
        if (sys.parity & key_parity(x)) v *= Scalar(-1);
        t.set(x, std::move(v));
    }
    return t;
}

template <std::size_t N>
std::vector<DerivationTableT<N>> inner_impl(StructureConstants& sc, const System<N>& sys,
                                            const CoeffDescriptor& coeff) {
    auto box = module_box<N>(sc.spec(), coeff, sys.window.codomain);
    auto it = box.find(sys.degree);
    if (it == box.end()) return {};
    const auto& cand = it->second;
    // rows: components of a_inn(x) that leave the box must vanish
    std::map<std::pair<std::size_t, KeyTuple<N>>, std::map<std::uint32_t, Scalar>> rows;
    for (std::size_t j = 0; j < cand.size(); ++j)
        for (std::size_t i = 0; i < sys.keys.size(); ++i) {
            Tensor<N> v;
            act_on_term(sc, sys.keys[i], cand[j], Scalar(1), v);
            for (const auto& [k, c] : v)
                if (!tuple_in_box(k, sys.window.codomain)) rows[{i, k}][static_cast<std::uint32_t>(j)] += c;
        }
    SparseMatrix m;
    m.cols = static_cast<std::uint32_t>(cand.size());
    for (const auto& [key, r] : rows) {
        SparseVector v;
        for (const auto& [c, x] : r)
            if (!x.is_zero()) v.emplace_back(c, x);
        if (!v.empty()) m.rows.push_back(std::move(v));
    }
    std::vector<DerivationTableT<N>> out;
    for (const auto& v : nullspace(m)) {
        Tensor<N> a;
        for (const auto& [j, c] : v) a.add(cand[j], c);
        DerivationTableT<N> t = inner_table(sc, sys, a);
        if (!t.is_zero()) out.push_back(std::move(t));
    }
    return out;
}

SparseVector reduce_against(const SparseVector& v, const ReducedEchelon& e) {
    std::map<std::uint32_t, Scalar> acc(v.begin(), v.end());
    std::vector<std::pair<std::uint32_t, Scalar>> hits;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        auto it = acc.find(e.pivots[i]);
        if (it == acc.end() || it->second.is_zero()) continue;
        hits.emplace_back(static_cast<std::uint32_t>(i), it->second);
    }
    // RREF rows vanish on each other's pivots, so the original coefficients suffice
    for (const auto& [i, f] : hits)
        for (const auto& [c, x] : e.rows[i]) fused_add_mul(acc[c], -f, x);
    SparseVector out;
    for (const auto& [c, x] : acc)
        if (!x.is_zero()) out.emplace_back(c, x);
    return out;
}

}  // namespace

template <std::size_t N>
SolveReportT<N> solve_derivations(const AlgebraSpec& spec, const CoeffDescriptor& coeff, HalfInt degree,
                                  const Window& window) {
    StructureConstants sc(spec);
    return solve_impl<N>(sc, coeff, degree, window).report;
}

template <std::size_t N>
std::vector<DerivationTableT<N>> inner_space(const AlgebraSpec& spec, const CoeffDescriptor& coeff,
                                             HalfInt degree, const Window& window) {
    if (coeff.rank() != N) throw std::invalid_argument("coefficient module rank does not match the table rank");
    StructureConstants sc(spec);
    System<N> sys = build_system<N>(sc, coeff, degree, window);
    auto box = module_box<N>(spec, coeff, window.codomain);
    auto it = box.find(degree);
    std::vector<DerivationTableT<N>> out;
    if (it == box.end()) return out;
    for (const auto& k : it->second) {
        DerivationTableT<N> t = inner_table(sc, sys, Tensor<N>::basis(k));
        if (!t.is_zero()) out.push_back(std::move(t));
    }
    return out;
}

template <std::size_t N>
SolveReportT<N> h1_window(const AlgebraSpec& spec, const CoeffDescriptor& coeff, HalfInt degree,
                          const Window& window) {
    StructureConstants sc(spec);
    Solved<N> solved = solve_impl<N>(sc, coeff, degree, window);
    const System<N>& sys = solved.sys;
    SolveReportT<N> rep = std::move(solved.report);
    rep.inner_basis = inner_impl(sc, sys, coeff);

    SparseMatrix inner;
    inner.cols = sys.cols();
    for (const auto& t : rep.inner_basis) inner.rows.push_back(vector_from_table(sys, t, window.core));
    ReducedEchelon e = reduced_echelon(inner);

    SparseMatrix residual;
    residual.cols = sys.cols();
    for (const auto& t : rep.solution_basis) {
        SparseVector r = reduce_against(vector_from_table(sys, t, window.core), e);
        if (!r.empty()) residual.rows.push_back(std::move(r));
    }
    ReducedEchelon q = reduced_echelon(residual);
    rep.quotient_dimension = q.rank();
    for (const auto& r : q.rows) rep.quotient_representatives.push_back(table_from_vector(sys, r, window.core));
    return rep;
}

template <std::size_t N>
InnerReduction<N> reduce_nonzero_degree(const AlgebraSpec& spec, const DerivationTableT<N>& d, HalfInt core) {
    if (d.degree == HalfInt{}) throw std::invalid_argument("reduce_nonzero_degree needs a nonzero degree");
    InnerReduction<N> out;
    out.u = d.value(L(0)) * (Scalar(-1) / d.degree.to_scalar());
    StructureConstants sc(spec);
    Parity pu = degree_parity(d.degree);
    out.matches_on_core = true;
    for (const auto& x : basis_keys(spec, core)) {
        if (!d.in_domain(x)) continue;
        Tensor<N> v = diag_act(sc, x, out.u);
        if (pu & key_parity(x)) v *= Scalar(-1);
        if (v != d.value(x)) {
            out.matches_on_core = false;
            break;
        }
    }
    return out;
}

template <std::size_t N>
std::vector<Tensor<N>> invariant_space(const AlgebraSpec& spec, const CoeffDescriptor& coeff, const Window& window) {
    if (coeff.rank() != N) throw std::invalid_argument("coefficient module rank does not match the element rank");
    StructureConstants sc(spec);
    auto keys = domain_keys(spec, coeff, window.domain);
    std::vector<Tensor<N>> out;
    for (const auto& [deg, cand] : module_box<N>(spec, coeff, window.codomain)) {
        std::map<std::pair<std::size_t, KeyTuple<N>>, std::map<std::uint32_t, Scalar>> rows;
        for (std::size_t j = 0; j < cand.size(); ++j)
            for (std::size_t i = 0; i < keys.size(); ++i) {
                Tensor<N> v;
                act_on_term(sc, keys[i], cand[j], Scalar(1), v);
                for (const auto& [k, c] : v) rows[{i, k}][static_cast<std::uint32_t>(j)] += c;
            }
        SparseMatrix m;
        m.cols = static_cast<std::uint32_t>(cand.size());
        for (const auto& [key, r] : rows) {
            SparseVector v;
            for (const auto& [c, x] : r)
                if (!x.is_zero()) v.emplace_back(c, x);
            if (!v.empty()) m.rows.push_back(std::move(v));
        }
        for (const auto& v : nullspace(m)) {
            Tensor<N> t;
            for (const auto& [j, c] : v) t.add(cand[j], c);
            out.push_back(std::move(t));
        }
    }
    return out;
}

SkewClosureReport skew_closure_space(const AlgebraSpec& spec, const Window& window) {
    StructureConstants sc(spec);
    CoeffDescriptor coeff = CoeffDescriptor::tensor_square();
    auto keys = domain_keys(spec, coeff, window.domain);
    SkewClosureReport rep;
    rep.equal_on_core = true;
    for (const auto& [deg, cand] : module_box<2>(spec, coeff, window.codomain)) {
        std::map<std::pair<std::size_t, KeyTuple<2>>, std::map<std::uint32_t, Scalar>> closure_rows;
        std::map<KeyTuple<2>, std::map<std::uint32_t, Scalar>> skew_rows;
        for (std::size_t j = 0; j < cand.size(); ++j) {
            Tensor2 basis = Tensor2::basis(cand[j]);
            for (const auto& [k, c] : basis + tensor2_twist(basis)) skew_rows[k][static_cast<std::uint32_t>(j)] += c;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                Tensor2 v = diag_act(sc, keys[i], basis);
                for (const auto& [k, c] : v + tensor2_twist(v))
                    closure_rows[{i, k}][static_cast<std::uint32_t>(j)] += c;
            }
        }
        auto to_matrix = [&](const auto& rows) {
            SparseMatrix m;
            m.cols = static_cast<std::uint32_t>(cand.size());
            for (const auto& [key, r] : rows) {
                SparseVector v;
                for (const auto& [c, x] : r)
                    if (!x.is_zero()) v.emplace_back(c, x);
                if (!v.empty()) m.rows.push_back(std::move(v));
            }
            return m;
        };
        auto closure = nullspace(to_matrix(closure_rows));
        auto skew = nullspace(to_matrix(skew_rows));
        auto as_tensor = [&](const SparseVector& v) {
            Tensor2 t;
            for (const auto& [j, c] : v) t.add(cand[j], c);
            return t;
        };
        for (const auto& v : closure) rep.closure_basis.push_back(as_tensor(v));
        for (const auto& v : skew) rep.skew_basis.push_back(as_tensor(v));

        auto project = [&](const std::vector<SparseVector>& vs) {
            SparseMatrix m;
            m.cols = static_cast<std::uint32_t>(cand.size());
            for (const auto& v : vs) {
                SparseVector p;
                for (const auto& [j, c] : v)
                    if (tuple_in_box(cand[j], window.core)) p.emplace_back(j, c);
                m.rows.push_back(std::move(p));
            }
            return m;
        };
        SparseMatrix pc = project(closure), ps = project(skew), both = pc;
        both.rows.insert(both.rows.end(), ps.rows.begin(), ps.rows.end());
        std::size_t rc = rank(pc), rs = rank(ps), rb = rank(both);
        if (rc != rb || rs != rb) rep.equal_on_core = false;
    }
    return rep;
}

template SolveReportT<1> solve_derivations<1>(const AlgebraSpec&, const CoeffDescriptor&, HalfInt, const Window&);
template SolveReportT<2> solve_derivations<2>(const AlgebraSpec&, const CoeffDescriptor&, HalfInt, const Window&);
template std::vector<DerivationTableT<1>> inner_space<1>(const AlgebraSpec&, const CoeffDescriptor&, HalfInt,
                                                         const Window&);
template std::vector<DerivationTableT<2>> inner_space<2>(const AlgebraSpec&, const CoeffDescriptor&, HalfInt,
                                                         const Window&);
template SolveReportT<1> h1_window<1>(const AlgebraSpec&, const CoeffDescriptor&, HalfInt, const Window&);
template SolveReportT<2> h1_window<2>(const AlgebraSpec&, const CoeffDescriptor&, HalfInt, const Window&);
template InnerReduction<1> reduce_nonzero_degree<1>(const AlgebraSpec&, const DerivationTableT<1>&, HalfInt);
template InnerReduction<2> reduce_nonzero_degree<2>(const AlgebraSpec&, const DerivationTableT<2>&, HalfInt);
template std::vector<Tensor<1>> invariant_space<1>(const AlgebraSpec&, const CoeffDescriptor&, const Window&);
template std::vector<Tensor<2>> invariant_space<2>(const AlgebraSpec&, const CoeffDescriptor&, const Window&);

}  // namespace superbi
