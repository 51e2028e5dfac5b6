#include "superbi/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>

namespace superbi {

namespace {

// ---- fields ----

struct RationalField {
    using T = Scalar;
    static T zero() { return Scalar(); }
    static T one() { return Scalar(1); }
    static bool is_zero(const T& a) { return a.is_zero(); }
    static T inv(const T& a) { return a.inverse(); }
    static T mul(const T& a, const T& b) { return a * b; }
    static T neg(const T& a) { return -a; }
    // acc -= f * v
    static void sub_mul(T& acc, const T& f, const T& v) { fused_add_mul(acc, -f, v); }
};

// Integers modulo the Mersenne prime 2^61 - 1.
struct MersenneField {
    using T = std::uint64_t;
    static constexpr T P = (T{1} << 61) - 1;

    static T reduce(unsigned __int128 x) {
        T lo = static_cast<T>(x & P);
        T hi = static_cast<T>(x >> 61);
        T r = lo + hi;
        r = (r & P) + (r >> 61);
        return r >= P ? r - P : r;
    }
    static T zero() { return 0; }
    static T one() { return 1; }
    static bool is_zero(T a) { return a == 0; }
    static T mul(T a, T b) { return reduce(static_cast<unsigned __int128>(a) * b); }
    static T neg(T a) { return a == 0 ? 0 : P - a; }
    static T add(T a, T b) {
        T r = a + b;
        return r >= P ? r - P : r;
    }
    static void sub_mul(T& acc, T f, T v) { acc = add(acc, neg(mul(f, v))); }
    static T inv(T a) {
        if (a == 0) throw std::domain_error("inverse of zero");
        // extended Euclid on signed 128-bit values
        __int128 r0 = P, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            __int128 q = r0 / r1;
            __int128 r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            __int128 t2 = t0 - q * t1;
            t0 = t1;
            t1 = t2;
        }
        if (t0 < 0) t0 += P;
        return static_cast<T>(t0);
    }
    static T from_int(std::int64_t v) {
        if (v >= 0) return static_cast<T>(v) % P;
        T m = static_cast<T>(-(v + 1)) % P;  // avoids overflow at INT64_MIN
        return neg(add(m, 1));
    }
    static T from_scalar(const Scalar& s) {
        if (s.is_small()) return mul(from_int(s.small_numerator()), inv(from_int(s.small_denominator())));
        mpq_class q = s.to_mpq();
        mpz_class n = q.get_num() % mpz_class(static_cast<unsigned long>(P));
        if (n < 0) n += static_cast<unsigned long>(P);
        mpz_class d = q.get_den() % mpz_class(static_cast<unsigned long>(P));
        return mul(static_cast<T>(n.get_ui()), inv(static_cast<T>(d.get_ui())));
    }
};

// ---- online row echelon over a field ----

template <class F>
class Echelon {
public:
    using T = typename F::T;
    using Row = std::vector<std::pair<std::uint32_t, T>>;

    explicit Echelon(std::uint32_t cols) : cols_(cols), pivot_row_(cols, -1), acc_(cols, F::zero()), mark_(cols, 0) {}

    /// Reduces `row` against the current pivots; stores it if independent.
    bool insert(const Row& row) {
        for (const auto& [c, v] : row) {
            if (F::is_zero(v)) continue;
            acc_[c] = v;
            mark_[c] = 1;
            heap_.push(c);
        }
        while (!heap_.empty()) {
            std::uint32_t c = heap_.top();
            heap_.pop();
            mark_[c] = 0;
            T val = acc_[c];
            acc_[c] = F::zero();
            if (F::is_zero(val)) continue;
            int pr = pivot_row_[c];
            if (pr >= 0) {
                const Row& prow = rows_[pr];
                for (std::size_t i = 1; i < prow.size(); ++i) {
                    auto [col, v] = prow[i];
                    F::sub_mul(acc_[col], val, v);
                    if (!mark_[col]) {
                        mark_[col] = 1;
                        heap_.push(col);
                    }
                }
                continue;
            }
            T inv = F::inv(val);
            Row out;
            out.emplace_back(c, F::one());
            while (!heap_.empty()) {
                std::uint32_t d = heap_.top();
                heap_.pop();
                mark_[d] = 0;
                if (!F::is_zero(acc_[d])) out.emplace_back(d, F::mul(acc_[d], inv));
                acc_[d] = F::zero();
            }
            pivot_row_[c] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(out));
            return true;
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }

    /// Back-substitution; afterwards rows are fully reduced and sorted by pivot.
    void reduce() {
        std::vector<std::uint32_t> pivots;
        for (const auto& r : rows_) pivots.push_back(r.front().first);
        std::vector<std::size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] > pivots[b]; });
        std::vector<std::uint32_t> touched;
        for (std::size_t idx : order) {
            Row& r = rows_[idx];
            bool needs = false;
            for (std::size_t i = 1; i < r.size(); ++i)
                if (pivot_row_[r[i].first] >= 0) needs = true;
            if (!needs) continue;
            touched.clear();
            auto touch = [&](std::uint32_t col) {
                if (!mark_[col]) {
                    mark_[col] = 1;
                    touched.push_back(col);
                }
            };
            for (std::size_t i = 1; i < r.size(); ++i) {
                auto [col, v] = r[i];
                if (pivot_row_[col] >= 0) continue;
                acc_[col] = v;
                touch(col);
            }
            for (std::size_t i = 1; i < r.size(); ++i) {
                auto [col, v] = r[i];
                int pr = pivot_row_[col];
                if (pr < 0) continue;
                // rows with larger pivots are already reduced: free columns only
                const Row& prow = rows_[pr];
                for (std::size_t j = 1; j < prow.size(); ++j) {
                    auto [fc, fv] = prow[j];
                    F::sub_mul(acc_[fc], v, fv);
                    touch(fc);
                }
            }
            std::sort(touched.begin(), touched.end());
            Row out;
            out.emplace_back(r.front());
            for (std::uint32_t col : touched) {
                if (!F::is_zero(acc_[col])) out.emplace_back(col, acc_[col]);
                acc_[col] = F::zero();
                mark_[col] = 0;
            }
            r = std::move(out);
        }
        std::vector<Row> sorted;
        sorted.reserve(rows_.size());
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
        for (std::size_t idx : order) sorted.push_back(std::move(rows_[idx]));
        rows_ = std::move(sorted);
        for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].front().first] = static_cast<int>(i);
    }

    const std::vector<Row>& rows() const { return rows_; }
    bool is_pivot(std::uint32_t c) const { return pivot_row_[c] >= 0; }

    /// Kernel basis of the reduced system, one vector per free column.
    std::vector<Row> kernel() const {
        std::vector<std::int64_t> free_index(cols_, -1);
        std::vector<Row> ker;
        for (std::uint32_t c = 0; c < cols_; ++c)
            if (pivot_row_[c] < 0) {
                free_index[c] = static_cast<std::int64_t>(ker.size());
                ker.push_back(Row{{c, F::one()}});
            }
        for (const auto& r : rows_) {
            std::uint32_t p = r.front().first;
            for (std::size_t i = 1; i < r.size(); ++i) ker[free_index[r[i].first]].emplace_back(p, F::neg(r[i].second));
        }
        for (auto& v : ker) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return ker;
    }

private:
    std::uint32_t cols_;
    std::vector<int> pivot_row_;
    std::vector<Row> rows_;
    std::vector<T> acc_;
    std::vector<char> mark_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

Echelon<RationalField> exact_echelon(std::uint32_t cols, const RowSource& rows) {
    Echelon<RationalField> e(cols);
    rows([&](const SparseVector& r) { e.insert(r); });
    e.reduce();
    return e;
}

RowSource source_of(const SparseMatrix& m) {
    return [&m](const std::function<void(const SparseVector&)>& emit) {
        for (const auto& r : m.rows) emit(r);
    };
}

// ---- modular path ----

// Smallest |n|/d congruent to a modulo P with |n|, d <= sqrt(P/2).
std::optional<Scalar> reconstruct(std::uint64_t a) {
    constexpr std::int64_t bound = std::int64_t{1} << 30;  // floor(sqrt((2^61-1)/2))
    if (a == 0) return Scalar();
    __int128 r0 = MersenneField::P, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || t1 > bound || t1 < -bound) return std::nullopt;
    std::int64_t n = static_cast<std::int64_t>(r1), d = static_cast<std::int64_t>(t1);
    if (std::gcd(n, d) != 1) return std::nullopt;
    return Scalar(n, d);
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b, bool& ok) {
    std::int64_t g = std::gcd(a, b);
    __int128 l = static_cast<__int128>(a / g) * b;
    if (l > (std::int64_t{1} << 62)) {
        ok = false;
        return 1;
    }
    return static_cast<std::int64_t>(l);
}

// Exact check that every row annihilates every vector. Integer fast path with
// 128-bit accumulators; anything too large is checked with Scalars.
bool verify_kernel(std::uint32_t cols, const RowSource& rows, const std::vector<SparseVector>& ker) {
    if (ker.empty()) return true;
    constexpr std::int64_t kRowLimit = std::int64_t{1} << 31;
    // column-major integer image of the kernel
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> by_col(cols);
    std::vector<std::size_t> slow;
    for (std::size_t t = 0; t < ker.size(); ++t) {
        bool ok = true;
        std::int64_t l = 1;
        for (const auto& [c, v] : ker[t]) {
            if (!v.is_small()) {
                ok = false;
                break;
            }
            l = lcm_checked(l, v.small_denominator(), ok);
            if (!ok) break;
        }
        std::vector<std::pair<std::uint32_t, std::int64_t>> scaled;
        if (ok) {
            for (const auto& [c, v] : ker[t]) {
                __int128 x = static_cast<__int128>(v.small_numerator()) * (l / v.small_denominator());
                if (x > (std::int64_t{1} << 62) || x < -(std::int64_t{1} << 62)) {
                    ok = false;
                    break;
                }
                scaled.emplace_back(c, static_cast<std::int64_t>(x));
            }
        }
        if (!ok) {
            slow.push_back(t);
            continue;
        }
        for (const auto& [c, x] : scaled) by_col[c].emplace_back(static_cast<std::uint32_t>(t), x);
    }
    std::vector<__int128> acc(ker.size(), 0);
    std::vector<std::uint32_t> touched;
    bool all_zero = true;
    rows([&](const SparseVector& row) {
        if (!all_zero) return;
        bool ok = true;
        std::int64_t l = 1;
        for (const auto& [c, v] : row) {
            if (!v.is_small()) {
                ok = false;
                break;
            }
            l = lcm_checked(l, v.small_denominator(), ok);
            if (!ok) break;
        }
        bool fast = ok;
        if (fast) {
            touched.clear();
            for (const auto& [c, v] : row) {
                __int128 a = static_cast<__int128>(v.small_numerator()) * (l / v.small_denominator());
                if (a > kRowLimit || a < -kRowLimit) {
                    fast = false;
                    break;
                }
                for (const auto& [t, x] : by_col[c]) {
                    if (acc[t] == 0) touched.push_back(t);
                    acc[t] += a * x;
                }
            }
            bool zero = true;
            for (std::uint32_t t : touched) {
                if (acc[t] != 0) zero = false;
                acc[t] = 0;
            }
            if (fast && !zero) {
                all_zero = false;
                return;
            }
        }
        if (!fast) {
            for (std::size_t t = 0; t < ker.size(); ++t)
                if (!dot(row, ker[t]).is_zero()) all_zero = false;
            return;
        }
        for (std::size_t t : slow)
            if (!dot(row, ker[t]).is_zero()) all_zero = false;
    });
    return all_zero;
}

std::optional<std::vector<SparseVector>> modular_nullspace(std::uint32_t cols, const RowSource& rows) {
    Echelon<MersenneField> e(cols);
    Echelon<MersenneField>::Row row;
    rows([&](const SparseVector& r) {
        row.clear();
        for (const auto& [c, v] : r) row.emplace_back(c, MersenneField::from_scalar(v));
        e.insert(row);
    });
    e.reduce();
    std::vector<SparseVector> ker;
    for (const auto& v : e.kernel()) {
        SparseVector lifted;
        for (const auto& [c, x] : v) {
            auto q = reconstruct(x);
            if (!q) return std::nullopt;
            if (!q->is_zero()) lifted.emplace_back(c, *q);
        }
        ker.push_back(std::move(lifted));
    }
    // rank mod P <= rank over Q, so the exact kernel is at most this large;
    // verified lifts are independent (unit entries on free columns) and thus a basis.
    if (!verify_kernel(cols, rows, ker)) return std::nullopt;
    return ker;
}

constexpr std::size_t kModularThreshold = 2000;  // total nonzeros

}  // namespace

ReducedEchelon reduced_echelon(const SparseMatrix& m) {
    auto e = exact_echelon(m.cols, source_of(m));
    ReducedEchelon out;
    out.cols = m.cols;
    for (const auto& r : e.rows()) {
        out.pivots.push_back(r.front().first);
        out.rows.push_back(r);
    }
    return out;
}

std::vector<SparseVector> nullspace_exact(const SparseMatrix& m) {
    return exact_echelon(m.cols, source_of(m)).kernel();
}

std::vector<SparseVector> nullspace(std::uint32_t cols, const RowSource& rows) {
    std::size_t nnz = 0;
    rows([&](const SparseVector& r) { nnz += r.size(); });
    if (nnz >= kModularThreshold)
        if (auto ker = modular_nullspace(cols, rows)) return *ker;
    return exact_echelon(cols, rows).kernel();
}

std::vector<SparseVector> nullspace(const SparseMatrix& m) { return nullspace(m.cols, source_of(m)); }

std::size_t rank(const SparseMatrix& m) {
    Echelon<RationalField> e(m.cols);
    for (const auto& r : m.rows) e.insert(r);
    return e.rank();
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
    Scalar s;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            ++i;
        else if (a[i].first > b[j].first)
            ++j;
        else {
            fused_add_mul(s, a[i].second, b[j].second);
            ++i;
            ++j;
        }
    }
    return s;
}

bool annihilates(const SparseMatrix& m, const SparseVector& v) {
    for (const auto& r : m.rows)
        if (!dot(r, v).is_zero()) return false;
    return true;
}

std::vector<std::vector<Scalar>> rational_nullspace(const std::vector<std::vector<Scalar>>& matrix,
                                                    std::size_t cols) {
    SparseMatrix m;
    m.cols = static_cast<std::uint32_t>(cols);
    for (const auto& row : matrix) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
        SparseVector r;
        for (std::size_t c = 0; c < cols; ++c)
            if (!row[c].is_zero()) r.emplace_back(static_cast<std::uint32_t>(c), row[c]);
        m.rows.push_back(std::move(r));
    }
    std::vector<std::vector<Scalar>> out;
    for (const auto& v : nullspace_exact(m)) {
        std::vector<Scalar> dense(cols);
        for (const auto& [c, x] : v) dense[c] = x;
        out.push_back(std::move(dense));
    }
    return out;
}

}  // namespace superbi
