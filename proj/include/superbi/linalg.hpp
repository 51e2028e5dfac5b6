#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "superbi/scalar.hpp"

namespace superbi {

/// Sparse vector: strictly increasing column indices, no stored zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

struct SparseMatrix {
    std::uint32_t cols = 0;
    std::vector<SparseVector> rows;
};

/// Reduced row echelon form. rows[i] has leading entry 1 at pivots[i];
/// pivots are increasing and every pivot column is zero in the other rows.
struct ReducedEchelon {
    std::uint32_t cols = 0;
    std::vector<std::uint32_t> pivots;
    std::vector<SparseVector> rows;

    std::size_t rank() const { return pivots.size(); }
};

/// Exact RREF by fraction-preserving elimination. Rows are consumed in order
/// and each is reduced against the current pivots (smallest column first), so
/// the result is deterministic.
ReducedEchelon reduced_echelon(const SparseMatrix& m);

/// Kernel basis in canonical form: one vector per non-pivot column f of the
/// RREF, with entry 1 at f and zero at every other non-pivot column. Vectors
/// are ordered by f. Large systems are solved modulo a prime first and the
/// lifted basis is verified exactly against every row; on any failure the
/// exact elimination is used instead, so the result is always exact.
std::vector<SparseVector> nullspace(const SparseMatrix& m);

/// Same as nullspace() but always by exact elimination.
std::vector<SparseVector> nullspace_exact(const SparseMatrix& m);

/// Streams every row of a matrix to the callback, in the same order on every
/// call. Lets large systems be solved without holding all rows in memory.
using RowSource = std::function<void(const std::function<void(const SparseVector&)>&)>;

std::vector<SparseVector> nullspace(std::uint32_t cols, const RowSource& rows);

/// Dense convenience form: `matrix` is rows of length `cols`.
std::vector<std::vector<Scalar>> rational_nullspace(const std::vector<std::vector<Scalar>>& matrix,
                                                    std::size_t cols);

/// Row-space rank.
std::size_t rank(const SparseMatrix& m);

/// Exact product check: true iff every row has zero dot product with v.
bool annihilates(const SparseMatrix& m, const SparseVector& v);

Scalar dot(const SparseVector& a, const SparseVector& b);

}  // namespace superbi
