#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superbi/algebra_spec.hpp"
#include "superbi/bialgebra.hpp"
#include "superbi/tensor.hpp"
#include "superbi/window.hpp"

namespace superbi {

/// Families grouped the way the even subalgebra sees them.
enum class BlockPart { Even, Gplus, Gminus };

BlockPart block_part(Family f);

/// Coefficient module V: the adjoint module L, the tensor square L⊗L, or a
/// sum of blocks X⊗Y regarded as modules over the even part only.
struct CoeffDescriptor {
    enum class Kind { Adjoint, TensorSquare, SubBlock };
    Kind kind = Kind::TensorSquare;
    std::vector<std::pair<BlockPart, BlockPart>> blocks;  ///< SubBlock only

    static CoeffDescriptor adjoint() { return {Kind::Adjoint, {}}; }
    static CoeffDescriptor tensor_square() { return {Kind::TensorSquare, {}}; }
    static CoeffDescriptor sub_block(std::vector<std::pair<BlockPart, BlockPart>> blocks) {
        return {Kind::SubBlock, std::move(blocks)};
    }

    /// "adjoint", "tensor2", or "block:X.Y[,X.Y...]" with X, Y in {even, G+, G-}.
    /// Throws std::invalid_argument.
    static CoeffDescriptor parse(std::string_view text);
    std::string to_string() const;

    std::size_t rank() const { return kind == Kind::Adjoint ? 1 : 2; }
    /// Sub-block modules are modules over the even part, so the domain is even.
    bool even_domain() const { return kind == Kind::SubBlock; }
    bool admits(const BasisKey& a, const BasisKey& b) const;

    friend bool operator==(const CoeffDescriptor&, const CoeffDescriptor&) = default;
};

template <std::size_t N>
struct SolveReportT {
    HalfInt degree{};
    Window window{};
    CoeffDescriptor coeff{};
    std::vector<DerivationTableT<N>> solution_basis;
    std::vector<DerivationTableT<N>> inner_basis;
    /// Canonical (reduced echelon over the core coordinates) complement of the
    /// inner tables inside the solutions, restricted to core keys.
    std::vector<DerivationTableT<N>> quotient_representatives;
    std::size_t quotient_dimension = 0;
    std::vector<std::string> boundary_flags;

    std::size_t unknowns = 0;
    std::size_t constraint_pairs = 0;
    std::size_t dropped_pairs = 0;
};

using SolveReport = SolveReportT<2>;
using AdjointSolveReport = SolveReportT<1>;

/// Homogeneous derivations of the given degree on the window.
///
/// Unknowns are the components of d(x) for every domain key x that lie in the
/// module and keep each tensor factor within |degree| <= codomain; components
/// outside that box are zero. Every unordered pair (x, y) of domain keys whose
/// bracket stays in the domain gives one constraint per target component,
/// including targets outside the box, which must vanish. Pairs whose bracket
/// leaves the domain are counted in boundary_flags. Only solution_basis is
/// filled in. N must equal coeff.rank().
template <std::size_t N>
SolveReportT<N> solve_derivations(const AlgebraSpec& spec, const CoeffDescriptor& coeff, HalfInt degree,
                                  const Window& window);

/// a_inn on the domain window for every basis element a of the module with
/// the given degree and all factors inside the codomain box. Values may leave
/// the box. Zero tables are omitted.
template <std::size_t N>
std::vector<DerivationTableT<N>> inner_space(const AlgebraSpec& spec, const CoeffDescriptor& coeff,
                                             HalfInt degree, const Window& window);

/// Solutions modulo inner derivations after restricting to keys with
/// |degree| <= core. inner_basis spans the a_inn (a in the box) whose values on
/// every domain key stay inside the box, i.e. the inner maps that are
/// solutions of the windowed system.
template <std::size_t N>
SolveReportT<N> h1_window(const AlgebraSpec& spec, const CoeffDescriptor& coeff, HalfInt degree,
                          const Window& window);

template <std::size_t N>
struct InnerReduction {
    Tensor<N> u;
    bool matches_on_core = false;
};

/// u = -(1/degree) d(L(0)); checks d(x) = (-1)^{[u][x]} x∗u for |degree(x)| <= core.
/// Throws std::invalid_argument for degree 0.
template <std::size_t N>
InnerReduction<N> reduce_nonzero_degree(const AlgebraSpec& spec, const DerivationTableT<N>& d, HalfInt core);

/// Basis of {v in the codomain box : x∗v = 0 for every domain key x}, with
/// x∗v evaluated exactly. Ordered by degree, then canonically.
template <std::size_t N>
std::vector<Tensor<N>> invariant_space(const AlgebraSpec& spec, const CoeffDescriptor& coeff, const Window& window);

struct SkewClosureReport {
    std::vector<Tensor2> closure_basis;  ///< r in the box with (1+τ)(x∗r) = 0 for all domain x
    std::vector<Tensor2> skew_basis;     ///< Ker(1+τ) on the box
    bool equal_on_core = false;
};

/// Both spaces are computed degree by degree; equal_on_core compares their
/// projections onto terms whose factors have |degree| <= core.
SkewClosureReport skew_closure_space(const AlgebraSpec& spec, const Window& window);

/// Every term of `t` has all factors within |degree| <= bound.
template <std::size_t N>
bool inside_box(const Tensor<N>& t, HalfInt bound) {
    for (const auto& [k, c] : t)
        for (const auto& key : k)
            if (key_degree(key).abs() > bound) return false;
    return true;
}

}  // namespace superbi
