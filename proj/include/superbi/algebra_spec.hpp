#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superbi/basis.hpp"
#include "superbi/tensor.hpp"

namespace superbi {

/// Rational polynomial in the two index variables bound by a bracket rule
/// (slot 0 = left variable, slot 1 = right variable).
class IndexPoly {
public:
    using Exponents = std::pair<int, int>;

    IndexPoly() = default;
    static IndexPoly constant(const Scalar& c);
    static IndexPoly variable(int slot);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    bool is_linear() const { return total_degree() <= 1; }
    std::optional<Scalar> as_constant() const;
    Scalar coeff(Exponents e) const;
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    Scalar evaluate(const Scalar& v0, const Scalar& v1) const;

    IndexPoly& operator+=(const IndexPoly& o);
    IndexPoly& operator-=(const IndexPoly& o);
    friend IndexPoly operator+(IndexPoly a, const IndexPoly& b) { return a += b; }
    friend IndexPoly operator-(IndexPoly a, const IndexPoly& b) { return a -= b; }
    friend IndexPoly operator*(const IndexPoly& a, const IndexPoly& b);
    IndexPoly operator-() const;
    IndexPoly pow(int e) const;

    friend bool operator==(const IndexPoly&, const IndexPoly&) = default;

    /// Canonical text, e.g. "m-n" or "1/12*m^3-1/12*m".
    std::string to_string(const std::array<std::string, 2>& vars) const;

private:
    void add(Exponents e, const Scalar& c);
    std::map<Exponents, Scalar> terms_;
};

/// a0*v0 + a1*v1 + c with half-integer coefficients.
struct LinForm {
    Scalar a0, a1, c;

    static LinForm from_poly(const IndexPoly& p);  // caller has checked linearity
    Scalar evaluate(const Scalar& v0, const Scalar& v1) const { return a0 * v0 + a1 * v1 + c; }
    IndexPoly to_poly() const;
    std::string to_string(const std::array<std::string, 2>& vars) const;
    friend bool operator==(const LinForm&, const LinForm&) = default;
};

struct BracketTerm {
    IndexPoly coefficient;
    std::optional<LinForm> delta;  ///< term present only where the form is zero
    Family target = Family::L;
    LinForm target_index;          ///< ignored for the C target
    friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

struct BracketRule {
    Family left = Family::L;
    std::string left_var;
    Family right = Family::L;
    std::string right_var;
    std::vector<BracketTerm> terms;  ///< empty = the bracket vanishes
    friend bool operator==(const BracketRule&, const BracketRule&) = default;
};

struct FamilyDecl {
    Family family = Family::L;
    std::string var;  ///< placeholder variable of the declaration; empty for C
    Parity parity = 0;
    Lattice lattice = Lattice::Integers;
    bool central = false;
    friend bool operator==(const FamilyDecl&, const FamilyDecl&) = default;
};

/// A parametric structure-constant table.
struct AlgebraSpec {
    std::string name;  ///< empty for a bare (anonymous) definition
    std::vector<FamilyDecl> families;
    std::vector<BracketRule> rules;

    bool has_family(Family f) const;
    const FamilyDecl* family(Family f) const;
    const BracketRule* rule_for(Family left, Family right) const;
    bool central() const { return has_family(Family::C); }

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

class UnknownFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// [a, b] for two basis keys. Falls back to super-antisymmetry when only the
/// reversed ordered pair has a rule, and to zero when neither does.
Element bracket(const AlgebraSpec& spec, const BasisKey& a, const BasisKey& b);

/// Bilinear extension of the key bracket.
Element bracket(const AlgebraSpec& spec, const Element& x, const Element& y);

/// Memoized key brackets over one spec. Not thread-safe; create one per task.
class StructureConstants {
public:
    using Terms = std::vector<std::pair<BasisKey, Scalar>>;

    explicit StructureConstants(const AlgebraSpec& spec) : spec_(&spec) {}

    const Terms& operator()(const BasisKey& a, const BasisKey& b);
    Element bracket(const Element& x, const Element& y);
    const AlgebraSpec& spec() const { return *spec_; }

private:
    const AlgebraSpec* spec_;
    std::unordered_map<std::uint64_t, Terms> cache_;
};

/// All basis keys of the spec with |degree| <= bound, in canonical order.
std::vector<BasisKey> basis_keys(const AlgebraSpec& spec, HalfInt bound);

}  // namespace superbi
