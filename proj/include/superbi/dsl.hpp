#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "superbi/algebra_spec.hpp"
#include "superbi/tensor.hpp"

namespace superbi {

/// Syntax or semantic error at a 1-based line/column of the input.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

/// Parses the structure-constant definition language:
///
///   algebra <name> {
///     generators { L(m): even, lattice Z; G+(r): odd, lattice Z+1/2; C: even, central; }
///     brackets   { [L(m), L(n)] = (m-n)*L(m+n) + 1/12*(m^3-m)*C delta(m+n); }
///   }
///
/// The `algebra` wrapper may be omitted. '#' starts a comment. A coefficient
/// may be joined to its target by '*' or by juxtaposition.
AlgebraSpec parse_spec(std::string_view text);

/// Canonical text; parse_spec(serialize_spec(s)) == s.
std::string serialize_spec(const AlgebraSpec& spec);

using ParsedElement = std::variant<Element, Tensor2, Tensor3>;

/// Parses an element literal such as "3/2*L(-1) (x) I(2) - G+(1/2) (x) G-(-1/2)".
/// The tensor rank is inferred; "0" yields the zero Element.
ParsedElement parse_element(const AlgebraSpec& spec, std::string_view text);

/// Rank-checked conveniences. A literal zero of any rank is accepted.
Element parse_element1(const AlgebraSpec& spec, std::string_view text);
Tensor2 parse_tensor2(const AlgebraSpec& spec, std::string_view text);
Tensor3 parse_tensor3(const AlgebraSpec& spec, std::string_view text);

std::string to_string(const ParsedElement& e);

}  // namespace superbi
