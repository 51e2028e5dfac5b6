#include "superbi/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace superbi {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Pos {
    std::size_t offset = 0;
    int line = 1;
    int column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Character cursor shared by both grammars. Whitespace and '#' comments are
/// skipped before every token.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    Pos pos() {
        skip();
        return pos_;
    }
    bool eof() {
        skip();
        return pos_.offset >= text_.size();
    }
    char peek() {
        skip();
        return pos_.offset < text_.size() ? text_[pos_.offset] : '\0';
    }
    char peek_raw(std::size_t ahead = 0) const {
        std::size_t i = pos_.offset + ahead;
        return i < text_.size() ? text_[i] : '\0';
    }
    bool starts_with(std::string_view s) {
        skip();
        return text_.substr(pos_.offset, s.size()) == s;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        advance(1);
        return true;
    }
    void expect(char c, std::string_view context) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + std::string(context) + describe_here());
    }

    /// Consumes an identifier equal to `word` (and not a longer identifier).
    bool accept_word(std::string_view word) {
        skip();
        if (text_.substr(pos_.offset, word.size()) != word) return false;
        if (ident_char(peek_raw(word.size()))) return false;
        advance(word.size());
        return true;
    }
    void expect_word(std::string_view word, std::string_view context) {
        if (!accept_word(word))
            fail("expected '" + std::string(word) + "' " + std::string(context) + describe_here());
    }

    std::optional<std::string> identifier() {
        skip();
        if (!ident_start(peek_raw())) return std::nullopt;
        std::size_t n = 0;
        while (ident_char(peek_raw(n))) ++n;
        std::string s(text_.substr(pos_.offset, n));
        advance(n);
        return s;
    }

    std::string digits() {
        skip();
        std::size_t n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek_raw(n)))) ++n;
        std::string s(text_.substr(pos_.offset, n));
        advance(n);
        return s;
    }

    /// Reads a run of characters accepted by `pred` with no skipping inside.
    template <class Pred>
    std::string run(Pred pred) {
        skip();
        std::size_t n = 0;
        while (pos_.offset + n < text_.size() && pred(text_[pos_.offset + n])) ++n;
        std::string s(text_.substr(pos_.offset, n));
        advance(n);
        return s;
    }

    /// Family token at the cursor without consuming it; returns its length too.
    std::optional<std::pair<Family, std::size_t>> peek_family() {
        skip();
        char c = peek_raw();
        if (c == 'G' && (peek_raw(1) == '+' || peek_raw(1) == '-'))
            return std::make_pair(peek_raw(1) == '+' ? Family::Gplus : Family::Gminus, std::size_t{2});
        if ((c == 'L' || c == 'I' || c == 'C') && !ident_char(peek_raw(1))) {
            Family f = c == 'L' ? Family::L : c == 'I' ? Family::I : Family::C;
            return std::make_pair(f, std::size_t{1});
        }
        return std::nullopt;
    }
    std::optional<Family> accept_family() {
        auto f = peek_family();
        if (!f) return std::nullopt;
        advance(f->second);
        return f->first;
    }

    [[noreturn]] void fail(const std::string& msg) {
        skip();
        throw ParseError(pos_.line, pos_.column, msg);
    }
    [[noreturn]] static void fail_at(const Pos& p, const std::string& msg) { throw ParseError(p.line, p.column, msg); }

    std::string describe_here() {
        skip();
        if (pos_.offset >= text_.size()) return ", found end of input";
        return std::string(", found '") + text_[pos_.offset] + "'";
    }

private:
    void skip() {
        while (pos_.offset < text_.size()) {
            char c = text_[pos_.offset];
            if (c == '#') {
                while (pos_.offset < text_.size() && text_[pos_.offset] != '\n') advance(1);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            } else {
                break;
            }
        }
    }
    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_.offset < text_.size(); ++i) {
            if (text_[pos_.offset] == '\n') {
                ++pos_.line;
                pos_.column = 1;
            } else {
                ++pos_.column;
            }
            ++pos_.offset;
        }
    }

    std::string_view text_;
    Pos pos_;
};

bool is_half_integer(const Scalar& s) { return (s * Scalar(2)).is_integer(); }

// ---------------------------------------------------------------- spec grammar

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : cur_(text) {}

    AlgebraSpec parse() {
        AlgebraSpec spec;
        bool wrapped = false;
        if (cur_.accept_word("algebra")) {
            wrapped = true;
            Pos p = cur_.pos();
            spec.name = cur_.run([](char c) { return ident_char(c) || c == '-' || c == '.' || c == '+'; });
            if (spec.name.empty()) Cursor::fail_at(p, "expected algebra name");
            cur_.expect('{', "after algebra name");
        }
        bool saw_generators = false;
        while (true) {
            if (wrapped && cur_.peek() == '}') break;
            if (!wrapped && cur_.eof()) break;
            Pos p = cur_.pos();
            if (cur_.accept_word("generators")) {
                if (saw_generators) Cursor::fail_at(p, "duplicate generators section");
                saw_generators = true;
                parse_generators(spec);
            } else if (cur_.accept_word("brackets")) {
                parse_brackets(spec);
            } else {
                cur_.fail("expected 'generators' or 'brackets'" + cur_.describe_here());
            }
        }
        if (wrapped) cur_.expect('}', "to close the algebra block");
        if (!cur_.eof()) cur_.fail("unexpected trailing input" + cur_.describe_here());
        if (!saw_generators) Cursor::fail_at(Pos{}, "no generators section");
        for (const auto& pr : pending_) check_rule(spec, pr.first, pr.second);
        return spec;
    }

private:
    void parse_generators(AlgebraSpec& spec) {
        cur_.expect('{', "after 'generators'");
        while (!cur_.accept('}')) {
            Pos p = cur_.pos();
            auto fam = cur_.accept_family();
            if (!fam) cur_.fail("expected a generator family (L, I, G+, G-, C)" + cur_.describe_here());
            FamilyDecl d;
            d.family = *fam;
            if (*fam != Family::C) {
                cur_.expect('(', "after family name");
                auto v = cur_.identifier();
                if (!v) cur_.fail("expected index variable" + cur_.describe_here());
                d.var = *v;
                cur_.expect(')', "after index variable");
            }
            cur_.expect(':', "after generator");
            Pos pp = cur_.pos();
            if (cur_.accept_word("even"))
                d.parity = 0;
            else if (cur_.accept_word("odd"))
                d.parity = 1;
            else
                cur_.fail("expected 'even' or 'odd'" + cur_.describe_here());
            cur_.expect(',', "after parity");
            Pos lp = cur_.pos();
            if (*fam == Family::C) {
                cur_.expect_word("central", "for the central element");
                d.central = true;
                d.lattice = Lattice::Zero;
            } else {
                cur_.expect_word("lattice", "after parity");
                lp = cur_.pos();
                cur_.expect_word("Z", "as lattice");
                d.lattice = Lattice::Integers;
                if (cur_.accept('+')) {
                    std::string one = cur_.digits();
                    bool slash = cur_.accept('/');
                    std::string two = slash ? cur_.digits() : "";
                    if (one != "1" || two != "2") Cursor::fail_at(lp, "lattice must be 'Z' or 'Z+1/2'");
                    d.lattice = Lattice::HalfOdd;
                }
            }
            if (!cur_.accept(';') && cur_.peek() != '}') cur_.fail("expected ';' after declaration" + cur_.describe_here());

            if (spec.has_family(d.family))
                Cursor::fail_at(p, "family " + std::string(family_name(d.family)) + " declared twice");
            if (d.parity != family_parity(d.family))
                Cursor::fail_at(pp, "family " + std::string(family_name(d.family)) + " must be " +
                                        (family_parity(d.family) ? "odd" : "even"));
            if (d.lattice != family_lattice(d.family))
                Cursor::fail_at(lp, "index-lattice mismatch: family " + std::string(family_name(d.family)) +
                                        " lives on " + std::string(lattice_name(family_lattice(d.family))));
            spec.families.push_back(d);
        }
    }

    void parse_brackets(AlgebraSpec& spec) {
        cur_.expect('{', "after 'brackets'");
        while (!cur_.accept('}')) {
            Pos p = cur_.pos();
            BracketRule r;
            cur_.expect('[', "to open a bracket rule");
            parse_head(r.left, r.left_var);
            cur_.expect(',', "between bracket arguments");
            parse_head(r.right, r.right_var);
            cur_.expect(']', "to close the bracket");
            cur_.expect('=', "after the bracket");
            if (r.left_var == r.right_var) Cursor::fail_at(p, "bracket arguments must use distinct variables");
            vars_ = {r.left_var, r.right_var};
            parse_rhs(r);
            if (!cur_.accept(';') && cur_.peek() != '}') cur_.fail("expected ';' after rule" + cur_.describe_here());
            for (const auto& [q, existing] : pending_)
                if (existing.left == r.left && existing.right == r.right)
                    Cursor::fail_at(p, "duplicate rule for [" + std::string(family_name(r.left)) + ", " +
                                           std::string(family_name(r.right)) + "]");
            spec.rules.push_back(r);
            pending_.emplace_back(p, r);
        }
    }

    void parse_head(Family& fam, std::string& var) {
        auto f = cur_.accept_family();
        if (!f) cur_.fail("expected a generator family" + cur_.describe_here());
        if (*f == Family::C) cur_.fail("the central element cannot head a bracket rule");
        fam = *f;
        cur_.expect('(', "after family name");
        Pos vp = cur_.pos();
        auto v = cur_.identifier();
        if (!v) cur_.fail("expected index variable" + cur_.describe_here());
        if (*v == "delta" || *v == "L" || *v == "I" || *v == "C" || *v == "G")
            Cursor::fail_at(vp, "'" + *v + "' is reserved and cannot name an index variable");
        var = *v;
        cur_.expect(')', "after index variable");
    }

    void parse_rhs(BracketRule& r) {
        // A lone "0" means the bracket vanishes.
        if (cur_.peek() == '0') {
            Cursor save = cur_;
            cur_.digits();
            if (cur_.peek() == ';' || cur_.peek() == '}') return;
            cur_ = save;
        }
        bool negate = false;
        if (cur_.accept('-'))
            negate = true;
        else
            cur_.accept('+');
        while (true) {
            r.terms.push_back(parse_term(negate));
            if (cur_.accept('+'))
                negate = false;
            else if (cur_.accept('-'))
                negate = true;
            else
                break;
        }
    }

    BracketTerm parse_term(bool negate) {
        BracketTerm t;
        Pos cp = cur_.pos();
        IndexPoly coef = IndexPoly::constant(Scalar(1));
        if (!cur_.peek_family()) {
            coef = parse_product(true);
            cur_.accept('*');
            if (!cur_.peek_family()) cur_.fail("expected a generator after the coefficient" + cur_.describe_here());
        }
        if (coef.total_degree() > 3) Cursor::fail_at(cp, "coefficient polynomial exceeds total degree 3");
        t.coefficient = negate ? -coef : coef;
        t.target = *cur_.accept_family();
        if (t.target != Family::C) {
            cur_.expect('(', "after generator");
            t.target_index = parse_linform();
            cur_.expect(')', "to close the index form");
        }
        if (cur_.accept_word("delta")) {
            cur_.expect('(', "after 'delta'");
            t.delta = parse_linform();
            cur_.expect(')', "to close the delta condition");
        }
        return t;
    }

    IndexPoly parse_sum() {
        IndexPoly p;
        bool neg = false;
        if (cur_.accept('-'))
            neg = true;
        else
            cur_.accept('+');
        p = parse_product(false);
        if (neg) p = -p;
        while (true) {
            if (cur_.accept('+'))
                p += parse_product(false);
            else if (cur_.accept('-'))
                p -= parse_product(false);
            else
                break;
        }
        return p;
    }

    IndexPoly parse_product(bool stop_before_family) {
        IndexPoly p = parse_power();
        while (true) {
            if (cur_.peek() == '*') {
                if (stop_before_family) {
                    Cursor look = cur_;
                    look.accept('*');
                    if (look.peek_family()) break;
                }
                cur_.accept('*');
                p = p * parse_power();
            } else if (cur_.peek() == '/') {
                cur_.accept('/');
                Pos dp = cur_.pos();
                IndexPoly d = parse_power();
                auto c = d.as_constant();
                if (!c || c->is_zero()) Cursor::fail_at(dp, "division must be by a nonzero constant");
                p = p * IndexPoly::constant(c->inverse());
            } else {
                break;
            }
        }
        return p;
    }

    IndexPoly parse_power() {
        IndexPoly f = parse_factor();
        if (cur_.accept('^')) {
            Pos ep = cur_.pos();
            std::string d = cur_.digits();
            if (d.empty()) cur_.fail("expected exponent" + cur_.describe_here());
            if (d.size() > 1 || d[0] > '3') Cursor::fail_at(ep, "exponent exceeds 3");
            f = f.pow(d[0] - '0');
        }
        return f;
    }

    IndexPoly parse_factor() {
        char c = cur_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return IndexPoly::constant(Scalar::parse(cur_.digits()));
        if (c == '(') {
            cur_.accept('(');
            IndexPoly p = parse_sum();
            cur_.expect(')', "to close parenthesis");
            return p;
        }
        if (c == '-') {
            cur_.accept('-');
            return -parse_factor();
        }
        Pos vp = cur_.pos();
        if (cur_.peek_family()) cur_.fail("unexpected generator inside a coefficient or index form");
        auto id = cur_.identifier();
        if (!id) cur_.fail("expected a number, variable or '('" + cur_.describe_here());
        if (*id == vars_[0]) return IndexPoly::variable(0);
        if (*id == vars_[1]) return IndexPoly::variable(1);
        Cursor::fail_at(vp, "unknown index variable '" + *id + "'");
    }

    LinForm parse_linform() {
        Pos p = cur_.pos();
        IndexPoly poly = parse_sum();
        if (!poly.is_linear()) Cursor::fail_at(p, "index form must be linear");
        LinForm f = LinForm::from_poly(poly);
        if (!is_half_integer(f.a0) || !is_half_integer(f.a1) || !is_half_integer(f.c))
            Cursor::fail_at(p, "index form coefficients must be half-integers");
        return f;
    }

    void check_rule(const AlgebraSpec& spec, const Pos& p, const BracketRule& r) {
        auto need = [&](Family f) {
            if (!spec.has_family(f))
                Cursor::fail_at(p, "unknown family " + std::string(family_name(f)) + " (not declared in generators)");
        };
        need(r.left);
        need(r.right);
        for (const auto& t : r.terms) {
            need(t.target);
            // Target indices must land on the target lattice wherever the term is live.
            for (std::int64_t a = -8; a <= 8; ++a)
                for (std::int64_t b = -8; b <= 8; ++b) {
                    HalfInt ha = HalfInt::from_doubled(a), hb = HalfInt::from_doubled(b);
                    if (!on_lattice(family_lattice(r.left), ha) || !on_lattice(family_lattice(r.right), hb)) continue;
                    Scalar va = ha.to_scalar(), vb = hb.to_scalar();
                    if (t.delta && !t.delta->evaluate(va, vb).is_zero()) continue;
                    if (t.target == Family::C) continue;
                    Scalar idx = t.target_index.evaluate(va, vb);
                    Scalar twice = idx * Scalar(2);
                    if (!twice.is_integer() ||
                        !on_lattice(family_lattice(t.target), HalfInt::from_doubled(twice.small_numerator())))
                        Cursor::fail_at(p, "index-lattice mismatch: target " + std::string(family_name(t.target)) +
                                               "(" + t.target_index.to_string({r.left_var, r.right_var}) +
                                               ") leaves the " +
                                               std::string(lattice_name(family_lattice(t.target))) + " lattice");
                }
        }
    }

    Cursor cur_;
    std::array<std::string, 2> vars_;
    std::vector<std::pair<Pos, BracketRule>> pending_;

};

// ------------------------------------------------------------- element grammar

class ElementParser {
public:
    ElementParser(const AlgebraSpec& spec, std::string_view text) : spec_(spec), cur_(text) {}

    ParsedElement parse() {
        if (cur_.peek() == '0') {
            Cursor save = cur_;
            cur_.digits();
            if (cur_.eof()) return Element{};
            cur_ = save;
        }
        bool negate = false;
        if (cur_.accept('-'))
            negate = true;
        else
            cur_.accept('+');
        while (true) {
            parse_term(negate);
            if (cur_.accept('+'))
                negate = false;
            else if (cur_.accept('-'))
                negate = true;
            else
                break;
        }
        if (!cur_.eof()) cur_.fail("unexpected input" + cur_.describe_here());
        switch (rank_) {
            case 1: return build<1>();
            case 2: return build<2>();
            default: return build<3>();
        }
    }

private:
    struct Term {
        Scalar coeff;
        std::vector<BasisKey> keys;
    };

    template <std::size_t N>
    Tensor<N> build() const {
        Tensor<N> t;
        for (const auto& term : terms_) {
            KeyTuple<N> k;
            for (std::size_t i = 0; i < N; ++i) k[i] = term.keys[i];
            t.add(k, term.coeff);
        }
        return t;
    }

    void parse_term(bool negate) {
        Pos tp = cur_.pos();
        Term t;
        t.coeff = Scalar(1);
        if (std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
            std::string num = cur_.digits();
            if (cur_.accept('/')) {
                std::string den = cur_.digits();
                if (den.empty()) cur_.fail("expected denominator" + cur_.describe_here());
                if (den.find_first_not_of('0') == std::string::npos) Cursor::fail_at(tp, "zero denominator");
                num += "/" + den;
            }
            t.coeff = Scalar::parse(num);
            cur_.expect('*', "after coefficient");
        }
        if (negate) t.coeff = -t.coeff;
        t.keys.push_back(parse_gen());
        while (cur_.starts_with("(x)")) {
            cur_.accept('(');
            cur_.accept('x');
            cur_.accept(')');
            t.keys.push_back(parse_gen());
        }
        if (t.keys.size() > 3) Cursor::fail_at(tp, "tensor rank above 3 is not supported");
        if (rank_ == 0)
            rank_ = static_cast<int>(t.keys.size());
        else if (rank_ != static_cast<int>(t.keys.size()))
            Cursor::fail_at(tp, "mixed tensor ranks in one literal");
        terms_.push_back(std::move(t));
    }

    BasisKey parse_gen() {
        Pos gp = cur_.pos();
        auto fam = cur_.accept_family();
        if (!fam) cur_.fail("expected a generator (L, I, G+, G-, C)" + cur_.describe_here());
        if (!spec_.has_family(*fam))
            Cursor::fail_at(gp, "generator " + std::string(family_name(*fam)) + " is not declared in algebra '" +
                                    spec_.name + "'");
        if (*fam == Family::C) return BasisKey::central();
        cur_.expect('(', "after generator");
        Pos ip = cur_.pos();
        std::string text;
        if (cur_.peek() == '-' || cur_.peek() == '+') {
            text += cur_.peek();
            cur_.accept(text[0]);
        }
        std::string num = cur_.digits();
        if (num.empty()) cur_.fail("expected an index" + cur_.describe_here());
        text += num;
        if (cur_.accept('/')) {
            std::string den = cur_.digits();
            if (den.empty()) cur_.fail("expected denominator" + cur_.describe_here());
            text += "/" + den;
        }
        cur_.expect(')', "after index");
        HalfInt idx;
        try {
            idx = HalfInt::parse(text);
        } catch (const std::invalid_argument& e) {
            Cursor::fail_at(ip, e.what());
        }
        if (!on_lattice(family_lattice(*fam), idx))
            Cursor::fail_at(ip, "index " + idx.to_string() + " is not on the " +
                                    std::string(lattice_name(family_lattice(*fam))) + " lattice of " +
                                    std::string(family_name(*fam)));
        return BasisKey{*fam, idx};
    }

    const AlgebraSpec& spec_;
    Cursor cur_;
    int rank_ = 0;
    std::vector<Term> terms_;
};

// ------------------------------------------------------------------ serializer

std::string term_to_string(const BracketTerm& t, const std::array<std::string, 2>& vars, bool first) {
    std::string body;
    bool negative = false;
    const auto& mons = t.coefficient.terms();
    std::string target = t.target == Family::C
                             ? std::string("C")
                             : std::string(family_name(t.target)) + "(" + t.target_index.to_string(vars) + ")";
    if (mons.size() == 1) {
        const auto& [e, c] = *mons.begin();
        negative = c.sign() < 0;
        IndexPoly mag = negative ? -t.coefficient : t.coefficient;
        std::string ms = mag.to_string(vars);
        body = (ms == "1") ? target : ms + "*" + target;
    } else {
        body = "(" + t.coefficient.to_string(vars) + ")*" + target;
    }
    if (t.delta) body += " delta(" + t.delta->to_string(vars) + ")";
    if (first) return (negative ? "-" : "") + body;
    return (negative ? " - " : " + ") + body;
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string serialize_spec(const AlgebraSpec& spec) {
    std::ostringstream os;
    bool wrapped = !spec.name.empty();
    std::string ind = wrapped ? "  " : "";
    if (wrapped) os << "algebra " << spec.name << " {\n";
    os << ind << "generators {\n";
    for (const auto& d : spec.families) {
        os << ind << "  " << family_name(d.family);
        if (d.family == Family::C) {
            os << ": even, central;\n";
            continue;
        }
        os << "(" << d.var << "): " << (d.parity ? "odd" : "even") << ", lattice " << lattice_name(d.lattice)
           << ";\n";
    }
    os << ind << "}\n";
    os << ind << "brackets {\n";
    for (const auto& r : spec.rules) {
        std::array<std::string, 2> vars{r.left_var, r.right_var};
        os << ind << "  [" << family_name(r.left) << "(" << r.left_var << "), " << family_name(r.right) << "("
           << r.right_var << ")] = ";
        if (r.terms.empty()) os << "0";
        for (std::size_t i = 0; i < r.terms.size(); ++i) os << term_to_string(r.terms[i], vars, i == 0);
        os << ";\n";
    }
    os << ind << "}\n";
    if (wrapped) os << "}\n";
    return os.str();
}

ParsedElement parse_element(const AlgebraSpec& spec, std::string_view text) {
    return ElementParser(spec, text).parse();
}

namespace {

template <std::size_t N>
Tensor<N> parse_rank(const AlgebraSpec& spec, std::string_view text) {
    ParsedElement e = parse_element(spec, text);
    if (auto* t = std::get_if<Tensor<N>>(&e)) return *t;
    bool zero = std::visit([](const auto& v) { return v.is_zero(); }, e);
    if (zero) return Tensor<N>{};
    throw ParseError(1, 1, "expected a rank-" + std::to_string(N) + " literal");
}

}  // namespace

Element parse_element1(const AlgebraSpec& spec, std::string_view text) { return parse_rank<1>(spec, text); }
Tensor2 parse_tensor2(const AlgebraSpec& spec, std::string_view text) { return parse_rank<2>(spec, text); }
Tensor3 parse_tensor3(const AlgebraSpec& spec, std::string_view text) { return parse_rank<3>(spec, text); }

std::string to_string(const ParsedElement& e) {
    return std::visit([](const auto& v) { return superbi::to_string(v); }, e);
}

}  // namespace superbi
