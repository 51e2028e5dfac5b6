#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "superbi/bialgebra.hpp"
#include "superbi/cohomology.hpp"
#include "superbi/consistency.hpp"
#include "superbi/dsl.hpp"
#include "superbi/presets.hpp"
#include "superbi/tensor_ops.hpp"

namespace superbi::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string preset, spec_file;
    std::string r, x;
    std::string coeff, degree;
    std::string domain, codomain, core, window;
    std::string format = "text";
    bool mybe = false;

    bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw UsageError("cannot read file '" + path + "'");
    return ss.str();
}

// Re-raises a parse error with the name of its source in front.
[[noreturn]] void positioned(const std::string& source, const ParseError& e) {
    throw UsageError(source + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.message());
}

AlgebraSpec load_spec(const Config& cfg) {
    if (!cfg.preset.empty() && !cfg.spec_file.empty()) throw UsageError("--preset and --spec are exclusive");
    if (!cfg.preset.empty()) {
        try {
            return preset(cfg.preset);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (cfg.spec_file.empty()) throw UsageError("one of --preset or --spec is required");
    std::string text = read_file(cfg.spec_file);
    try {
        return parse_spec(text);
    } catch (const ParseError& e) {
        positioned(cfg.spec_file, e);
    }
}

std::string spec_label(const Config& cfg, const AlgebraSpec& spec) {
    if (!spec.name.empty()) return spec.name;
    return cfg.preset.empty() ? cfg.spec_file : cfg.preset;
}

// --r accepts a path to a file holding the literal, or the literal itself.
std::pair<std::string, std::string> literal_source(const std::string& flag, const std::string& value) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(value, ec)) return {value, read_file(value)};
    return {flag, value};
}

Tensor2 load_r(const Config& cfg, const AlgebraSpec& spec) {
    if (cfg.r.empty()) throw UsageError("--r is required");
    auto [source, text] = literal_source("--r", cfg.r);
    try {
        return parse_tensor2(spec, text);
    } catch (const ParseError& e) {
        positioned(source, e);
    }
}

Element load_x(const Config& cfg, const AlgebraSpec& spec) {
    if (cfg.x.empty()) throw UsageError("--x is required");
    try {
        return parse_element1(spec, cfg.x);
    } catch (const ParseError& e) {
        positioned("--x", e);
    }
}

HalfInt half_flag(const std::string& flag, const std::string& value) {
    if (value.empty()) throw UsageError(flag + " is required");
    try {
        HalfInt h = HalfInt::parse(value);
        return h;
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + " expects an integer or half-integer, got '" + value + "'");
    }
}

Window window_flags(const Config& cfg, bool need_core) {
    HalfInt d = half_flag("--domain", cfg.domain);
    HalfInt c = half_flag("--codomain", cfg.codomain);
    HalfInt k = need_core ? half_flag("--core", cfg.core) : (cfg.core.empty() ? HalfInt{} : half_flag("--core", cfg.core));
    try {
        return Window::make(d, c, k);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

CoeffDescriptor coeff_flag(const Config& cfg) {
    if (cfg.coeff.empty()) throw UsageError("--coeff is required");
    try {
        return CoeffDescriptor::parse(cfg.coeff);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Json window_json(const Window& w) {
    return Json{{"domain", w.domain.to_string()}, {"codomain", w.codomain.to_string()}, {"core", w.core.to_string()}};
}

std::string window_text(const Window& w) {
    return "domain " + w.domain.to_string() + " codomain " + w.codomain.to_string() + " core " + w.core.to_string();
}

int cmd_check_algebra(const Config& cfg, std::ostream& out) {
    AlgebraSpec spec = load_spec(cfg);
    HalfInt bound = half_flag("--window", cfg.window);
    if (bound.doubled < 0) throw UsageError("--window must be nonnegative");
    ConsistencyReport rep = check_spec_consistency(spec, bound);
    if (cfg.json()) {
        Json j{{"algebra", spec_label(cfg, spec)},
               {"window", bound.to_string()},
               {"keys", rep.keys},
               {"pairsChecked", rep.pairs_checked},
               {"triplesChecked", rep.triples_checked}};
        j["skewFailure"] = nullptr;
        j["jacobiFailure"] = nullptr;
        if (rep.skew_failure)
            j["skewFailure"] = Json{{"a", rep.skew_failure->a.to_string()},
                                    {"b", rep.skew_failure->b.to_string()},
                                    {"defect", to_string(rep.skew_failure->defect)}};
        if (rep.jacobi_failure)
            j["jacobiFailure"] = Json{{"a", rep.jacobi_failure->a.to_string()},
                                      {"b", rep.jacobi_failure->b.to_string()},
                                      {"c", rep.jacobi_failure->c.to_string()},
                                      {"defect", to_string(rep.jacobi_failure->defect)}};
        j["passed"] = rep.passed();
        out << j.dump(2) << "\n";
    } else {
        out << "algebra " << spec_label(cfg, spec) << ", window |deg| <= " << bound.to_string() << "\n";
        out << rep.keys << " keys, " << rep.pairs_checked << " pairs, " << rep.triples_checked << " triples\n";
        if (rep.skew_failure)
            out << "skew: FAIL at (" << rep.skew_failure->a.to_string() << ", " << rep.skew_failure->b.to_string()
                << "): " << to_string(rep.skew_failure->defect) << "\n";
        else
            out << "skew: ok\n";
        if (rep.jacobi_failure)
            out << "jacobi: FAIL at (" << rep.jacobi_failure->a.to_string() << ", "
                << rep.jacobi_failure->b.to_string() << ", " << rep.jacobi_failure->c.to_string()
                << "): " << to_string(rep.jacobi_failure->defect) << "\n";
        else
            out << "jacobi: ok\n";
        out << (rep.passed() ? "pass" : "fail") << "\n";
    }
    return rep.passed() ? kOk : kPropertyFails;
}

int cmd_cybe(const Config& cfg, std::ostream& out) {
    AlgebraSpec spec = load_spec(cfg);
    Tensor2 r = load_r(cfg, spec);
    Tensor3 c = cybe(spec, r);
    std::vector<std::pair<BasisKey, Tensor3>> defects;
    if (cfg.mybe) {
        HalfInt d = half_flag("--domain", cfg.domain);
        defects = mybe_defect(spec, r, Window::uniform(d));
    }
    if (cfg.json()) {
        Json j{{"cybe", to_string(c)}, {"zero", c.is_zero()}};
        if (cfg.mybe) {
            Json list = Json::array();
            for (const auto& [x, t] : defects) list.push_back(Json{{"x", x.to_string()}, {"defect", to_string(t)}});
            j["mybe"] = list;
        }
        out << j.dump(2) << "\n";
    } else {
        out << (c.is_zero() ? "zero" : to_string(c)) << "\n";
        if (cfg.mybe) {
            if (defects.empty()) out << "mybe: empty\n";
            for (const auto& [x, t] : defects) out << "mybe " << x.to_string() << ": " << to_string(t) << "\n";
        }
    }
    return c.is_zero() ? kOk : kPropertyFails;
}

int cmd_delta(const Config& cfg, std::ostream& out) {
    AlgebraSpec spec = load_spec(cfg);
    Tensor2 r = load_r(cfg, spec);
    Element x = load_x(cfg, spec);
    Tensor2 d = delta_r(spec, r, x);
    if (cfg.json())
        out << Json{{"x", to_string(x)}, {"delta", to_string(d)}}.dump(2) << "\n";
    else
        out << to_string(d) << "\n";
    return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    AlgebraSpec spec = load_spec(cfg);
    Tensor2 r = load_r(cfg, spec);
    HalfInt d = half_flag("--domain", cfg.domain);
    VerdictReport v = superbialgebra_verdict(spec, r, Window::uniform(d));
    Json j{{"skew", v.skew},
           {"evenParity", v.even_parity},
           {"cybeZero", v.cybe_zero},
           {"mybeEmpty", v.mybe_empty},
           {"coJacobiZero", v.co_jacobi_zero},
           {"compatibilityZero", v.compatibility_zero},
           {"verdict", v.verdict}};
    if (cfg.json()) {
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [k, val] : j.items()) out << k << ": " << (val.get<bool>() ? "true" : "false") << "\n";
    }
    return v.verdict ? kOk : kPropertyFails;
}

template <std::size_t N>
Json table_json(const DerivationTableT<N>& t) {
    Json j = Json::object();
    for (const auto& [k, v] : t.values) j[k.to_string()] = to_string(v);
    return j;
}

template <std::size_t N>
void print_h1(const std::string& algebra, const SolveReportT<N>& rep, bool json, std::ostream& out) {
    if (json) {
        Json reps = Json::array();
        for (const auto& t : rep.quotient_representatives) reps.push_back(table_json(t));
        Json j{{"algebra", algebra},
               {"coeff", rep.coeff.to_string()},
               {"degree", rep.degree.to_string()},
               {"window", window_json(rep.window)},
               {"unknowns", rep.unknowns},
               {"constraintPairs", rep.constraint_pairs},
               {"droppedPairs", rep.dropped_pairs},
               {"solutionDimension", rep.solution_basis.size()},
               {"innerDimension", rep.inner_basis.size()},
               {"quotientDimension", rep.quotient_dimension},
               {"boundaryFlags", rep.boundary_flags},
               {"representatives", reps}};
        out << j.dump(2) << "\n";
        return;
    }
    out << "h1 " << algebra << " coeff " << rep.coeff.to_string() << " degree " << rep.degree.to_string() << "\n";
    out << "window " << window_text(rep.window) << "\n";
    out << rep.unknowns << " unknowns, " << rep.constraint_pairs << " constraint pairs, " << rep.dropped_pairs
        << " dropped\n";
    out << "solution dimension " << rep.solution_basis.size() << "\n";
    out << "inner dimension " << rep.inner_basis.size() << "\n";
    out << "quotientDimension " << rep.quotient_dimension << "\n";
    for (const auto& f : rep.boundary_flags) out << "boundary: " << f << "\n";
    for (std::size_t i = 0; i < rep.quotient_representatives.size(); ++i) {
        out << "representative " << i + 1 << ":\n";
        for (const auto& [k, v] : rep.quotient_representatives[i].values)
            out << "  " << k.to_string() << " -> " << to_string(v) << "\n";
    }
}

int cmd_h1(const Config& cfg, std::ostream& out) {
    AlgebraSpec spec = load_spec(cfg);
    CoeffDescriptor coeff = coeff_flag(cfg);
    HalfInt degree = half_flag("--degree", cfg.degree);
    Window w = window_flags(cfg, true);
    std::string label = spec_label(cfg, spec);
    if (coeff.rank() == 1)
        print_h1(label, h1_window<1>(spec, coeff, degree, w), cfg.json(), out);
    else
        print_h1(label, h1_window<2>(spec, coeff, degree, w), cfg.json(), out);
    return kOk;
}

template <std::size_t N>
void print_invariants(const std::string& algebra, const CoeffDescriptor& coeff, const Window& w,
                      const std::vector<Tensor<N>>& basis, bool json, std::ostream& out) {
    if (json) {
        Json list = Json::array();
        for (const auto& t : basis) list.push_back(to_string(t));
        out << Json{{"algebra", algebra},
                    {"coeff", coeff.to_string()},
                    {"window", window_json(w)},
                    {"dimension", basis.size()},
                    {"basis", list}}
                   .dump(2)
            << "\n";
        return;
    }
    out << "invariants " << algebra << " coeff " << coeff.to_string() << " window " << window_text(w) << "\n";
    out << "dimension " << basis.size() << "\n";
    for (const auto& t : basis) out << to_string(t) << "\n";
}

int cmd_invariants(const Config& cfg, std::ostream& out) {
    AlgebraSpec spec = load_spec(cfg);
    CoeffDescriptor coeff = coeff_flag(cfg);
    Window w = window_flags(cfg, false);
    std::string label = spec_label(cfg, spec);
    if (coeff.rank() == 1)
        print_invariants(label, coeff, w, invariant_space<1>(spec, coeff, w), cfg.json(), out);
    else
        print_invariants(label, coeff, w, invariant_space<2>(spec, coeff, w), cfg.json(), out);
    return kOk;
}

int cmd_skew_closure(const Config& cfg, std::ostream& out) {
    AlgebraSpec spec = load_spec(cfg);
    Window w = window_flags(cfg, true);
    SkewClosureReport rep = skew_closure_space(spec, w);
    if (cfg.json()) {
        out << Json{{"algebra", spec_label(cfg, spec)},
                    {"window", window_json(w)},
                    {"closureDimension", rep.closure_basis.size()},
                    {"skewDimension", rep.skew_basis.size()},
                    {"equalOnCore", rep.equal_on_core}}
                   .dump(2)
            << "\n";
    } else {
        out << "skew-closure " << spec_label(cfg, spec) << " window " << window_text(w) << "\n";
        out << "closure dimension " << rep.closure_basis.size() << "\n";
        out << "skew dimension " << rep.skew_basis.size() << "\n";
        out << "equalOnCore " << (rep.equal_on_core ? "true" : "false") << "\n";
    }
    return rep.equal_on_core ? kOk : kPropertyFails;
}

// Prints the canonical form of a spec, or of an element literal if one is given.
int cmd_parse(const Config& cfg, std::ostream& out) {
    AlgebraSpec spec = load_spec(cfg);
    if (cfg.r.empty() && cfg.x.empty()) {
        std::string text = serialize_spec(spec);
        if (cfg.json())
            out << Json{{"algebra", spec_label(cfg, spec)}, {"text", text}}.dump(2) << "\n";
        else
            out << text;
        return kOk;
    }
    auto [source, text] = cfg.r.empty() ? std::pair<std::string, std::string>{"--x", cfg.x} : literal_source("--r", cfg.r);
    std::string canonical;
    try {
        canonical = to_string(parse_element(spec, text));
    } catch (const ParseError& e) {
        positioned(source, e);
    }
    if (cfg.json())
        out << Json{{"element", canonical}}.dump(2) << "\n";
    else
        out << canonical << "\n";
    return kOk;
}

void add_source(CLI::App* sub, Config& cfg) {
    sub->add_option("--preset", cfg.preset, "built-in algebra: " + [] {
        std::string s;
        for (const auto& n : preset_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());
    sub->add_option("--spec", cfg.spec_file, "algebra definition file");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_window(CLI::App* sub, Config& cfg, bool with_core) {
    sub->add_option("--domain", cfg.domain, "domain bound on |degree|");
    sub->add_option("--codomain", cfg.codomain, "bound on |degree| of each value factor");
    if (with_core) sub->add_option("--core", cfg.core, "bound on |degree| for comparisons");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Lie superbialgebra structures on the N=2 Neveu-Schwarz algebra", "superbi"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check-algebra", "skew and Jacobi checks on a degree window");
    add_source(check, cfg);
    check->add_option("--window", cfg.window, "bound on |degree|");

    auto* cy = app.add_subcommand("cybe", "evaluate c(r)");
    add_source(cy, cfg);
    cy->add_option("--r", cfg.r, "r-matrix literal or file");
    cy->add_flag("--mybe", cfg.mybe, "also list x with x*c(r) != 0 for |deg x| <= --domain");
    cy->add_option("--domain", cfg.domain, "domain bound for --mybe");

    auto* delta = app.add_subcommand("delta", "evaluate the coboundary cobracket on x");
    add_source(delta, cfg);
    delta->add_option("--r", cfg.r, "r-matrix literal or file");
    delta->add_option("--x", cfg.x, "element literal");

    auto* verify = app.add_subcommand("verify-bialgebra", "triangular coboundary superbialgebra checks");
    add_source(verify, cfg);
    verify->add_option("--r", cfg.r, "r-matrix literal or file");
    verify->add_option("--domain", cfg.domain, "bound on |degree| of the keys checked");

    auto* h1 = app.add_subcommand("h1", "first cohomology on a window");
    add_source(h1, cfg);
    h1->add_option("--coeff", cfg.coeff, "adjoint, tensor2 or block:X.Y");
    h1->add_option("--degree", cfg.degree, "degree of the derivations");
    add_window(h1, cfg, true);

    auto* inv = app.add_subcommand("invariants", "invariant elements of the coefficient module");
    add_source(inv, cfg);
    inv->add_option("--coeff", cfg.coeff, "adjoint, tensor2 or block:X.Y");
    add_window(inv, cfg, true);

    auto* skew = app.add_subcommand("skew-closure", "compare the (1+tau)-closure space with Ker(1+tau)");
    add_source(skew, cfg);
    add_window(skew, cfg, true);

    auto* parse = app.add_subcommand("parse", "print the canonical form of a spec or literal");
    add_source(parse, cfg);
    parse->add_option("--r", cfg.r, "literal or file to canonicalize");
    parse->add_option("--x", cfg.x, "literal to canonicalize");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed()) return cmd_check_algebra(cfg, out);
        if (cy->parsed()) return cmd_cybe(cfg, out);
        if (delta->parsed()) return cmd_delta(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (h1->parsed()) return cmd_h1(cfg, out);
        if (inv->parsed()) return cmd_invariants(cfg, out);
        if (skew->parsed()) return cmd_skew_closure(cfg, out);
        if (parse->parsed()) return cmd_parse(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace superbi::cli
