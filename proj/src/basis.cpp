#include "superbi/basis.hpp"

#include <charconv>
#include <stdexcept>

namespace superbi {

HalfInt HalfInt::parse(std::string_view text) {
    auto parse_int = [&](std::string_view t) {
        std::int64_t v = 0;
        if (!t.empty() && t[0] == '+') t.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
            throw std::invalid_argument("malformed half-integer '" + std::string(text) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return HalfInt::from_int(parse_int(text));
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 1) return HalfInt::from_int(num);
    if (den != 2 || num % 2 == 0)
        throw std::invalid_argument("'" + std::string(text) + "' is not an element of 1/2 Z in lowest terms");
    return HalfInt::from_doubled(num);
}

std::string HalfInt::to_string() const {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::L: return "L";
        case Family::I: return "I";
        case Family::Gplus: return "G+";
        case Family::Gminus: return "G-";
        case Family::C: return "C";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : kAllFamilies)
        if (family_name(f) == name) return f;
    return std::nullopt;
}

std::string_view lattice_name(Lattice l) {
    switch (l) {
        case Lattice::Integers: return "Z";
        case Lattice::HalfOdd: return "Z+1/2";
        case Lattice::Zero: return "0";
    }
    return "?";
}

BasisKey BasisKey::make(Family f, HalfInt index) {
    if (!on_lattice(family_lattice(f), index))
        throw std::invalid_argument("index " + index.to_string() + " is not on the " +
                                    std::string(lattice_name(family_lattice(f))) + " lattice of family " +
                                    std::string(family_name(f)));
    return BasisKey{f, index};
}

std::string BasisKey::to_string() const {
    if (family == Family::C) return "C";
    return std::string(family_name(family)) + "(" + index.to_string() + ")";
}

}  // namespace superbi
