#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "superbi/half_int.hpp"

namespace superbi {

/// Family tags in canonical order; the order drives term ordering everywhere.
enum class Family : std::uint8_t { L = 0, I = 1, Gplus = 2, Gminus = 3, C = 4 };

inline constexpr std::array<Family, 5> kAllFamilies{Family::L, Family::I, Family::Gplus, Family::Gminus,
                                                    Family::C};

/// Z/2 grading bit: 0 even, 1 odd.
using Parity = int;

constexpr Parity family_parity(Family f) { return (f == Family::Gplus || f == Family::Gminus) ? 1 : 0; }

/// Index lattice a family lives on.
enum class Lattice : std::uint8_t { Integers, HalfOdd, Zero };

constexpr Lattice family_lattice(Family f) {
    switch (f) {
        case Family::L:
        case Family::I: return Lattice::Integers;
        case Family::Gplus:
        case Family::Gminus: return Lattice::HalfOdd;
        case Family::C: return Lattice::Zero;
    }
    return Lattice::Zero;
}

constexpr bool on_lattice(Lattice l, HalfInt h) {
    switch (l) {
        case Lattice::Integers: return h.doubled % 2 == 0;
        case Lattice::HalfOdd: return h.doubled % 2 != 0;
        case Lattice::Zero: return h.doubled == 0;
    }
    return false;
}

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
std::string_view lattice_name(Lattice l);

/// One basis symbol L(m), I(m), G+(r), G-(r) or C.
struct BasisKey {
    Family family = Family::L;
    HalfInt index{};

    /// Throws std::invalid_argument if the index is off the family's lattice.
    static BasisKey make(Family f, HalfInt index);
    static BasisKey central() { return BasisKey{Family::C, HalfInt{}}; }

    std::string to_string() const;

    friend constexpr bool operator==(const BasisKey&, const BasisKey&) = default;
    friend constexpr auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

constexpr Parity key_parity(const BasisKey& k) { return family_parity(k.family); }

/// Eigenvalue grading: [L_0, x] = -degree(x) x.
constexpr HalfInt key_degree(const BasisKey& k) { return k.family == Family::C ? HalfInt{} : k.index; }

inline BasisKey L(std::int64_t m) { return BasisKey::make(Family::L, HalfInt::from_int(m)); }
inline BasisKey I(std::int64_t m) { return BasisKey::make(Family::I, HalfInt::from_int(m)); }
/// Odd generators take the doubled index: Gp(1) is G+(1/2).
inline BasisKey Gp(std::int64_t doubled) { return BasisKey::make(Family::Gplus, HalfInt::from_doubled(doubled)); }
inline BasisKey Gm(std::int64_t doubled) { return BasisKey::make(Family::Gminus, HalfInt::from_doubled(doubled)); }
inline BasisKey Cc() { return BasisKey::central(); }

}  // namespace superbi
