#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>

#include "superbi/scalar.hpp"

namespace superbi {

/// An element of ½ℤ stored as its double.
struct HalfInt {
    std::int64_t doubled = 0;

    static constexpr HalfInt from_int(std::int64_t v) { return HalfInt{2 * v}; }
    static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt{d}; }

    /// Accepts "3", "-2", "1/2", "-7/2". Throws std::invalid_argument otherwise.
    static HalfInt parse(std::string_view text);

    constexpr bool is_integer() const { return doubled % 2 == 0; }
    constexpr HalfInt abs() const { return HalfInt{doubled < 0 ? -doubled : doubled}; }
    Scalar to_scalar() const { return Scalar(doubled, 2); }
    std::string to_string() const;

    constexpr HalfInt operator-() const { return HalfInt{-doubled}; }
    constexpr HalfInt& operator+=(HalfInt o) {
        doubled += o.doubled;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        doubled -= o.doubled;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.doubled + b.doubled}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.doubled - b.doubled}; }
    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

}  // namespace superbi

template <>
struct std::hash<superbi::HalfInt> {
    std::size_t operator()(superbi::HalfInt h) const noexcept { return std::hash<std::int64_t>{}(h.doubled); }
};
