#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace superbi {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values that fit in a pair of int64 are kept inline; anything larger is
/// promoted to a shared immutable GMP rational. The two representations never
/// overlap, so equality can compare them structurally.
class Scalar {
public:
    Scalar() = default;
    Scalar(int value) : num_(value) {}
    Scalar(std::int64_t value) : num_(value) {}
    Scalar(std::int64_t numerator, std::int64_t denominator);
    explicit Scalar(const mpq_class& value);

    /// Parses "7", "-3/4", "+2". Throws std::invalid_argument on malformed text
    /// or a zero denominator.
    static Scalar parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    /// Only meaningful when is_small().
    std::int64_t small_numerator() const { return num_; }
    std::int64_t small_denominator() const { return den_; }

    mpq_class to_mpq() const;
    std::string to_string() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
    void assign_big(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// a += b * c, the inner loop of elimination.
void fused_add_mul(Scalar& acc, const Scalar& b, const Scalar& c);

}  // namespace superbi
