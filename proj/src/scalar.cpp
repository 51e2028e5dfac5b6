#include "superbi/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace superbi {

namespace {

using i128 = __int128;

constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so that negation never overflows.
bool fits(i128 v) { return v > kMin && v <= kMax; }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    i128 n = numerator, d = denominator;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    } else {
        mpq_class q(to_mpz(n), to_mpz(d));
        q.canonicalize();
        assign_big(std::move(q));
    }
}

Scalar::Scalar(const mpq_class& value) {
    mpq_class q(value);
    q.canonicalize();
    assign_big(std::move(q));
}

void Scalar::assign_big(mpq_class value) {
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(value));
}

Scalar Scalar::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string_view num = std::string_view(s).substr(0, slash);
    std::string_view den = slash == std::string::npos ? std::string_view("1")
                                                      : std::string_view(s).substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Scalar(mpq_class(mpz_class(n), d));
}

bool Scalar::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Scalar::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

std::string Scalar::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
    if (big_) return Scalar(mpq_class(-*big_));
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) return Scalar(mpq_class(1 / *big_));
    Scalar r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            i128 n = static_cast<i128>(num_) + rhs.num_;
            if (fits(n)) {
                num_ = static_cast<std::int64_t>(n);
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (!big_ && !rhs.big_) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        i128 g1 = gcd128(num_, rhs.den_);
        i128 g2 = gcd128(rhs.num_, den_);
        i128 n = (static_cast<i128>(num_) / g1) * (static_cast<i128>(rhs.num_) / g2);
        i128 d = (static_cast<i128>(den_) / g2) * (static_cast<i128>(rhs.den_) / g1);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

void fused_add_mul(Scalar& acc, const Scalar& b, const Scalar& c) {
    if (b.is_zero() || c.is_zero()) return;
    acc += b * c;
}

}  // namespace superbi
