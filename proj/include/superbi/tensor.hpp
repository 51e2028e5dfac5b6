#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "superbi/basis.hpp"
#include "superbi/scalar.hpp"

namespace superbi {

template <std::size_t N>
using KeyTuple = std::array<BasisKey, N>;

template <std::size_t N>
Parity tuple_parity(const KeyTuple<N>& t) {
    Parity p = 0;
    for (const auto& k : t) p ^= key_parity(k);
    return p;
}

template <std::size_t N>
HalfInt tuple_degree(const KeyTuple<N>& t) {
    HalfInt d{};
    for (const auto& k : t) d += key_degree(k);
    return d;
}

/// Finitely supported exact linear combination of N-fold basis tuples.
/// Zero coefficients are never stored; iteration follows the canonical
/// lexicographic key order.
template <std::size_t N>
class Tensor {
public:
    using Key = KeyTuple<N>;
    using Map = std::map<Key, Scalar>;

    Tensor() = default;

    static Tensor basis(const Key& k, const Scalar& c = Scalar(1)) {
        Tensor t;
        t.add(k, c);
        return t;
    }

    void add(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    /// Common parity of all terms; nullopt for mixed parity. Zero is even.
    std::optional<Parity> parity() const {
        std::optional<Parity> p;
        for (const auto& [k, c] : terms_) {
            Parity q = tuple_parity(k);
            if (p && *p != q) return std::nullopt;
            p = q;
        }
        return p.value_or(0);
    }

    /// Common total degree of all terms; nullopt for zero or mixed degree.
    std::optional<HalfInt> degree() const {
        std::optional<HalfInt> d;
        for (const auto& [k, c] : terms_) {
            HalfInt e = tuple_degree(k);
            if (d && *d != e) return std::nullopt;
            d = e;
        }
        return d;
    }

    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Tensor& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
    friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
    Tensor operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    Map terms_;
};

using Element = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

inline Element element_of(const BasisKey& a, const Scalar& c = Scalar(1)) { return Element::basis({a}, c); }
inline Tensor2 tensor_of(const BasisKey& a, const BasisKey& b, const Scalar& c = Scalar(1)) {
    return Tensor2::basis({a, b}, c);
}
inline Tensor3 tensor_of(const BasisKey& a, const BasisKey& b, const BasisKey& d, const Scalar& c = Scalar(1)) {
    return Tensor3::basis({a, b, d}, c);
}

/// Canonical text in the element grammar: single spaces, " (x) " between
/// factors, lowest-terms coefficients, "0" for the zero tensor.
template <std::size_t N>
std::string to_string(const Tensor<N>& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : t) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (!mag.is_one()) out += mag.to_string() + "*";
        for (std::size_t i = 0; i < N; ++i) {
            if (i) out += " (x) ";
            out += key[i].to_string();
        }
    }
    return out;
}

}  // namespace superbi
