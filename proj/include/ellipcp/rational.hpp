#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ellipcp {

using Int = std::int64_t;

/// Exact rational with 64-bit numerator/denominator.
/// Invariant: den > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(Int n) : num_(n) {}
    Rational(Int n, Int d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integral() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    /// Representative in [0,1) modulo Z.
    Rational mod1() const {
        Int r = num_ % den_;
        if (r < 0) r += den_;
        Rational out;
        out.num_ = r;
        out.den_ = den_;
        return out;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Int num_ = 0;
    Int den_ = 1;
};

/// Exact division a/b, asserting b | a.
inline Int exact_div(Int a, Int b) {
    assert(b != 0 && a % b == 0);
    return a / b;
}

}  // namespace ellipcp
