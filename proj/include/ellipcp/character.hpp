#pragma once

#include "rational.hpp"

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace ellipcp {

/// Character x^lambda y^mu of the 2-torus. Circle characters z^n embed as
/// the exponent pair (n, 1) once tensored with the natural H1-representation.
struct Character {
    Int lambda = 0;
    Int mu = 0;

    bool is_trivial() const { return lambda == 0 && mu == 0; }

    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;

    std::string str() const {
        return "(" + std::to_string(lambda) + "," + std::to_string(mu) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Character& c) { return os << c.str(); }
};

inline Int det2(const Character& v, const Character& w) {
    return v.lambda * w.mu - v.mu * w.lambda;
}

inline Character scale(const Character& v, Int k) { return {k * v.lambda, k * v.mu}; }

/// gcd(|lambda|, |mu|); 0 only for the trivial character.
inline Int content(const Character& v) {
    return std::gcd(v.lambda < 0 ? -v.lambda : v.lambda, v.mu < 0 ? -v.mu : v.mu);
}

/// Canonical sign: first nonzero coordinate positive. v and -v cut out the
/// same kernel curve, so classes are indexed by this representative.
inline Character canonical_sign(const Character& v) {
    if (v.lambda < 0 || (v.lambda == 0 && v.mu < 0)) return {-v.lambda, -v.mu};
    return v;
}

inline bool is_canonical_primitive(const Character& v) {
    if (v.is_trivial()) return false;
    if (content(v) != 1) return false;
    return v.lambda > 0 || (v.lambda == 0 && v.mu > 0);
}

/// Splits v = g * p with p canonical primitive and g = content(v) >= 1.
/// Rejects the trivial character.
inline std::pair<Character, Int> primitive_part(const Character& v) {
    if (v.is_trivial()) throw std::invalid_argument("trivial character has no direction");
    Int g = content(v);
    return {canonical_sign({v.lambda / g, v.mu / g}), g};
}

}  // namespace ellipcp
