#pragma once

// Divisor classes on the abelian surface X = E x E spanned by the fiber-type
// curves C_v = X(ker z_v): intersection pairing, ampleness, Euler
// characteristic and the sheaf-cohomology dimension tables.

#include "repr.hpp"

#include <map>
#include <sstream>
#include <string>

namespace ellipcp {

/// Formal integer combination of fiber classes C_v, keyed by canonical
/// primitive directions. Translates of C_v are identified with C_v: every
/// quantity computed here depends only on directions and multiplicities.
class Divisor {
public:
    Divisor() = default;

    static Divisor single(const Character& v, Int mult = 1) {
        Divisor d;
        d.add(v, mult);
        return d;
    }

    void add(const Character& v, Int mult) {
        if (!is_canonical_primitive(v))
            throw std::invalid_argument("divisor keys must be canonical primitive directions");
        Int& c = coeffs_[v];
        c += mult;
        if (c == 0) coeffs_.erase(v);
    }

    const std::map<Character, Int>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_effective() const {
        for (const auto& [v, m] : coeffs_)
            if (m < 0) return false;
        return true;
    }

    /// Number of distinct directions with nonzero multiplicity.
    Int direction_count() const { return static_cast<Int>(coeffs_.size()); }

    /// Sum of the multiplicities (the alpha of the cohomology rules).
    Int total_multiplicity() const {
        Int t = 0;
        for (const auto& [v, m] : coeffs_) t += m;
        return t;
    }

    friend Divisor operator+(const Divisor& d1, const Divisor& d2) {
        Divisor out = d1;
        for (const auto& [v, m] : d2.coeffs_) out.add(v, m);
        return out;
    }
    friend Divisor operator*(Int k, const Divisor& d) {
        Divisor out;
        if (k == 0) return out;
        for (const auto& [v, m] : d.coeffs_) out.add(v, k * m);
        return out;
    }

    friend bool operator==(const Divisor&, const Divisor&) = default;

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, m] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (m != 1) os << m << "*";
            os << "C" << v.str();
        }
        return os.str();
    }

private:
    std::map<Character, Int> coeffs_;
};

/// Dimensions (h0, h1, h2) of the sheaf cohomology of a line bundle on X.
struct CohDims {
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;

    Int euler_characteristic() const { return h0 - h1 + h2; }
    CohDims reversed() const { return {h2, h1, h0}; }

    friend bool operator==(const CohDims&, const CohDims&) = default;

    std::string str() const {
        return "(" + std::to_string(h0) + "," + std::to_string(h1) + "," + std::to_string(h2) + ")";
    }
};

/// Associated divisor D_W of a fixed-point-free representation W: the
/// character (lambda, mu) of content g contributes multiplicity * g^2 on the
/// primitive direction (lambda, mu)/g, the numerical class of the g^2
/// parallel translates forming X(ker z'). Trivial characters are rejected:
/// the sphere value formula requires W^{T^2} = 0.
inline Divisor divisor_of_rep(const TorusRep& w) {
    if (w.has_trivial_character())
        throw std::invalid_argument(
            "representation has a trivial character; the sphere value needs a "
            "fixed-point-free representation");
    Divisor d;
    for (const auto& [chi, m] : w.terms()) {
        auto [v, g] = primitive_part(chi);
        d.add(v, m * g * g);
    }
    return d;
}

/// Intersection number, the bilinear extension of C_v . C_w = det(v,w)^2.
/// In particular C_v . C_v = 0.
inline Int pairing(const Divisor& d1, const Divisor& d2) {
    Int total = 0;
    for (const auto& [v, mv] : d1.coefficients())
        for (const auto& [w, mw] : d2.coefficients()) {
            Int det = det2(v, w);
            total += mv * mw * det * det;
        }
    return total;
}

/// Nakai-Moishezon for this span of classes: an effective divisor is ample
/// iff it carries at least two distinct directions. Cross-checked against
/// D.D > 0.
inline bool is_ample(const Divisor& d) {
    if (!d.is_effective()) throw std::invalid_argument("is_ample needs an effective divisor");
    bool ample = d.direction_count() >= 2;
    assert(ample == (pairing(d, d) > 0));
    return ample;
}

/// chi(O(D)) = chi(O(-D)) = D.D / 2 (Riemann-Roch on the abelian surface).
inline Int euler_char(const Divisor& d) {
    Int p = pairing(d, d);
    assert(p % 2 == 0);
    return p / 2;
}

enum class BundleSign { plus, minus };

/// Cohomology dimensions of O(+D) / O(-D) for effective D. Three cases by
/// the number k of distinct directions:
///   k = 0: the structure sheaf, (1,2,1) for either sign;
///   k = 1: degree-alpha bundle pulled back from the base curve,
///          plus (alpha, alpha, 0), minus (0, alpha, alpha);
///   k >= 2: D ample, Kodaira vanishing, plus (chi,0,0), minus (0,0,chi).
/// Serre duality holds by construction (trivial canonical bundle).
inline CohDims coh_dims(const Divisor& d, BundleSign sign) {
    if (!d.is_effective()) throw std::invalid_argument("coh_dims needs an effective divisor");
    const Int k = d.direction_count();
    CohDims plus;
    if (k == 0) {
        plus = {1, 2, 1};
    } else if (k == 1) {
        const Int alpha = d.total_multiplicity();
        plus = {alpha, alpha, 0};
    } else {
        plus = {euler_char(d), 0, 0};
    }
    return sign == BundleSign::plus ? plus : plus.reversed();
}

/// Rank of the restriction map H^k(X, O(-D)) -> H^k(X, O_X) induced by the
/// inclusion of sheaves, for effective D.
///   degree 0: 0 unless D = 0 (a global section vanishing on D is zero);
///   degree 1: 2 if D = 0; 1 for one direction (the image is H^1(O(-D_red)),
///             one dimensional); 0 for ample D (the source vanishes);
///   degree 2: always 1, the dual of the inclusion of constants
///             H^0(O_X) >-> H^0(O(D)).
inline Int restriction_map_rank(const Divisor& d, int degree) {
    if (!d.is_effective())
        throw std::invalid_argument("restriction_map_rank needs an effective divisor");
    const Int k = d.direction_count();
    switch (degree) {
        case 0: return k == 0 ? 1 : 0;
        case 1:
            if (k == 0) return 2;
            return k == 1 ? 1 : 0;
        case 2: return 1;
        default: throw std::invalid_argument("degree must be 0, 1 or 2");
    }
}

}  // namespace ellipcp
