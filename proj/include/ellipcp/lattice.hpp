#pragma once

// Finite subgroups of the 2-torus in exact arithmetic, and the torsion-point
// brute-force oracle on the real-torus model of E and E x E.

#include "character.hpp"
#include "rational.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <vector>

namespace ellipcp {

/// Point of finite order on E = (R/Z)^2; coordinates reduced to [0,1).
struct TorsionPoint {
    Rational x;
    Rational y;

    TorsionPoint() = default;
    TorsionPoint(Rational px, Rational py) : x(px.mod1()), y(py.mod1()) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    Int order() const { return std::lcm(x.den(), y.den()); }

    friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
    friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

/// The subgroup H_v^j of T^2: kernel of z_v^j, with j connected components
/// and identity component ker z_v. The privileged subgroups are
/// H1 = ker z_(1,0) = 1 x T and H2 = ker z_(0,1) = T x 1.
struct CodimOneSubgroup {
    Character v;         // canonical primitive direction
    Int components = 1;  // j >= 1

    friend bool operator==(const CodimOneSubgroup&, const CodimOneSubgroup&) = default;
};

namespace detail {

// Column-style Hermite form of an integer 2xn matrix of full rank:
// returns the basis [[p,0],[q,r]] (columns (p,q) and (0,r)) of the column
// span, with p,r > 0 and 0 <= q < r.
inline std::array<Int, 4> hnf_column_basis(std::vector<std::array<Int, 2>> cols) {
    // Euclid on the first row across columns.
    while (true) {
        int nonzero = -1, count = 0;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (cols[i][0] != 0) { ++count; nonzero = static_cast<int>(i); }
        if (count <= 1) break;
        // pick the column with smallest |first entry| as pivot
        int pivot = nonzero;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (cols[i][0] != 0 && std::abs(cols[i][0]) < std::abs(cols[pivot][0]))
                pivot = static_cast<int>(i);
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (static_cast<int>(i) == pivot || cols[i][0] == 0) continue;
            Int q = cols[i][0] / cols[pivot][0];
            cols[i][0] -= q * cols[pivot][0];
            cols[i][1] -= q * cols[pivot][1];
        }
    }
    Int p = 0, q = 0, r = 0;
    for (const auto& c : cols) {
        if (c[0] != 0) {
            p = c[0] < 0 ? -c[0] : c[0];
            q = c[0] < 0 ? -c[1] : c[1];
        } else {
            r = std::gcd(r, c[1] < 0 ? -c[1] : c[1]);
        }
    }
    if (p == 0 || r == 0) throw std::invalid_argument("columns do not span a rank-2 lattice");
    q %= r;
    if (q < 0) q += r;
    return {p, 0, q, r};  // row-major [[p,0],[q,r]]
}

// Row-style Hermite form of a nonsingular integer 2x2 matrix under left
// unimodular action: [[a,b],[0,d]] with a,d > 0 and 0 <= b < d.
inline std::array<Int, 4> hnf_row(Int m00, Int m01, Int m10, Int m11) {
    if (m00 * m11 - m01 * m10 == 0) throw std::invalid_argument("singular membership matrix");
    while (m10 != 0) {
        Int q = m00 / m10;
        m00 -= q * m10;
        m01 -= q * m11;
        std::swap(m00, m10);
        std::swap(m01, m11);
    }
    if (m00 < 0) { m00 = -m00; m01 = -m01; }
    if (m11 < 0) { m11 = -m11; }
    Int b = m01 % m11;
    if (b < 0) b += m11;
    return {m00, b, 0, m11};
}

}  // namespace detail

/// Finite subgroup F of T^2 = (R/Z)^2, encoded by the lattice Z^2 <= L <= Q^2
/// with F = L/Z^2. Canonical form is the membership matrix in row Hermite form
///   M = [[a,b],[0,d]],  L = M^{-1} Z^2,  a,d >= 1,  0 <= b < d,
/// unique per subgroup, so equal subgroups compare bitwise equal.
/// |F| = det M = a*d.
class FiniteSubgroup {
public:
    FiniteSubgroup() = default;  // trivial subgroup, M = I

    static FiniteSubgroup from_generators(std::span<const TorsionPoint> gens) {
        Int common = 1;
        for (const auto& g : gens) common = std::lcm(common, g.order());
        std::vector<std::array<Int, 2>> cols = {{common, 0}, {0, common}};
        for (const auto& g : gens)
            cols.push_back({g.x.num() * (common / g.x.den()), g.y.num() * (common / g.y.den())});
        auto basis = detail::hnf_column_basis(std::move(cols));
        // L = (1/common) * basis Z^2, so M = common * basis^{-1}; integral
        // because Z^2 <= L.
        Int det = basis[0] * basis[3];
        Int m00 = exact_div(common * basis[3], det);
        Int m10 = exact_div(-common * basis[2], det);
        Int m11 = exact_div(common * basis[0], det);
        return from_membership_rows(m00, 0, m10, m11);
    }

    static FiniteSubgroup from_generators(std::initializer_list<TorsionPoint> gens) {
        return from_generators(std::span<const TorsionPoint>(gens.begin(), gens.size()));
    }

    /// Subgroup {u : r0.u and r1.u integral} for integer rows r0, r1 with
    /// nonzero determinant.
    static FiniteSubgroup from_membership_rows(Int r00, Int r01, Int r10, Int r11) {
        auto h = detail::hnf_row(r00, r01, r10, r11);
        FiniteSubgroup f;
        f.a_ = h[0];
        f.b_ = h[1];
        f.d_ = h[3];
        return f;
    }

    /// The cyclic subgroup <(1/n, 0)> of order n.
    static FiniteSubgroup cyclic(Int n) {
        if (n < 1) throw std::invalid_argument("cyclic subgroup needs order >= 1");
        return from_generators({TorsionPoint(Rational(1, n), Rational(0))});
    }

    Int order() const { return a_ * d_; }
    bool is_trivial() const { return a_ == 1 && d_ == 1; }

    /// F is cyclic iff the Smith form of the membership matrix is diag(1,|F|).
    bool is_cyclic() const { return std::gcd(std::gcd(a_, b_), d_) == 1; }

    /// F meets H1 = 1 x T trivially iff the canonical form admits no element
    /// (0, t) with t not integral.
    bool meets_h1_trivially() const { return std::gcd(b_, d_) == 1; }

    bool contains(const TorsionPoint& p) const {
        return (Rational(a_) * p.x + Rational(b_) * p.y).is_integral() &&
               (Rational(d_) * p.y).is_integral();
    }

    bool contains(const FiniteSubgroup& other) const {
        // L' <= L iff M maps a basis of L' to integer vectors.
        return a_ % other.a_ == 0 && d_ % other.d_ == 0 &&
               (a_ * other.b_ - b_ * other.a_) % (other.a_ * other.d_) == 0;
    }

    /// True iff the character is integral on L, i.e. z kills every element of
    /// F. Equivalently z lies in the dual lattice spanned by the rows of M.
    bool character_vanishes(const Character& z) const {
        if (z.lambda % a_ != 0) return false;
        return (z.mu - (z.lambda / a_) * b_) % d_ == 0;
    }

    /// All elements, via coset representatives of Z^2 / M Z^2.
    std::vector<TorsionPoint> elements() const {
        std::vector<TorsionPoint> out;
        out.reserve(static_cast<std::size_t>(order()));
        for (Int r = 0; r < a_; ++r)
            for (Int s = 0; s < d_; ++s)
                out.push_back(TorsionPoint(Rational(d_ * r - b_ * s, a_ * d_), Rational(s, d_)));
        return out;
    }

    /// Basis of L as columns of M^{-1}: (1/a, 0) and (-b/(a d), 1/d).
    /// Integrality of a character against these two points decides triviality
    /// on all of F.
    std::array<TorsionPoint, 2> lattice_basis() const {
        return {TorsionPoint(Rational(1, a_), Rational(0)),
                TorsionPoint(Rational(-b_, a_ * d_), Rational(1, d_))};
    }

    /// Smith invariants (s1, s2) of the membership matrix, s1 | s2,
    /// s1 * s2 = |F|; F = Z/s1 x Z/s2.
    std::pair<Int, Int> smith_invariants() const {
        Int s1 = std::gcd(std::gcd(a_, b_), d_);
        return {s1, order() / s1};
    }

    Int m00() const { return a_; }
    Int m01() const { return b_; }
    Int m11() const { return d_; }

    friend bool operator==(const FiniteSubgroup&, const FiniteSubgroup&) = default;
    friend auto operator<=>(const FiniteSubgroup&, const FiniteSubgroup&) = default;

    std::string str() const {
        if (is_trivial()) return "trivial";
        std::string s = "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[0," +
                        std::to_string(d_) + "]]";
        return s;
    }

private:
    // canonical membership matrix [[a,b],[0,d]]
    Int a_ = 1;
    Int b_ = 0;
    Int d_ = 1;
};

inline FiniteSubgroup join(const FiniteSubgroup& f1, const FiniteSubgroup& f2) {
    auto b1 = f1.lattice_basis();
    auto b2 = f2.lattice_basis();
    std::array<TorsionPoint, 4> gens = {b1[0], b1[1], b2[0], b2[1]};
    return FiniteSubgroup::from_generators(gens);
}

inline FiniteSubgroup meet(const FiniteSubgroup& f1, const FiniteSubgroup& f2) {
    const FiniteSubgroup& small = f1.order() <= f2.order() ? f1 : f2;
    const FiniteSubgroup& big = f1.order() <= f2.order() ? f2 : f1;
    std::vector<TorsionPoint> gens;
    for (const auto& p : small.elements())
        if (big.contains(p)) gens.push_back(p);
    return FiniteSubgroup::from_generators(gens);
}

inline bool contains(const FiniteSubgroup& f1, const FiniteSubgroup& f2) {
    return f1.contains(f2);
}

inline Int order(const FiniteSubgroup& f) { return f.order(); }
inline bool is_cyclic(const FiniteSubgroup& f) { return f.is_cyclic(); }

/// F <= H_v^j, decided exactly on the lattice basis of F.
inline bool codim1_contains(const FiniteSubgroup& f, const CodimOneSubgroup& h) {
    return f.character_vanishes(scale(h.v, h.components));
}

/// n_i(F): least n with F <= H_v^n, i.e. <F, H_v> = H_v^n. Computed as the
/// lcm over lattice basis points u of the denominator of v.u.
inline Int n_index(const FiniteSubgroup& f, const Character& v) {
    if (v.is_trivial() || content(v) != 1)
        throw std::invalid_argument("n_index needs a primitive direction");
    Int n = 1;
    for (const auto& u : f.lattice_basis()) {
        Rational value = Rational(v.lambda) * u.x + Rational(v.mu) * u.y;
        n = std::lcm(n, value.den());
    }
    return n;
}

/// For cyclic F with F and H1 = 1 x T meeting trivially, produce a connected
/// codimension-1 subgroup H with F <= H and H meeting H1 trivially. Follows
/// the Bezout construction: a generator (a/n, b/n) with gcd(a,n) = 1 is
/// rescaled to (1/n, c/n), and H is the image of the line through (1, c),
/// i.e. ker of the character (c, -1) up to canonical sign.
inline CodimOneSubgroup enclosing_codim1(const FiniteSubgroup& f) {
    if (!f.is_cyclic())
        throw std::invalid_argument("enclosing_codim1: subgroup is not cyclic");
    if (!f.meets_h1_trivially())
        throw std::invalid_argument("enclosing_codim1: subgroup meets H1 nontrivially");
    if (f.is_trivial()) return {Character{0, 1}, 1};

    const Int n = f.order();
    TorsionPoint gen;
    bool found = false;
    for (const auto& p : f.elements()) {
        if (p.order() != n) continue;
        if (!found || std::pair(p.x, p.y) < std::pair(gen.x, gen.y)) gen = p;
        found = true;
    }
    assert(found);
    Int a = gen.x.num() * (n / gen.x.den());
    Int b = gen.y.num() * (n / gen.y.den());
    assert(std::gcd(a, n) == 1);

    // s = a^{-1} mod n, so that s * gen = (1/n, sb/n) generates F
    Int s = 0;
    for (Int t = 1; t < n; ++t)
        if ((t * a) % n == 1) { s = t; break; }
    if (n == 1) s = 0;
    Int c = ((s * b) % n + n) % n;

    CodimOneSubgroup h = c == 0 ? CodimOneSubgroup{Character{0, 1}, 1}
                                : CodimOneSubgroup{Character{c, -1}, 1};
    assert(codim1_contains(f, h));
    return h;
}

/// The level-t torsion of H_v^j as a finite subgroup, by enumeration of the
/// (1/t)-grid.
inline FiniteSubgroup codim1_torsion(const CodimOneSubgroup& h, Int level) {
    if (level < 1) throw std::invalid_argument("torsion level must be >= 1");
    std::vector<TorsionPoint> gens;
    for (Int p = 0; p < level; ++p)
        for (Int q = 0; q < level; ++q)
            if ((h.components * (h.v.lambda * p + h.v.mu * q)) % level == 0)
                gens.push_back(TorsionPoint(Rational(p, level), Rational(q, level)));
    return FiniteSubgroup::from_generators(gens);
}

/// H_A^{j_A} n H_B^{j_B} for non-parallel directions: finite, computed from
/// the stacked membership rows.
inline FiniteSubgroup codim1_intersection(const CodimOneSubgroup& ha, const CodimOneSubgroup& hb) {
    if (det2(ha.v, hb.v) == 0)
        throw std::invalid_argument("parallel codimension-1 subgroups have infinite intersection");
    return FiniteSubgroup::from_membership_rows(
        ha.components * ha.v.lambda, ha.components * ha.v.mu,
        hb.components * hb.v.lambda, hb.components * hb.v.mu);
}

/// All n^2 points of E[n] on the real-torus model.
inline std::vector<TorsionPoint> torsion_points(Int n) {
    if (n < 1) throw std::invalid_argument("torsion_points needs n >= 1");
    std::vector<TorsionPoint> out;
    out.reserve(static_cast<std::size_t>(n * n));
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b) out.push_back(TorsionPoint(Rational(a, n), Rational(b, n)));
    return out;
}

/// |E<n>|: number of points of exact order n, by enumeration.
inline Int exact_order_count(Int n) {
    Int count = 0;
    for (const auto& p : torsion_points(n))
        if (p.order() == n) ++count;
    return count;
}

/// Counts, by exhaustive enumeration of the D-torsion grid on
/// E x E = (R/Z)^4 with D = |det(v1,v2)|, the simultaneous solutions of
///   lambda1 P + mu1 Q = e  and  lambda2 P + mu2 Q = e.
/// The kernel lies in D-torsion since adj(M) M = det(M) I.
inline Int intersection_count_oracle(const Character& v1, const Character& v2) {
    if (content(v1) != 1 || content(v2) != 1)
        throw std::invalid_argument("oracle needs primitive directions");
    const Int det = det2(v1, v2);
    if (det == 0) throw std::invalid_argument("parallel curves meet in infinitely many points");
    const Int d = det < 0 ? -det : det;
    Int count = 0;
    for (Int p1 = 0; p1 < d; ++p1)
        for (Int p2 = 0; p2 < d; ++p2)
            for (Int q1 = 0; q1 < d; ++q1)
                for (Int q2 = 0; q2 < d; ++q2) {
                    if ((v1.lambda * p1 + v1.mu * q1) % d != 0) continue;
                    if ((v1.lambda * p2 + v1.mu * q2) % d != 0) continue;
                    if ((v2.lambda * p1 + v2.mu * q1) % d != 0) continue;
                    if ((v2.lambda * p2 + v2.mu * q2) % d != 0) continue;
                    ++count;
                }
    return count;
}

}  // namespace ellipcp
