#pragma once

// Desk-scale algebraic-model combinatorics: the canonical splitting
// F = H_A^{n_A} n H_B^{n_B}, Euler classes in the coordinates Q[x_A, x_B],
// suspension profiles of representation spheres, and the cell models of the
// natural cells G/H_+.

#include "lattice.hpp"
#include "repr.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ellipcp {

/// F = H_A^{n_A} n H_B^{n_B}: the rows n_A * a_dir and n_B * b_dir form a
/// basis of the lattice of characters vanishing on F.
struct Splitting {
    Character a_dir;
    Int n_a = 1;
    Character b_dir;
    Int n_b = 1;

    friend bool operator==(const Splitting&, const Splitting&) = default;

    std::string str() const {
        return "A=" + a_dir.str() + "^" + std::to_string(n_a) + ", B=" + b_dir.str() + "^" +
               std::to_string(n_b);
    }
};

namespace detail {

// Candidate directions ranked by (|mu|, lambda, sign): (1,0), (0,1), (1,1),
// (1,-1), (2,1), (2,-1), ..., (1,2), ... The first canonical primitive
// vector satisfying the predicate is returned; lambda_cap bounds the lambda
// scan for a fixed |mu| (validity is periodic in lambda, so a large enough
// cap loses nothing).
inline Character least_primitive_direction(const std::function<bool(const Character&)>& ok,
                                           const std::function<Int(Int)>& lambda_cap) {
    constexpr Int kMuCap = 1'000'000;
    for (Int m = 0; m <= kMuCap; ++m) {
        const Int cap = lambda_cap(m);
        for (Int lam = 0; lam <= cap; ++lam) {
            for (Int mu : {m, -m}) {
                Character v{lam, mu};
                if (!is_canonical_primitive(v)) continue;
                if (ok(v)) return v;
                if (m == 0) break;
            }
        }
    }
    throw std::logic_error("direction search exhausted");
}

}  // namespace detail

/// Deterministic splitting of F as an intersection of two codimension-1
/// subgroups. (n_A, n_B) are the Smith invariants of F; the directions are
/// the least canonical primitive vectors, ranked by (|mu|, lambda, sign of
/// mu), such that n_A * a_dir kills F and det(a_dir, b_dir) = +-1. The
/// result is verified by reconstructing F.
inline Splitting decompose(const FiniteSubgroup& f) {
    const auto [s1, s2] = f.smith_invariants();
    const Int bound = f.order();
    Character a_dir = detail::least_primitive_direction(
        [&](const Character& v) { return f.character_vanishes(scale(v, s1)); },
        [&](Int m) { return bound * (m + 2) + 2; });
    Character b_dir = detail::least_primitive_direction(
        [&](const Character& v) {
            Int det = det2(a_dir, v);
            return det == 1 || det == -1;
        },
        [&](Int) { return std::abs(a_dir.lambda) + std::abs(a_dir.mu) + 2; });
    Splitting s{a_dir, s1, b_dir, s2};
    assert(codim1_intersection({a_dir, s1}, {b_dir, s2}) == f);
    return s;
}

/// Element of Q[x_A, x_B] attached to a splitting of F; x_A and x_B have
/// degree -2. Zero is the empty term map.
class EulerPolynomial {
public:
    using Monomial = std::pair<Int, Int>;  // exponents of (x_A, x_B)

    explicit EulerPolynomial(Splitting split) : split_(std::move(split)) {}

    static EulerPolynomial one(const Splitting& split) {
        EulerPolynomial p(split);
        p.terms_[{0, 0}] = Rational(1);
        return p;
    }

    /// p x_A + q x_B.
    static EulerPolynomial linear_form(const Splitting& split, Int p, Int q) {
        EulerPolynomial out(split);
        if (p != 0) out.terms_[{1, 0}] = Rational(p);
        if (q != 0) out.terms_[{0, 1}] = Rational(q);
        return out;
    }

    const Splitting& splitting() const { return split_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
               terms_.begin()->second == Rational(1);
    }

    /// Homogeneous linear form a x_A + b x_B (the shape of the elements x_i).
    bool is_linear_form() const {
        if (terms_.empty()) return false;
        for (const auto& [mono, c] : terms_)
            if (mono.first + mono.second != 1) return false;
        return true;
    }

    Int max_monomial_degree() const {
        Int d = 0;
        for (const auto& [mono, c] : terms_) d = std::max(d, mono.first + mono.second);
        return d;
    }

    /// Cohomological degree: each variable sits in degree -2.
    Int degree() const { return -2 * max_monomial_degree(); }

    EulerPolynomial& operator*=(const EulerPolynomial& other) {
        assert(split_ == other.split_);
        std::map<Monomial, Rational> out;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : other.terms_) {
                Monomial m{m1.first + m2.first, m1.second + m2.second};
                Rational c = out.count(m) ? out[m] + c1 * c2 : c1 * c2;
                if (c.is_zero())
                    out.erase(m);
                else
                    out[m] = c;
            }
        terms_ = std::move(out);
        return *this;
    }
    friend EulerPolynomial operator*(EulerPolynomial a, const EulerPolynomial& b) {
        a *= b;
        return a;
    }

    friend bool operator==(const EulerPolynomial&, const EulerPolynomial&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [mono, c] = *it;
            if (!first) os << " + ";
            first = false;
            bool constant = mono.first == 0 && mono.second == 0;
            if (constant || c != Rational(1)) {
                os << c.str();
                if (!constant) os << "*";
            }
            if (mono.first == 1)
                os << "x_A";
            else if (mono.first > 1)
                os << "x_A^" << mono.first;
            if (mono.first > 0 && mono.second > 0) os << "*";
            if (mono.second == 1)
                os << "x_B";
            else if (mono.second > 1)
                os << "x_B^" << mono.second;
        }
        return os.str();
    }

private:
    Splitting split_;
    std::map<Monomial, Rational> terms_;
};

namespace detail {

// chi = p * (n_A a_dir) + q * (n_B b_dir), solvable over Z exactly when chi
// kills F, since the two rows form a basis of that character lattice.
inline std::pair<Int, Int> splitting_coordinates(const Splitting& s, const Character& chi) {
    Character col_a = scale(s.a_dir, s.n_a);
    Character col_b = scale(s.b_dir, s.n_b);
    Int det = det2(col_a, col_b);
    assert(det != 0);
    Int p_num = det2(chi, col_b);
    Int q_num = det2(col_a, chi);
    assert(p_num % det == 0 && q_num % det == 0);
    return {p_num / det, q_num / det};
}

}  // namespace detail

/// Euler class e(W) restricted to the F-component of the big product ring:
/// product over the characters of W (with multiplicity) of 1 when the
/// character is nontrivial on F, and of the linear form p x_A + q x_B
/// expressing the character in the splitting basis otherwise.
inline EulerPolynomial euler_class(const TorusRep& w, const FiniteSubgroup& f) {
    Splitting s = decompose(f);
    EulerPolynomial e = EulerPolynomial::one(s);
    for (const auto& [chi, mult] : w.terms()) {
        if (!f.character_vanishes(chi)) continue;
        auto [p, q] = detail::splitting_coordinates(s, chi);
        EulerPolynomial form = EulerPolynomial::linear_form(s, p, q);
        for (Int i = 0; i < mult; ++i) e *= form;
    }
    return e;
}

/// e(W_plus - W_minus) = e(W_plus) / e(W_minus), kept as an uncancelled
/// (numerator, denominator) pair.
inline std::pair<EulerPolynomial, EulerPolynomial> euler_class_virtual(const TorusRep& w_plus,
                                                                       const TorusRep& w_minus,
                                                                       const FiniteSubgroup& f) {
    return {euler_class(w_plus, f), euler_class(w_minus, f)};
}

/// Suspension shifts of S^W over a working family: shift(F) = 2 dim_C W^F.
inline std::vector<std::pair<FiniteSubgroup, Int>> suspension_profile(
    const TorusRep& w, const std::vector<FiniteSubgroup>& family) {
    std::vector<std::pair<FiniteSubgroup, Int>> out;
    out.reserve(family.size());
    for (const auto& f : family) out.emplace_back(f, 2 * fixed_dim(w, f));
    return out;
}

/// All subgroups of F, by enumeration of the intermediate lattices in
/// Hermite form; canonical values sorted by (order, matrix entries).
inline std::vector<FiniteSubgroup> enumerate_subgroups(const FiniteSubgroup& f) {
    std::vector<FiniteSubgroup> out;
    const Int n = f.order();
    for (Int a = 1; a <= n; ++a) {
        if (n % a != 0) continue;
        for (Int d = 1; a * d <= n; ++d) {
            if (n % (a * d) != 0) continue;
            for (Int b = 0; b < d; ++b) {
                FiniteSubgroup sub = FiniteSubgroup::from_membership_rows(a, b, 0, d);
                if (f.contains(sub)) out.push_back(sub);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FiniteSubgroup& x, const FiniteSubgroup& y) {
        return std::tuple(x.order(), x.m00(), x.m01(), x.m11()) <
               std::tuple(y.order(), y.m00(), y.m01(), y.m11());
    });
    return out;
}

enum class CellEntryKind { zero, suspended_q, suspended_q_power, suspended_poly_ring };

/// Graded-dimension descriptor of one level of a cell model.
struct CellEntry {
    CellEntryKind kind = CellEntryKind::zero;
    Int shift = 0;           // suspension degree
    Int count = 1;           // rank, for suspended_q_power
    std::string detail;      // presentation, e.g. the quotient linear form

    static CellEntry zero() { return {}; }
    static CellEntry suspended_q(Int shift) { return {CellEntryKind::suspended_q, shift, 1, ""}; }
    static CellEntry suspended_q_power(Int shift, Int count) {
        return {CellEntryKind::suspended_q_power, shift, count, ""};
    }
    static CellEntry suspended_poly_ring(Int shift, std::string detail) {
        return {CellEntryKind::suspended_poly_ring, shift, 1, std::move(detail)};
    }

    Int dim_in_degree(Int k) const {
        switch (kind) {
            case CellEntryKind::zero: return 0;
            case CellEntryKind::suspended_q: return k == shift ? 1 : 0;
            case CellEntryKind::suspended_q_power: return k == shift ? count : 0;
            case CellEntryKind::suspended_poly_ring:
                return (k <= shift && (shift - k) % 2 == 0) ? 1 : 0;
        }
        return 0;
    }

    std::string describe() const {
        auto susp = [](Int s) {
            if (s == 0) return std::string();
            if (s == 1) return std::string("Σ");
            return "Σ^" + std::to_string(s);
        };
        switch (kind) {
            case CellEntryKind::zero: return "0";
            case CellEntryKind::suspended_q: return susp(shift) + "Q";
            case CellEntryKind::suspended_q_power:
                return susp(shift) + "Q^" + std::to_string(count);
            case CellEntryKind::suspended_poly_ring:
                return susp(shift) + "Q[x_A,x_B]/(" + detail + ")";
        }
        return "0";
    }

    friend bool operator==(const CellEntry&, const CellEntry&) = default;
};

/// Values of the algebraic model of a natural cell at the subgroup levels of
/// the 2-torus: the vertex, the distinguished codimension-1 level (when one
/// exists), all other codimension-1 levels, and the bottom level per finite
/// subgroup of the supplied working family.
struct CellModelTable {
    CellEntry top;
    std::optional<Character> direction;
    CellEntry at_direction;
    CellEntry other_codim1;
    std::vector<std::pair<FiniteSubgroup, CellEntry>> bottom;

    Int bottom_dim_in_degree(Int k) const {
        Int d = 0;
        for (const auto& [f, e] : bottom) d += e.dim_in_degree(k);
        return d;
    }
};

/// Model of G/H_+ for H = ker z_v: zero at the vertex and at every other
/// direction, Sigma Q at H_v, and at the bottom one suspended one-variable
/// polynomial ring Q[x_A,x_B]/(e(z_v)|_F) per family subgroup inside ker z_v.
inline CellModelTable cell_model_codim1(const Character& v,
                                        const std::vector<FiniteSubgroup>& family) {
    if (!is_canonical_primitive(v))
        throw std::invalid_argument("cell_model_codim1 needs a canonical primitive direction");
    CellModelTable t;
    t.top = CellEntry::zero();
    t.direction = v;
    t.at_direction = CellEntry::suspended_q(1);
    t.other_codim1 = CellEntry::zero();
    for (const auto& f : family) {
        if (codim1_contains(f, {v, 1})) {
            Splitting s = decompose(f);
            auto [p, q] = detail::splitting_coordinates(s, v);
            std::string form = EulerPolynomial::linear_form(s, p, q).str();
            t.bottom.emplace_back(f, CellEntry::suspended_poly_ring(1, form));
        } else {
            t.bottom.emplace_back(f, CellEntry::zero());
        }
    }
    return t;
}

/// Model of G/F_+ for finite F: zero at every connected-subgroup level, and
/// at the bottom the suspended rationalized Burnside ring, Sigma^2 Q^(number
/// of subgroups of F).
inline CellModelTable cell_model_finite(const FiniteSubgroup& f) {
    CellModelTable t;
    t.top = CellEntry::zero();
    t.direction = std::nullopt;
    t.at_direction = CellEntry::zero();
    t.other_codim1 = CellEntry::zero();
    Int count = static_cast<Int>(enumerate_subgroups(f).size());
    t.bottom.emplace_back(f, CellEntry::suspended_q_power(2, count));
    return t;
}

}  // namespace ellipcp
