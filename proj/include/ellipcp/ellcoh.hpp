#pragma once

// The cohomology-theory layer: values on representation spheres, the
// long-exact-sequence bookkeeping for S(V (x) w)_+ -> S^0 -> S^{V (x) w},
// and the projective-space pipeline with its closed forms.

#include "divisor.hpp"

#include <array>
#include <string>

namespace ellipcp {

/// 2-periodic graded C-dimensions (even, odd).
struct GradedDims {
    Int even = 0;
    Int odd = 0;

    friend GradedDims operator-(const GradedDims& a, const GradedDims& b) {
        return {a.even - b.even, a.odd - b.odd};
    }
    friend bool operator==(const GradedDims&, const GradedDims&) = default;

    std::string str() const {
        return "(" + std::to_string(even) + "," + std::to_string(odd) + ")";
    }
};

/// Dimension-level data of the map H^k(X,O(-D)) -> H^k(X,O_X) in each
/// degree k = 0, 1, 2. Exactness bookkeeping: kernel = source - rank,
/// cokernel = target - rank.
struct LesTable {
    struct Row {
        Int source = 0;
        Int target = 0;
        Int rank = 0;
        Int kernel = 0;
        Int cokernel = 0;

        friend bool operator==(const Row&, const Row&) = default;
    };
    std::array<Row, 3> degree;

    friend bool operator==(const LesTable&, const LesTable&) = default;
};

/// Value of 2-torus elliptic cohomology on the representation sphere S^W for
/// fixed-point-free W: even part h0 + h2, odd part h1 of O(-D_W).
inline GradedDims ec_t2_sphere(const TorusRep& w) {
    CohDims c = coh_dims(divisor_of_rep(w), BundleSign::minus);
    return {c.h0 + c.h2, c.h1};
}

/// Value of circle elliptic cohomology on S^0: H^0(C,O_C) and H^1(C,O_C)
/// are each one dimensional.
inline GradedDims ec_t_point() { return {1, 1}; }

/// The long-exact-sequence table for CP(V): source H^*(X, O(-D_{V(x)w})),
/// target H^*(X, O_X) = (1,2,1), ranks from the restriction map.
inline LesTable les_table(const CircleRep& v) {
    if (v.empty()) throw std::invalid_argument("zero representation has no projective space");
    Divisor d = divisor_of_rep(tensor_with_w(v));
    CohDims source = coh_dims(d, BundleSign::minus);
    CohDims target = coh_dims(Divisor{}, BundleSign::plus);
    LesTable t;
    const std::array<Int, 3> src = {source.h0, source.h1, source.h2};
    const std::array<Int, 3> tgt = {target.h0, target.h1, target.h2};
    for (int k = 0; k < 3; ++k) {
        Int rank = restriction_map_rank(d, k);
        assert(rank >= 0 && rank <= std::min(src[k], tgt[k]));
        t.degree[k] = {src[k], tgt[k], rank, src[k] - rank, tgt[k] - rank};
    }
    return t;
}

/// d = sum_{i<j} alpha_i alpha_j (i-j)^2, the closed-form invariant.
inline Int d_invariant(const CircleRep& v) {
    Int d = 0;
    for (auto it = v.terms().begin(); it != v.terms().end(); ++it)
        for (auto jt = std::next(it); jt != v.terms().end(); ++jt) {
            Int diff = it->first - jt->first;
            d += it->second * jt->second * diff * diff;
        }
    return d;
}

/// Unreduced value of EC_T(CP(V)_+) read off the long exact sequence:
/// even = cokernel_0 + kernel_1, odd = cokernel_1 + kernel_2.
inline GradedDims ec_cp_pipeline(const CircleRep& v) {
    LesTable t = les_table(v);
    return {t.degree[0].cokernel + t.degree[1].kernel,
            t.degree[1].cokernel + t.degree[2].kernel};
}

/// Closed form: one isotypic component alpha z^n gives (alpha-1, alpha-1)
/// reduced; several components give (0, d) reduced. Unreduced adds the S^0
/// correction (1, 1).
inline GradedDims ec_cp_closed_form(const CircleRep& v, bool reduced = true) {
    if (v.empty()) throw std::invalid_argument("zero representation has no projective space");
    GradedDims value;
    if (v.component_count() == 1) {
        Int alpha = v.dimension();
        value = {alpha - 1, alpha - 1};
    } else {
        value = {0, d_invariant(v)};
    }
    if (!reduced) {
        value.even += 1;
        value.odd += 1;
    }
    return value;
}

/// EC_T(CP(V)): the pipeline value, cross-checked against the closed form.
/// Reduced subtracts the S^0 summand (1,1) of CP(V)_+ = CP(V) v S^0.
inline GradedDims ec_cp(const CircleRep& v, bool reduced = true) {
    GradedDims unreduced = ec_cp_pipeline(v);
    assert(unreduced.even >= 1 && unreduced.odd >= 1);
    GradedDims value = reduced ? unreduced - ec_t_point() : unreduced;
    assert(value == ec_cp_closed_form(v, reduced));
    return value;
}

}  // namespace ellipcp
