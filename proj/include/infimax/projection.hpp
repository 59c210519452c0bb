#pragma once

// Abelianization matrices, the Hilbert projective metric and Birkhoff
// contraction coefficient, and the asymptotic stable covector of the
// infinite matrix product.
//
// The covector of the list n is the limit of (A^{(k)})^{-T} applied to any
// direction in the (-,-,+) cone. Conjugating by the sign flip on the third
// coordinate turns each factor into the nonnegative matrix B_n, so the limit
// is computed as a left-to-right product of B matrices whose cone
// contraction (coefficient <= 1/2 per three factors) yields a certified
// stopping rule: stop when the Hilbert diameter of the images of the three
// basis directions drops below the tolerance.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "infimax/errors.hpp"
#include "infimax/index_list.hpp"
#include "infimax/linalg.hpp"
#include "infimax/substitution.hpp"

namespace infimax {

/// Abelianization A_n with (A_n)_{i,j} = |Lambda_n(j)|_i.
inline mat3i abelianization_matrix(int n) {
    if (n < 1) throw std::invalid_argument("substitution index must be >= 1");
    std::int64_t nn = n;
    return mat3i{{{{0, nn + 1, nn}, {1, 0, 0}, {0, 1, 1}}}};
}

/// B_n = tau A_n^{-T} tau, a nonnegative matrix with strictly positive cube.
inline mat3i b_matrix(int n) {
    if (n < 1) throw std::invalid_argument("substitution index must be >= 1");
    std::int64_t nn = n;
    return mat3i{{{{0, 1, 1}, {1, 0, 0}, {0, nn, nn + 1}}}};
}

/// Hilbert projective distance log max_{i,j} (v_i w_j)/(v_j w_i); both
/// vectors must be strictly positive.
inline double hilbert_distance(const vec3& v, const vec3& w) {
    double max_ratio = 0.0, min_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        if (!(v[i] > 0.0) || !(w[i] > 0.0))
            throw std::invalid_argument("hilbert_distance needs strictly positive entries");
        double r = v[i] / w[i];
        max_ratio = std::max(max_ratio, r);
        min_ratio = std::min(min_ratio, r);
    }
    return std::log(max_ratio / min_ratio);
}

/// Cross-ratio d(M) = max a_ik a_jl / (a_il a_jk) over strictly positive M.
inline double cross_ratio(const mat3& M) {
    double d = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    if (!(M.m[i][k] > 0.0))
                        throw std::invalid_argument("cross_ratio needs strictly positive entries");
                    d = std::max(d, (M.m[i][k] * M.m[j][l]) / (M.m[i][l] * M.m[j][k]));
                }
    return d;
}

/// Birkhoff contraction coefficient tau(d(M)) = (sqrt(d)-1)/(sqrt(d)+1).
inline double birkhoff_coefficient(const mat3& M) {
    double s = std::sqrt(cross_ratio(M));
    return (s - 1.0) / (s + 1.0);
}

/// The asymptotic stable covector: unit vector with signs (-,-,+), plus a
/// certified error radius and the product depth that achieved it.
struct stable_covector {
    vec3 ell{};
    double err = 0.0;
    std::size_t depth_used = 0;

    double l1() const { return ell[0]; }
    double l2() const { return ell[1]; }
    double l3() const { return ell[2]; }
};

namespace detail {

/// Hilbert diameter of the three column directions of M.
inline double column_diameter(const mat3& M) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) d = std::max(d, hilbert_distance(M.column(i), M.column(j)));
    return d;
}

inline vec3 normalized_positive(vec3 v) {
    double s = v[0] + v[1] + v[2];
    return scaled(v, 1.0 / s);
}

} // namespace detail

/// Compute the stable covector of `n` to certified accuracy `tol`.
///
/// Accumulates the left-to-right B product with sup-norm renormalization
/// until the Hilbert diameter of the three basis-image directions is below
/// tol/10; for periodic and constant tails the result is then polished by
/// power iteration on the period product. A truncated list that runs out
/// before certification throws depth_exhausted_error carrying the depth
/// reached (the achieved diameter is reported in the message).
inline stable_covector compute_stable_covector(const index_list& n, double tol = 1e-12) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    vec3 dir;
    double err;
    std::size_t depth;

    if (n.tail() == tail_policy::truncated) {
        const double target = tol / 10.0;
        mat3 prod = mat3::identity();
        std::size_t k = 0;
        double diam = std::numeric_limits<double>::infinity();
        // Any product of three B matrices is strictly positive, so the
        // diameter is finite from depth 3 on and at least halves every three
        // further levels.
        while (k < 3 || diam >= target) {
            if (k + 1 > n.prefix().size())
                throw depth_exhausted_error(
                    "index list exhausted at depth " + std::to_string(k) +
                        " before covector tolerance was certified (achieved diameter " +
                        std::to_string(diam) + ")",
                    k);
            prod = prod * b_matrix(n.at(k + 1)).to_double();
            prod.scale(1.0 / prod.max_abs());
            ++k;
            if (k >= 3) diam = detail::column_diameter(prod);
        }
        dir = detail::normalized_positive(prod.column(0));
        err = std::max(diam, 1e-16);
        depth = k;
    } else {
        // Dominant eigendirection of the period product, mapped back through
        // the prefix product.
        std::size_t pre = n.prefix().size();
        std::size_t period_len = n.period().size();
        mat3 q = mat3::identity();
        for (std::size_t j = 0; j < period_len; ++j)
            q = q * b_matrix(n.at(pre + 1 + j)).to_double();
        q.scale(1.0 / q.max_abs());

        vec3 v{1.0, 1.0, 1.0};
        std::size_t iters = 0;
        for (; iters < 400; ++iters) {
            vec3 w = detail::normalized_positive(q * v);
            double step = hilbert_distance(w, v);
            v = w;
            if (step < 1e-16 && iters > 4) break;
        }

        mat3 headprod = mat3::identity();
        for (std::size_t j = 1; j <= pre; ++j) {
            headprod = headprod * b_matrix(n.at(j)).to_double();
            headprod.scale(1.0 / headprod.max_abs());
        }
        dir = detail::normalized_positive(headprod * v);
        err = 1e-15;
        depth = pre + period_len * iters;
    }

    // Map back through tau and the sign choice: ell in the (-,-,+) cone.
    vec3 ell{-dir[0], -dir[1], dir[2]};
    ell = scaled(ell, 1.0 / norm2(ell));
    if (!(ell[0] < 0.0 && ell[1] < 0.0 && ell[2] > 0.0))
        throw std::runtime_error("computed covector violates the (-,-,+) sign pattern");

    stable_covector out;
    out.ell = ell;
    // Hilbert diameter is treated as a conservative Euclidean radius; the
    // certification target was tol/10.
    out.err = err;
    out.depth_used = depth;
    return out;
}

/// Covector iterates ell^{(0)} = ell, ell^{(k)} = A_{n_k}^T ell^{(k-1)} for
/// k = 0..K. Each iterate must stay in the (-,-,+) cone; a violation throws
/// sign_violation_error carrying the offending level (the input covector was
/// not computed accurately enough).
inline std::vector<vec3> ell_sequence(const index_list& n, const stable_covector& ell,
                                      std::size_t K) {
    std::vector<vec3> seq;
    seq.reserve(K + 1);
    vec3 cur = ell.ell;
    seq.push_back(cur);
    for (std::size_t k = 1; k <= K; ++k) {
        int nk = n.at(k);
        vec3 next{cur[1], (nk + 1) * cur[0] + cur[2], nk * cur[0] + cur[2]};
        if (!(next[0] < 0.0 && next[1] < 0.0 && next[2] > 0.0))
            throw sign_violation_error(
                "ell iterate leaves the (-,-,+) cone at level " + std::to_string(k) +
                    "; recompute the covector with a tighter tolerance",
                k);
        seq.push_back(next);
        cur = next;
    }
    return seq;
}

} // namespace infimax
