#pragma once

// Projection of paths onto the asymptotic stable line: the functionals
// Psi_L / Psi_R with certified tails, Rauzy-fractal sampling, the subpiece
// interval endpoints, and the sequence-level map Upsilon+ computed through
// path recovery.
//
// All evaluations run on the covector iterates ell^{(k)}; every prefix
// contribution is (ell3 + m ell1) at its level, every suffix contribution is
// m ell1, and the per-level ratio ell3^{(k)}/ell3^{(k-1)} < 1/2 turns tail
// bounds into geometric series.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "infimax/errors.hpp"
#include "infimax/index_list.hpp"
#include "infimax/ipsa.hpp"
#include "infimax/projection.hpp"
#include "infimax/recover.hpp"
#include "infimax/words.hpp"

namespace infimax {

/// phi(w) = ell . P(w); additive over concatenation.
inline double phi(const stable_covector& ell, const word& w) {
    auto counts = abelianize(w);
    return ell.ell[0] * static_cast<double>(counts[0]) +
           ell.ell[1] * static_cast<double>(counts[1]) +
           ell.ell[2] * static_cast<double>(counts[2]);
}

inline double phi(const stable_covector& ell, symbol a) { return ell.ell[a - 1]; }

/// One projected path value with its certified tail radius.
struct fractal_point {
    double value = 0.0;
    symbol a0 = 1;      // initial state = subpiece index
    double err = 0.0;   // tail-bound radius
    std::size_t depth = 0;
};

namespace detail {

/// Lazily extended covector iterates with the sign check of every level.
class ell_iterates {
public:
    ell_iterates(const index_list& n, const stable_covector& ell) : n_(&n) {
        seq_.push_back(ell.ell);
    }

    const vec3& at(std::size_t k) {
        while (seq_.size() <= k) {
            std::size_t level = seq_.size();
            int nk = n_->at(level);
            const vec3& c = seq_.back();
            vec3 next{c[1], (nk + 1) * c[0] + c[2], nk * c[0] + c[2]};
            if (!(next[0] < 0.0 && next[1] < 0.0 && next[2] > 0.0))
                throw sign_violation_error("ell iterate leaves the (-,-,+) cone at level " +
                                               std::to_string(level),
                                           level);
            seq_.push_back(next);
        }
        return seq_[k];
    }

    double l1(std::size_t k) { return at(k)[0]; }
    double l3(std::size_t k) { return at(k)[2]; }

private:
    const index_list* n_;
    std::vector<vec3> seq_;
};

inline double default_psi_tol(const stable_covector& ell) {
    return 1e-10 * (ell.ell[2] - ell.ell[1]);
}

} // namespace detail

/// Psi_L: phi(u_0) + sum_j phi(Lambda^{(j)}(u_j)). Named tails are summed in
/// closed form until below tol; a truncated path carries err = ell3^(depth),
/// which must not exceed tol (pass tol = infinity to accept any depth).
inline fractal_point psi_L(const index_list& n, const path& p, const stable_covector& ell,
                           double tol = 0.0) {
    if (tol <= 0.0) tol = detail::default_psi_tol(ell);
    detail::ell_iterates it(n, ell);

    double value = 0.0;
    for (std::size_t j = 0; j < p.depth(); ++j) {
        edge_label lab = label_of(n.at(j + 1), p.edges()[j]);
        if (!lab.u.empty()) {
            // u = 3 1^m
            double m = static_cast<double>(lab.u.size() - 1);
            value += it.l3(j) + m * it.l1(j);
        }
    }

    double err = 0.0;
    switch (p.tail()) {
    case tail_kind::alpha:
        break; // all tail prefixes are empty: exact
    case tail_kind::beta:
    case tail_kind::beta_hat: {
        // 1-edges at levels of fixed parity contribute ell3 at their level.
        bool ones_odd = (p.tail() == tail_kind::beta);
        std::size_t lev = p.depth() + 1;
        if ((lev % 2 == 1) != ones_odd) ++lev;
        for (;; lev += 2) {
            double term = it.l3(lev);
            value += term;
            if (term / 3.0 < tol) {
                err = term / 3.0; // remaining terms < term * (1/4 + 1/16 + ...)
                break;
            }
            if (lev > 60000) throw std::runtime_error("beta tail sum failed to converge");
        }
        break;
    }
    case tail_kind::truncate:
        err = it.l3(p.depth());
        if (err > tol)
            throw std::invalid_argument(
                "insufficient path depth for the requested tolerance (err " +
                std::to_string(err) + " > tol)");
        break;
    }

    fractal_point out;
    out.value = value;
    out.a0 = p.initial_state(n);
    out.err = err;
    out.depth = p.depth();
    return out;
}

/// Psi_R: phi(a_0 v_0) + sum_j phi(Lambda^{(j)}(v_j)). The alpha tail's
/// suffix sum telescopes to -ell3^(depth) exactly; beta tails contribute
/// nothing.
inline fractal_point psi_R(const index_list& n, const path& p, const stable_covector& ell,
                           double tol = 0.0) {
    if (tol <= 0.0) tol = detail::default_psi_tol(ell);
    detail::ell_iterates it(n, ell);

    double value = 0.0;
    for (std::size_t j = 0; j < p.depth(); ++j) {
        edge_label lab = label_of(n.at(j + 1), p.edges()[j]);
        if (j == 0) value += ell.ell[lab.a - 1];
        if (!lab.v.empty()) value += static_cast<double>(lab.v.size()) * it.l1(j);
    }

    double err = 0.0;
    switch (p.tail()) {
    case tail_kind::beta:
    case tail_kind::beta_hat:
        if (p.depth() == 0) value += ell.ell[p.initial_state(n) - 1];
        break; // all tail suffixes are empty: exact
    case tail_kind::alpha: {
        if (p.depth() == 0) value += ell.ell[2];
        value -= it.l3(p.depth()); // telescoped sum of n_j ell1^{(j-1)}
        break;
    }
    case tail_kind::truncate:
        err = it.l3(p.depth());
        if (err > tol)
            throw std::invalid_argument(
                "insufficient path depth for the requested tolerance (err " +
                std::to_string(err) + " > tol)");
        break;
    }

    fractal_point out;
    out.value = value;
    out.a0 = p.initial_state(n);
    out.err = err;
    out.depth = p.depth();
    return out;
}

/// The abutting subpiece hulls J_3 = [0,-l2], J_2 = [-l2,-l1],
/// J_1 = [-l1, l3-l2].
struct endpoint_data {
    std::array<double, 2> j3, j2, j1;
};

inline endpoint_data endpoints(const stable_covector& ell) {
    double l1 = ell.ell[0], l2 = ell.ell[1], l3 = ell.ell[2];
    endpoint_data e;
    e.j3 = {0.0, -l2};
    e.j2 = {-l2, -l1};
    e.j1 = {-l1, l3 - l2};
    if (!(0.0 < -l2 && -l2 < -l1 && -l1 < l3 - l2))
        throw std::runtime_error("endpoint ordering violated: covector error too large");
    return e;
}

/// Psi_L of every depth-`depth` path (truncated tails), tagged by initial
/// state. Approximates the Rauzy fractal within ell3^(depth).
inline std::vector<fractal_point> fractal_sample(const index_list& n, std::size_t depth,
                                                 const stable_covector& ell,
                                                 std::size_t max_points = 2'000'000) {
    std::vector<fractal_point> out;
    const double inf = std::numeric_limits<double>::infinity();
    for (symbol a = 1; a <= 3; ++a) {
        auto paths = enumerate_finite_paths(n, depth, a, max_points);
        if (out.size() + paths.size() > max_points)
            throw std::length_error("fractal sample exceeds the point cap");
        for (const path& p : paths) out.push_back(psi_L(n, p, ell, inf));
    }
    return out;
}

/// Upsilon+ of a one-sided word: recover the depth-k paths consistent with
/// the window and evaluate Psi_L. Several paths may survive a short window;
/// they must agree within 2 tol or the window is rejected as too short.
inline fractal_point upsilon_plus(const index_list& n, const word& s, std::size_t k,
                                  const stable_covector& ell, double tol = 0.0) {
    if (tol <= 0.0) tol = detail::default_psi_tol(ell);
    detail::ell_iterates it(n, ell);
    if (it.l3(k) > tol)
        throw std::invalid_argument("depth k is too shallow for the requested tolerance");

    pointed_word window(s, 0);
    auto paths = consistent_paths(n, window, k);
    if (paths.empty())
        throw no_match_error("window is not consistent with any depth-" + std::to_string(k) +
                             " path");
    const double inf = std::numeric_limits<double>::infinity();
    fractal_point base = psi_L(n, paths.front(), ell, inf);
    double spread = 0.0;
    for (std::size_t i = 1; i < paths.size(); ++i) {
        fractal_point q = psi_L(n, paths[i], ell, inf);
        spread = std::max(spread, std::abs(q.value - base.value));
    }
    if (spread > 2.0 * tol)
        throw ambiguous_window_error("window pins the projected value only to " +
                                     std::to_string(spread) + "; a longer window is needed");
    base.err = it.l3(k) + spread;
    base.depth = k;
    return base;
}

} // namespace infimax
