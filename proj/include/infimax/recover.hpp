#pragma once

// Path recovery from symbol windows: the finite, desk-scale form of the
// inverse of the word map.
//
// Candidates of the requested depth are enumerated level by level against
// the window, pruning any branch whose emitted symbols disagree with it.
// Matched symbol extents are tracked as lengths only: by construction a
// surviving branch agrees with the window everywhere it overlaps, so the
// symbols themselves never need to be stored.
//
// A short window can be containment-consistent with several paths (a
// shorter word fitting inside a longer one), so each candidate is then
// validated: it must admit an infinite continuation whose two-sided
// sequence agrees with the whole window. Continuations either consume the
// window by ordinary growth, or stall on one side by entering a named tail,
// in which case the stalled side must continue with the appended sequence
// of the corresponding special point (alpha on the right, beta or beta-hat
// on the left).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infimax/errors.hpp"
#include "infimax/index_list.hpp"
#include "infimax/ipsa.hpp"
#include "infimax/substitution.hpp"
#include "infimax/words.hpp"

namespace infimax {

class window_matcher {
public:
    struct node {
        std::vector<edge> edges;
        std::size_t left_len = 0;  // window symbols matched left of the point
        std::size_t right_len = 0; // window symbols matched right of the point
        bool left_over = false;    // true extent exceeds the window's left side
        bool right_over = false;
    };

    window_matcher(const index_list& n, const pointed_word& window, bool require_containment)
        : n_(&n), win_(&window), contain_(require_containment), left_size_(window.point),
          right_size_(window.symbols.size() - window.point),
          ex_(n, std::max(left_size_, right_size_) + 2) {}

    /// All depth-k candidates consistent with the window, each validated to
    /// admit a consistent infinite continuation.
    std::vector<node> matches(std::size_t k) {
        std::vector<node> frontier{node{}};
        for (std::size_t level = 1; level <= k; ++level) {
            std::vector<node> next;
            auto level_edges = edges_for_level(n_->at(level));
            for (const node& nd : frontier) {
                for (const edge& e : level_edges) {
                    if (level > 1 && nd.edges.back().target != letter_of(n_->at(level), e))
                        continue;
                    node nd2 = nd;
                    if (!push_edge(nd2, e, level)) continue;
                    if (contain_ && (nd2.left_over || nd2.right_over)) continue;
                    next.push_back(std::move(nd2));
                }
            }
            frontier = std::move(next);
            if (frontier.empty()) return {};
            if (frontier.size() > frontier_cap_)
                throw std::runtime_error("window matcher frontier exceeded its cap");
        }
        std::vector<node> valid;
        for (node& cand : frontier)
            if (validate(cand, k + 1)) valid.push_back(std::move(cand));
        return valid;
    }

private:
    symbol win_left(std::size_t i) const { return win_->symbols[win_->point - 1 - i]; }
    symbol win_right(std::size_t i) const { return win_->symbols[win_->point + i]; }

    /// Append the expansion of `w` at depth j to the right extent, comparing
    /// against the window. Returns false on a symbol mismatch.
    bool emit_right(node& nd, std::size_t j, const word& w) {
        for (symbol b : w) {
            if (nd.right_len >= right_size_) {
                nd.right_over = true;
                return true;
            }
            const auto& part = ex_.prefix(j, b);
            std::size_t need = right_size_ - nd.right_len;
            std::size_t cmp = std::min(part.size(), need);
            for (std::size_t q = 0; q < cmp; ++q)
                if (part[q] != win_right(nd.right_len + q)) return false;
            if (part.size() >= need) {
                nd.right_len = right_size_;
                if (part.size() > need) nd.right_over = true;
            } else {
                nd.right_len += part.size(); // exact: below the expander cap
            }
        }
        return true;
    }

    /// Mirror of emit_right for the left extent (outward from the point).
    bool emit_left(node& nd, std::size_t j, const word& w) {
        for (auto bi = w.symbols().rbegin(); bi != w.symbols().rend(); ++bi) {
            if (nd.left_len >= left_size_) {
                nd.left_over = true;
                return true;
            }
            const auto& part = ex_.suffix(j, *bi);
            std::size_t need = left_size_ - nd.left_len;
            std::size_t cmp = std::min(part.size(), need);
            for (std::size_t q = 0; q < cmp; ++q)
                if (part[part.size() - 1 - q] != win_left(nd.left_len + q)) return false;
            if (part.size() >= need) {
                nd.left_len = left_size_;
                if (part.size() > need) nd.left_over = true;
            } else {
                nd.left_len += part.size();
            }
        }
        return true;
    }

    bool push_edge(node& nd, const edge& e, std::size_t level) {
        edge_label lab = label_of(n_->at(level), e);
        std::size_t j = level - 1;
        word first_right;
        if (level == 1) {
            first_right.push_back(lab.a);
            first_right.append(lab.v);
        }
        const word& right_block = (level == 1) ? first_right : lab.v;
        if (!emit_right(nd, level == 1 ? 0 : j, right_block)) return false;
        if (!emit_left(nd, level == 1 ? 0 : j, lab.u)) return false;
        nd.edges.push_back(e);
        return true;
    }

    const std::vector<symbol>& alpha_ref() {
        if (!alpha_) alpha_ = alpha_prefix(*n_, std::max<std::size_t>(right_size_, 1)).symbols();
        return *alpha_;
    }
    const std::vector<symbol>& beta_ref(bool hat) {
        auto& cached = hat ? beta_hat_ : beta_;
        if (!cached) cached = beta_suffix(*n_, std::max<std::size_t>(left_size_, 1), hat).symbols();
        return *cached;
    }

    /// Remaining right window from offset r must be a prefix of alpha.
    bool alpha_continues_right(std::size_t r) {
        if (r >= right_size_) return true;
        const auto& a = alpha_ref();
        for (std::size_t i = r; i < right_size_; ++i)
            if (win_right(i) != a[i - r]) return false;
        return true;
    }

    /// Remaining left window from offset l must continue with the end of
    /// beta (hat = false) or beta-hat (hat = true), read outward.
    bool beta_continues_left(std::size_t l, bool hat) {
        if (l >= left_size_) return true;
        const auto& b = beta_ref(hat);
        for (std::size_t i = l; i < left_size_; ++i)
            if (win_left(i) != b[b.size() - 1 - (i - l)]) return false;
        return true;
    }

    /// Walk the alternating beta tail from `level`, growing the left extent,
    /// until the window's left side is consumed or contradicted.
    bool beta_tail_consumes_left(node nd, std::size_t level) {
        symbol t = nd.edges.back().target;
        bool next_is_one = (t == 1);
        std::size_t guard = 2 * left_size_ + level + 8;
        for (std::size_t lev = level; lev <= guard; ++lev) {
            if (nd.left_len >= left_size_) return true;
            if (next_is_one) {
                word u;
                u.push_back(3);
                for (int i = 0; i < n_->at(lev); ++i) u.push_back(1);
                if (!emit_left(nd, lev - 1, u)) return false;
            }
            next_is_one = !next_is_one;
        }
        return nd.left_len >= left_size_;
    }

    /// Walk the alpha tail from `level`, growing the right extent.
    bool alpha_tail_consumes_right(node nd, std::size_t level) {
        std::size_t guard = 2 * right_size_ + level + 8;
        for (std::size_t lev = level; lev <= guard; ++lev) {
            if (nd.right_len >= right_size_) return true;
            word v;
            for (int i = 0; i < n_->at(lev); ++i) v.push_back(1);
            if (!emit_right(nd, lev - 1, v)) return false;
        }
        return nd.right_len >= right_size_;
    }

    /// Can this node be completed to an infinite path matching the window?
    bool accepts(const node& nd, std::size_t next_level) {
        if (nd.left_len >= left_size_ && nd.right_len >= right_size_) return true;
        symbol t = nd.edges.empty() ? symbol{0} : nd.edges.back().target;
        if (t == 1 || t == 2) {
            // beta-style continuation: right side stalls and the sequence
            // continues with alpha; the tail's own prefixes feed the left.
            if (alpha_continues_right(nd.right_len) && beta_tail_consumes_left(nd, next_level))
                return true;
        }
        if (t == 3) {
            // alpha-style continuation: left side stalls and the sequence
            // continues leftward with beta or beta-hat.
            if ((beta_continues_left(nd.left_len, false) ||
                 beta_continues_left(nd.left_len, true)) &&
                alpha_tail_consumes_right(nd, next_level))
                return true;
        }
        return false;
    }

    bool validate(const node& cand, std::size_t from_level) {
        struct probe {
            std::vector<edge> tail_edges; // beyond the candidate's prefix
            node state;
        };
        std::vector<node> frontier{cand};
        std::size_t cap_levels = 2 * (left_size_ + right_size_) + from_level + 64;
        for (std::size_t level = from_level; level <= cap_levels; ++level) {
            for (const node& nd : frontier)
                if (accepts(nd, level)) return true;
            std::vector<node> next;
            auto level_edges = edges_for_level(n_->at(level));
            for (const node& nd : frontier) {
                for (const edge& e : level_edges) {
                    if (nd.edges.back().target != letter_of(n_->at(level), e)) continue;
                    node nd2 = nd;
                    if (!push_edge(nd2, e, level)) continue;
                    next.push_back(std::move(nd2));
                }
            }
            // Dedupe: future matching depends only on the last target and the
            // saturated extents.
            std::sort(next.begin(), next.end(), [](const node& a, const node& b) {
                auto ka = std::tuple(a.edges.back().target, a.left_len, a.right_len);
                auto kb = std::tuple(b.edges.back().target, b.left_len, b.right_len);
                return ka < kb;
            });
            next.erase(std::unique(next.begin(), next.end(),
                                   [](const node& a, const node& b) {
                                       return a.edges.back().target == b.edges.back().target &&
                                              a.left_len == b.left_len &&
                                              a.right_len == b.right_len;
                                   }),
                       next.end());
            frontier = std::move(next);
            if (frontier.empty()) return false;
            if (frontier.size() > frontier_cap_)
                throw std::runtime_error("window matcher frontier exceeded its cap");
        }
        return false;
    }

    const index_list* n_;
    const pointed_word* win_;
    bool contain_;
    std::size_t left_size_, right_size_;
    expander ex_;
    std::optional<std::vector<symbol>> alpha_, beta_, beta_hat_;
    static constexpr std::size_t frontier_cap_ = 200000;
};

/// The unique depth-k path whose word map matches the window around its
/// decimal point. Throws no_match_error when nothing matches and
/// ambiguous_window_error when the window is too short to separate several
/// paths.
inline path recover_path(const index_list& n, const pointed_word& window, std::size_t k) {
    if (k < 1) throw std::invalid_argument("depth must be >= 1");
    window_matcher m(n, window, /*require_containment=*/true);
    auto found = m.matches(k);
    if (found.empty())
        throw no_match_error("no depth-" + std::to_string(k) +
                             " path matches the window (not a factor of the subshift, or the "
                             "window is too short)");
    if (found.size() > 1)
        throw ambiguous_window_error("window matches " + std::to_string(found.size()) +
                                     " distinct depth-" + std::to_string(k) +
                                     " paths; a longer window is needed");
    return path(n, std::move(found.front().edges), tail_kind::truncate);
}

/// All validated depth-k paths whose two-sided sequences agree with the
/// window on overlap (the window need not contain the full word map image).
inline std::vector<path> consistent_paths(const index_list& n, const pointed_word& window,
                                          std::size_t k) {
    if (k < 1) throw std::invalid_argument("depth must be >= 1");
    window_matcher m(n, window, /*require_containment=*/false);
    auto found = m.matches(k);
    std::vector<path> out;
    out.reserve(found.size());
    for (auto& nd : found) out.emplace_back(n, std::move(nd.edges), tail_kind::truncate);
    return out;
}

} // namespace infimax
