#pragma once

// The infinite prefix-suffix automaton (IPSA). Levels are indexed from 1;
// the edges joining level k-1 to level k decompose the substitution images
// at index n_k: an edge into state b at position j records
// Lambda_{n_k}(b) = u a v with a at position j.
//
// An edge is canonically encoded as (target, position); its level is its
// 1-based slot in the containing path and the label (u, a, v) is derived on
// demand. A path is a consistent list of edges (the target of edge i equals
// the label letter of edge i+1) plus a tail kind describing the levels
// beyond the materialized ones.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "infimax/errors.hpp"
#include "infimax/index_list.hpp"
#include "infimax/substitution.hpp"
#include "infimax/words.hpp"

namespace infimax {

struct edge {
    symbol target = 1;
    std::uint32_t position = 0;

    bool operator==(const edge&) const = default;
};

/// Derived label (u, a, v) of an edge at index value n.
struct edge_label {
    word u;
    symbol a;
    word v;
};

inline edge_label label_of(int n, const edge& e) {
    word img = substitution_image(n, e.target);
    if (e.position >= img.size()) throw std::invalid_argument("edge position out of range");
    edge_label lab;
    lab.u = img.prefix(e.position);
    lab.a = img[e.position];
    lab.v = img.subword(e.position + 1, img.size() - e.position - 1);
    return lab;
}

inline symbol letter_of(int n, const edge& e) {
    word img = substitution_image(n, e.target);
    if (e.position >= img.size()) throw std::invalid_argument("edge position out of range");
    return img[e.position];
}

/// All edges of a level with index value n_k, ordered by (target, position).
/// There are exactly 2 n_k + 4 of them.
inline std::vector<edge> edges_for_level(int nk) {
    if (nk < 1) throw std::invalid_argument("substitution index must be >= 1");
    std::vector<edge> out;
    for (symbol b = 1; b <= 3; ++b) {
        word img = substitution_image(nk, b);
        for (std::uint32_t j = 0; j < img.size(); ++j) out.push_back(edge{b, j});
    }
    return out;
}

enum class tail_kind { truncate, alpha, beta, beta_hat };
enum class tail_class { s1, s1_hat, s2, two_sided };

/// A finite path prefix with a tail policy. Edge i sits at level i+1.
class path {
public:
    path() = default;

    path(const index_list& n, std::vector<edge> edges, tail_kind tail)
        : edges_(std::move(edges)), tail_(tail) {
        validate(n);
    }

    const std::vector<edge>& edges() const { return edges_; }
    tail_kind tail() const { return tail_; }
    std::size_t depth() const { return edges_.size(); }

    /// Initial state a_0 (the label letter of the first edge).
    symbol initial_state(const index_list& n) const {
        if (edges_.empty()) {
            switch (tail_) {
            case tail_kind::alpha: return 3;
            case tail_kind::beta: return 1;
            case tail_kind::beta_hat: return 2;
            default: throw std::invalid_argument("empty truncated path has no initial state");
            }
        }
        return letter_of(n.at(1), edges_[0]);
    }

    /// Edge at 1-based level, materializing tail edges beyond the stored
    /// prefix. Throws for a truncated tail.
    edge edge_at(const index_list& n, std::size_t level) const {
        if (level == 0) throw std::invalid_argument("levels are 1-based");
        if (level <= edges_.size()) return edges_[level - 1];
        switch (tail_) {
        case tail_kind::truncate:
            throw std::invalid_argument("truncated path has no edge at level " +
                                        std::to_string(level));
        case tail_kind::alpha:
            return edge{3, 0};
        case tail_kind::beta:
        case tail_kind::beta_hat: {
            // Alternating (31^{n_j},1,eps) / (eps,2,eps); the 1-edges sit at
            // odd levels for beta and even levels for beta-hat.
            bool odd_ones = (tail_ == tail_kind::beta);
            bool is_one_edge = (level % 2 == 1) == odd_ones;
            if (is_one_edge) {
                int nj = n.at(level);
                return edge{2, static_cast<std::uint32_t>(nj + 1)};
            }
            return edge{1, 0};
        }
        }
        throw std::logic_error("unreachable");
    }

    bool operator==(const path&) const = default;

private:
    void validate(const index_list& n) const {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            std::size_t level = i + 1;
            word img = substitution_image(n.at(level), edges_[i].target);
            if (edges_[i].position >= img.size())
                throw std::invalid_argument("edge position out of range at level " +
                                            std::to_string(level));
            if (i + 1 < edges_.size()) {
                symbol next_letter = letter_of(n.at(level + 1), edges_[i + 1]);
                if (edges_[i].target != next_letter)
                    throw std::invalid_argument(
                        "inconsistent path: target of level " + std::to_string(level) +
                        " does not match the label letter of level " + std::to_string(level + 1));
            }
        }
        if (tail_ == tail_kind::truncate) return;

        symbol last_target = edges_.empty() ? symbol{0} : edges_.back().target;
        std::size_t m = edges_.size();
        if (tail_ == tail_kind::alpha) {
            if (!edges_.empty() && last_target != 3)
                throw std::invalid_argument("alpha tail requires last target 3");
            return;
        }
        // Beta tails: the phase is forced by the last target (1 -> a 1-edge
        // comes next, 2 -> (eps,2,eps) comes next); the declared kind must
        // match the resulting parity of the 1-edge levels.
        std::size_t first_one_level;
        if (edges_.empty()) {
            first_one_level = (tail_ == tail_kind::beta) ? 1 : 2;
        } else if (last_target == 1) {
            first_one_level = m + 1;
        } else if (last_target == 2) {
            first_one_level = m + 2;
        } else {
            throw std::invalid_argument("beta tails cannot follow a target-3 edge");
        }
        bool ones_odd = (first_one_level % 2 == 1);
        bool want_odd = (tail_ == tail_kind::beta);
        if (ones_odd != want_odd)
            throw std::invalid_argument(
                "declared beta tail kind contradicts the level parity of its 1-edges");
    }

    std::vector<edge> edges_;
    tail_kind tail_ = tail_kind::truncate;
};

/// Tail classification: S2 for alpha tails, S1 / S1-hat for the beta tails
/// (their parity is enforced at construction), and two-sided otherwise.
/// Truncated paths cannot be classified.
inline tail_class classify_tail(const path& p) {
    switch (p.tail()) {
    case tail_kind::alpha: return tail_class::s2;
    case tail_kind::beta: return tail_class::s1;
    case tail_kind::beta_hat: return tail_class::s1_hat;
    case tail_kind::truncate:
        throw std::invalid_argument("tail classification undefined for truncated paths");
    }
    throw std::logic_error("unreachable");
}

/// All length-k paths whose last edge has target a, ordered lexicographically
/// by position sequence. The count equals |Lambda^{(k)}(a)|.
inline std::vector<path> enumerate_finite_paths(const index_list& n, std::size_t k, symbol a,
                                                std::size_t max_paths = 5'000'000) {
    if (k < 1) throw std::invalid_argument("path length must be >= 1");
    // cur[b-1]: edge sequences of depth `level` ending at target b
    std::array<std::vector<std::vector<edge>>, 3> cur;
    for (std::size_t level = 1; level <= k; ++level) {
        std::array<std::vector<std::vector<edge>>, 3> next;
        auto level_edges = edges_for_level(n.at(level));
        std::size_t total = 0;
        for (const edge& e : level_edges) {
            symbol letter = letter_of(n.at(level), e);
            if (level == 1) {
                next[e.target - 1].push_back({e});
            } else {
                for (const auto& pre : cur[letter - 1]) {
                    auto ext = pre;
                    ext.push_back(e);
                    next[e.target - 1].push_back(std::move(ext));
                }
            }
        }
        for (const auto& v : next) total += v.size();
        if (total > max_paths) throw std::length_error("path enumeration exceeds cap");
        cur = std::move(next);
    }
    auto& result = cur[a - 1];
    std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].position != y[i].position) return x[i].position < y[i].position;
        return false;
    });
    std::vector<path> out;
    out.reserve(result.size());
    for (auto& edges : result) out.emplace_back(n, std::move(edges), tail_kind::truncate);
    return out;
}

/// Dumont-Thomas word map: the pointed word
///   Lambda^{(k)}(u_k) ... Lambda^{(1)}(u_1) u_0 . a_0 v_0 Lambda^{(1)}(v_1) ... Lambda^{(k)}(v_k)
/// for a path prefix of k+1 edges. Equals a shift of Lambda^{(k+1)}(eps.a)
/// with the point at the shift offset.
inline pointed_word word_map(const index_list& n, const path& p,
                             std::size_t max_len = default_word_cap) {
    if (p.depth() == 0) throw std::invalid_argument("word map needs at least one edge");
    word left, right;
    std::vector<int> ns; // n_1..n_j for composition
    for (std::size_t j = 0; j < p.depth(); ++j) {
        edge_label lab = label_of(n.at(j + 1), p.edges()[j]);
        if (j == 0) {
            left = lab.u;
            right.push_back(lab.a);
            right.append(lab.v);
        } else {
            left = compose_apply(ns, lab.u, max_len) + left;
            right.append(compose_apply(ns, lab.v, max_len));
        }
        if (left.size() + right.size() > max_len)
            throw std::length_error("word map image exceeds length cap");
        ns.push_back(n.at(j + 1));
    }
    std::size_t point = left.size();
    left.append(right);
    return pointed_word(std::move(left), point);
}

enum class special_path_kind { min, max, min1, min2, max2, max3 };

/// The six extreme paths of the Rauzy fractal, materialized to `depth`
/// edges. Min carries the alpha tail and Min1/Min2 the beta tails; the Max
/// paths are truncated beyond the materialized prefix (only finitely many
/// levels feed any evaluation within tolerance).
inline path special_path(special_path_kind kind, const index_list& n, std::size_t depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    std::vector<edge> edges;
    edges.reserve(depth);
    auto one_edge_full = [&](std::size_t level) { // (31^{n_j},1,eps), target 2
        return edge{2, static_cast<std::uint32_t>(n.at(level) + 1)};
    };
    auto two_edge = [] { return edge{1, 0}; }; // (eps,2,eps)
    auto grow_edge = [] { return edge{2, 1}; }; // (3,1,1^{n_j}), target 2

    for (std::size_t level = 1; level <= depth; ++level) {
        bool odd = (level % 2 == 1);
        switch (kind) {
        case special_path_kind::min:
            edges.push_back(edge{3, 0}); // (eps,3,1^{n_j})
            break;
        case special_path_kind::min1:
            edges.push_back(odd ? one_edge_full(level) : two_edge());
            break;
        case special_path_kind::min2:
            edges.push_back(odd ? two_edge() : one_edge_full(level));
            break;
        case special_path_kind::max:
            edges.push_back(odd ? grow_edge() : two_edge());
            break;
        case special_path_kind::max2:
            edges.push_back(odd ? two_edge() : grow_edge());
            break;
        case special_path_kind::max3:
            if (level == 1)
                edges.push_back(edge{2, 0}); // (eps,3,1^{n_1+1})
            else
                edges.push_back(odd ? grow_edge() : two_edge());
            break;
        }
    }
    tail_kind tail = tail_kind::truncate;
    if (kind == special_path_kind::min) tail = tail_kind::alpha;
    if (kind == special_path_kind::min1) tail = tail_kind::beta;
    if (kind == special_path_kind::min2) tail = tail_kind::beta_hat;
    return path(n, std::move(edges), tail);
}

/// The exact window of W(Gamma) within `radius` symbols of the decimal
/// point. Sides that the path's tail leaves one-sided come back shorter; a
/// truncated path whose materialized extent cannot certify a side throws.
inline pointed_word sequence_window(const index_list& n, const path& p, std::size_t radius) {
    if (radius < 1) throw std::invalid_argument("radius must be >= 1");
    expander ex(n, radius);

    std::vector<symbol> left_rev; // nearest-point first
    std::vector<symbol> right;
    bool left_done = false, right_done = false;

    std::size_t level = 1;
    std::size_t max_level = p.depth() + 4 * radius + 8;
    for (; level <= max_level && !(left_rev.size() >= radius && right.size() >= radius);
         ++level) {
        bool materialized = level <= p.depth();
        if (!materialized && p.tail() == tail_kind::truncate) break;
        if (!materialized) {
            // One-sided tails stop feeding one of the two sides for good.
            if (p.tail() == tail_kind::alpha) left_done = true;
            if (p.tail() == tail_kind::beta || p.tail() == tail_kind::beta_hat) right_done = true;
        }
        edge e = p.edge_at(n, level);
        edge_label lab = label_of(n.at(level), e);
        std::size_t j = level - 1; // expansion depth for this edge's label
        if (level == 1) {
            right.push_back(lab.a);
            for (symbol s : lab.v) {
                if (right.size() >= radius) break;
                right.push_back(s);
            }
            for (auto it = lab.u.symbols().rbegin(); it != lab.u.symbols().rend(); ++it) {
                if (left_rev.size() >= radius) break;
                left_rev.push_back(*it);
            }
        } else {
            if (right.size() < radius)
                for (symbol b : lab.v) {
                    const auto& part = ex.prefix(j, b);
                    for (symbol s : part) {
                        if (right.size() >= radius) break;
                        right.push_back(s);
                    }
                    if (right.size() >= radius) break;
                }
            if (left_rev.size() < radius)
                for (auto bi = lab.u.symbols().rbegin(); bi != lab.u.symbols().rend(); ++bi) {
                    const auto& part = ex.suffix(j, *bi);
                    for (auto si = part.rbegin(); si != part.rend(); ++si) {
                        if (left_rev.size() >= radius) break;
                        left_rev.push_back(*si);
                    }
                    if (left_rev.size() >= radius) break;
                }
        }
    }

    if (left_rev.size() < radius && !left_done && p.tail() == tail_kind::truncate)
        throw std::invalid_argument("path too shallow to certify the left window at this radius");
    if (right.size() < radius && !right_done && p.tail() == tail_kind::truncate)
        throw std::invalid_argument("path too shallow to certify the right window at this radius");

    word w;
    for (auto it = left_rev.rbegin(); it != left_rev.rend(); ++it) w.push_back(*it);
    std::size_t point = w.size();
    for (symbol s : right) w.push_back(s);
    return pointed_word(std::move(w), point);
}

} // namespace infimax
