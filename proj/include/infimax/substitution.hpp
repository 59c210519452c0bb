#pragma once

// The substitution family and its compositions:
//
//     1 -> 2,   2 -> 3 1^(n+1),   3 -> 3 1^n        (n >= 1)
//
// plus generation of the distinguished sequences: the right-infinite alpha
// (prefix-stable under deeper expansion) and the left-infinite beta and
// beta-hat (suffix-stable across even levels). Exact word-length accounting
// uses arbitrary-precision integers; materialized words are capped.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "infimax/index_list.hpp"
#include "infimax/words.hpp"

namespace infimax {

/// Default cap on materialized word length (symbols).
inline constexpr std::size_t default_word_cap = std::size_t{1} << 27;

/// Image of a single symbol under the level-n substitution.
inline word substitution_image(int n, symbol a) {
    if (n < 1) throw std::invalid_argument("substitution index must be >= 1");
    word w;
    switch (a) {
    case 1:
        w.push_back(2);
        break;
    case 2:
        w.push_back(3);
        for (int i = 0; i < n + 1; ++i) w.push_back(1);
        break;
    case 3:
        w.push_back(3);
        for (int i = 0; i < n; ++i) w.push_back(1);
        break;
    default:
        throw std::invalid_argument("symbol must be 1, 2 or 3");
    }
    return w;
}

inline word apply_substitution(int n, const word& w) {
    word out;
    for (symbol a : w) out.append(substitution_image(n, a));
    return out;
}

/// Pointed action: the point maps to the image of its position.
inline pointed_word apply_substitution(int n, const pointed_word& pw) {
    word out;
    std::size_t new_point = 0;
    for (std::size_t i = 0; i < pw.symbols.size(); ++i) {
        if (i == pw.point) new_point = out.size();
        out.append(substitution_image(n, pw.symbols[i]));
    }
    if (pw.point == pw.symbols.size()) new_point = out.size();
    return pointed_word(std::move(out), new_point);
}

/// Composition applied innermost-last: nlist = (n_1, ..., n_k) yields
/// Lambda_{n_1}(Lambda_{n_2}(...Lambda_{n_k}(w)...)).
inline word compose_apply(const std::vector<int>& nlist, const word& w,
                          std::size_t max_len = default_word_cap) {
    word cur = w;
    for (auto it = nlist.rbegin(); it != nlist.rend(); ++it) {
        cur = apply_substitution(*it, cur);
        if (cur.size() > max_len) throw std::length_error("composed word exceeds length cap");
    }
    return cur;
}

inline pointed_word compose_apply(const std::vector<int>& nlist, const pointed_word& pw,
                                  std::size_t max_len = default_word_cap) {
    pointed_word cur = pw;
    for (auto it = nlist.rbegin(); it != nlist.rend(); ++it) {
        cur = apply_substitution(*it, cur);
        if (cur.symbols.size() > max_len) throw std::length_error("composed word exceeds length cap");
    }
    return cur;
}

/// Exact lengths |Lambda^{(k)}(a)| for a = 1,2,3, as a vector indexed by a-1.
/// Computed by the row-vector recurrence len_k = len_{k-1} * A_{n_k}.
inline std::array<mpz_class, 3> exact_lengths(const index_list& n, std::size_t k) {
    std::array<mpz_class, 3> len{1, 1, 1};
    for (std::size_t j = 1; j <= k; ++j) {
        int nj = n.at(j);
        // columns of A_n: P(Lambda_n(1)) = e_2, P(Lambda_n(2)) = (n+1, 0, 1),
        // P(Lambda_n(3)) = (n, 0, 1)
        mpz_class l1 = len[1];
        mpz_class l2 = (nj + 1) * len[0] + len[2];
        mpz_class l3 = nj * len[0] + len[2];
        len = {l1, l2, l3};
    }
    return len;
}

/// Smallest k (restricted to even k when `even_only`) with
/// |Lambda^{(k)}(a)| >= target. Throws depth_exhausted_error if a truncated
/// list runs out first.
inline std::size_t depth_for_length(const index_list& n, symbol a, std::size_t target,
                                    bool even_only = false) {
    std::array<mpz_class, 3> len{1, 1, 1};
    mpz_class goal = static_cast<unsigned long>(target);
    std::size_t k = 0;
    while (!((!even_only || k % 2 == 0) && len[a - 1] >= goal)) {
        ++k;
        int nk = n.at(k); // throws when a truncated list is exhausted
        mpz_class l1 = len[1];
        mpz_class l2 = (nk + 1) * len[0] + len[2];
        mpz_class l3 = nk * len[0] + len[2];
        len = {l1, l2, l3};
    }
    return k;
}

/// First `min_len` symbols of alpha = lim Lambda^{(k)}(3). Prefix stability
/// makes the result independent of expanding any deeper.
inline word alpha_prefix(const index_list& n, std::size_t min_len,
                         std::size_t max_len = default_word_cap) {
    if (min_len < 1) throw std::invalid_argument("min_len must be >= 1");
    if (min_len > max_len) throw std::length_error("requested prefix exceeds length cap");
    std::size_t k = depth_for_length(n, 3, min_len);
    std::vector<int> ns;
    ns.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) ns.push_back(n.at(j));
    word w = compose_apply(ns, word{3}, max_len);
    return w.prefix(min_len);
}

/// Last `min_len` symbols of the left-infinite beta (hat = false) or
/// beta-hat (hat = true). Suffixes stabilize across even expansion levels.
inline word beta_suffix(const index_list& n, std::size_t min_len, bool hat,
                        std::size_t max_len = default_word_cap) {
    if (min_len < 1) throw std::invalid_argument("min_len must be >= 1");
    if (min_len > max_len) throw std::length_error("requested suffix exceeds length cap");
    symbol a = hat ? symbol{2} : symbol{1};
    std::size_t k = depth_for_length(n, a, min_len, /*even_only=*/true);
    std::vector<int> ns;
    ns.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) ns.push_back(n.at(j));
    word w = compose_apply(ns, word(std::vector<symbol>{a}), max_len);
    return w.suffix(min_len);
}

/// Memoizing expander for capped prefixes/suffixes of Lambda^{(j)}(a).
/// Used where only the symbols nearest a boundary matter and full
/// materialization would blow up exponentially.
class expander {
public:
    expander(const index_list& n, std::size_t cap) : n_(&n), cap_(cap) {}

    /// First min(cap, |Lambda^{(j)}(a)|) symbols of Lambda^{(j)}(a).
    const std::vector<symbol>& prefix(std::size_t j, symbol a) {
        auto key = std::make_pair(j, a);
        auto it = prefix_memo_.find(key);
        if (it != prefix_memo_.end()) return it->second;
        std::vector<symbol> out;
        if (j == 0) {
            out.push_back(a);
        } else {
            word img = substitution_image(n_->at(j), a);
            for (symbol b : img) {
                const auto& part = prefix(j - 1, b);
                for (symbol s : part) {
                    out.push_back(s);
                    if (out.size() >= cap_) break;
                }
                if (out.size() >= cap_) break;
            }
        }
        return prefix_memo_.emplace(key, std::move(out)).first->second;
    }

    /// Last min(cap, |Lambda^{(j)}(a)|) symbols of Lambda^{(j)}(a).
    const std::vector<symbol>& suffix(std::size_t j, symbol a) {
        auto key = std::make_pair(j, a);
        auto it = suffix_memo_.find(key);
        if (it != suffix_memo_.end()) return it->second;
        std::vector<symbol> rev; // reversed while building
        if (j == 0) {
            rev.push_back(a);
        } else {
            word img = substitution_image(n_->at(j), a);
            for (auto bi = img.symbols().rbegin(); bi != img.symbols().rend(); ++bi) {
                const auto& part = suffix(j - 1, *bi);
                for (auto si = part.rbegin(); si != part.rend(); ++si) {
                    rev.push_back(*si);
                    if (rev.size() >= cap_) break;
                }
                if (rev.size() >= cap_) break;
            }
        }
        std::vector<symbol> out(rev.rbegin(), rev.rend());
        return suffix_memo_.emplace(key, std::move(out)).first->second;
    }

    /// min(cap, |Lambda^{(j)}(a)|); saturates at the cap.
    std::size_t capped_length(std::size_t j, symbol a) {
        return prefix(j, a).size();
    }

    std::size_t cap() const { return cap_; }

private:
    const index_list* n_;
    std::size_t cap_;
    std::map<std::pair<std::size_t, symbol>, std::vector<symbol>> prefix_memo_;
    std::map<std::pair<std::size_t, symbol>, std::vector<symbol>> suffix_memo_;
};

} // namespace infimax
