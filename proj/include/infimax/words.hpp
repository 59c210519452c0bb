#pragma once

// Symbols, finite words and pointed words over the three-letter alphabet
// {1,2,3}, plus the small combinatorial queries used throughout: letter
// counts, adjacent-pair admissibility and factor complexity.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace infimax {

/// Alphabet symbol, value in {1,2,3}.
using symbol = std::uint8_t;

inline bool is_symbol(int v) { return v >= 1 && v <= 3; }

inline symbol make_symbol(int v) {
    if (!is_symbol(v)) throw std::invalid_argument("symbol must be 1, 2 or 3");
    return static_cast<symbol>(v);
}

/// A finite word over {1,2,3}; may be empty.
class word {
public:
    word() = default;
    word(std::initializer_list<int> syms) {
        syms_.reserve(syms.size());
        for (int v : syms) syms_.push_back(make_symbol(v));
    }
    explicit word(std::vector<symbol> syms) : syms_(std::move(syms)) {}

    static word parse(std::string_view text) {
        word w;
        w.syms_.reserve(text.size());
        for (char c : text) {
            if (c < '1' || c > '3') throw std::invalid_argument("word symbols must be 1, 2 or 3");
            w.syms_.push_back(static_cast<symbol>(c - '0'));
        }
        return w;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(syms_.size());
        for (symbol a : syms_) s.push_back(static_cast<char>('0' + a));
        return s;
    }

    std::size_t size() const { return syms_.size(); }
    bool empty() const { return syms_.empty(); }
    symbol operator[](std::size_t i) const { return syms_[i]; }
    const std::vector<symbol>& symbols() const { return syms_; }

    void push_back(symbol a) { syms_.push_back(a); }
    void append(const word& other) {
        syms_.insert(syms_.end(), other.syms_.begin(), other.syms_.end());
    }

    word prefix(std::size_t n) const {
        n = std::min(n, syms_.size());
        return word(std::vector<symbol>(syms_.begin(), syms_.begin() + static_cast<std::ptrdiff_t>(n)));
    }
    word suffix(std::size_t n) const {
        n = std::min(n, syms_.size());
        return word(std::vector<symbol>(syms_.end() - static_cast<std::ptrdiff_t>(n), syms_.end()));
    }
    word subword(std::size_t pos, std::size_t n) const {
        if (pos > syms_.size()) throw std::out_of_range("subword start past end");
        n = std::min(n, syms_.size() - pos);
        auto b = syms_.begin() + static_cast<std::ptrdiff_t>(pos);
        return word(std::vector<symbol>(b, b + static_cast<std::ptrdiff_t>(n)));
    }

    auto begin() const { return syms_.begin(); }
    auto end() const { return syms_.end(); }

    bool operator==(const word&) const = default;
    // Prefix-extension lexicographic order: a proper prefix compares less.
    std::strong_ordering operator<=>(const word& o) const {
        return std::lexicographical_compare_three_way(syms_.begin(), syms_.end(),
                                                      o.syms_.begin(), o.syms_.end());
    }

private:
    std::vector<symbol> syms_;
};

inline word operator+(const word& a, const word& b) {
    word r = a;
    r.append(b);
    return r;
}

/// A word with a decimal point; `point` symbols lie left of the point.
struct pointed_word {
    word symbols;
    std::size_t point = 0;

    pointed_word() = default;
    pointed_word(word w, std::size_t p) : symbols(std::move(w)), point(p) {
        if (point > symbols.size()) throw std::invalid_argument("point past end of word");
    }

    /// Parse "31.1" style text; the point may sit at either end.
    static pointed_word parse(std::string_view text) {
        auto dot = text.find('.');
        if (dot == std::string_view::npos) throw std::invalid_argument("pointed word needs a '.'");
        word left = word::parse(text.substr(0, dot));
        word right = word::parse(text.substr(dot + 1));
        std::size_t p = left.size();
        left.append(right);
        return pointed_word(std::move(left), p);
    }

    std::string to_string() const {
        std::string s = symbols.to_string();
        s.insert(point, 1, '.');
        return s;
    }

    word left() const { return symbols.prefix(point); }
    word right() const { return symbols.subword(point, symbols.size() - point); }

    bool operator==(const pointed_word&) const = default;
};

/// Letter-count vector (|w|_1, |w|_2, |w|_3).
inline std::array<std::int64_t, 3> abelianize(const word& w) {
    std::array<std::int64_t, 3> counts{0, 0, 0};
    for (symbol a : w) counts[a - 1] += 1;
    return counts;
}

/// True iff every adjacent pair of `w` lies in {11,12,13,22,23,31}.
inline bool check_allowed_pairs(const word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        symbol a = w[i], b = w[i + 1];
        bool ok = (a == 1) || (a == 2 && b >= 2) || (a == 3 && b == 1);
        if (!ok) return false;
    }
    return true;
}

/// Number of distinct length-j factors of `w`. Requires 1 <= j <= |w|.
inline std::size_t factor_complexity(const word& w, std::size_t j) {
    if (j < 1) throw std::invalid_argument("factor length must be positive");
    if (j > w.size()) throw std::invalid_argument("factor length exceeds word length");
    std::string flat = w.to_string();
    std::set<std::string_view> factors;
    std::string_view view(flat);
    for (std::size_t i = 0; i + j <= flat.size(); ++i) factors.insert(view.substr(i, j));
    return factors.size();
}

} // namespace infimax
