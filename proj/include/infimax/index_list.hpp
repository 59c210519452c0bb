#pragma once

// Index lists n = n_1 n_2 n_3 ... selecting the substitution applied at each
// level. A list is stored as a finite prefix plus a tail policy; a truncated
// tail makes depth exhaustion a hard error rather than inventing entries.
//
// Text syntax (shared with the CLI): comma-separated prefix, then either
// ";(p1,p2,...)" for an eventually periodic tail or a trailing "c*" for a
// constant tail. Examples: "1,2;(3,4)"  "1*"  "3,1,4,1,5,2*"  "1,2".

#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "infimax/errors.hpp"

namespace infimax {

enum class tail_policy { truncated, periodic, constant };

class index_list {
public:
    index_list() : tail_(tail_policy::truncated) {}

    static index_list truncated(std::vector<int> prefix) {
        index_list n;
        n.prefix_ = std::move(prefix);
        n.tail_ = tail_policy::truncated;
        n.validate();
        return n;
    }
    static index_list constant(int value, std::vector<int> prefix = {}) {
        index_list n;
        n.prefix_ = std::move(prefix);
        n.tail_ = tail_policy::constant;
        n.period_ = {value};
        n.validate();
        return n;
    }
    static index_list periodic(std::vector<int> prefix, std::vector<int> period) {
        if (period.empty()) throw std::invalid_argument("periodic tail must be nonempty");
        index_list n;
        n.prefix_ = std::move(prefix);
        n.tail_ = tail_policy::periodic;
        n.period_ = std::move(period);
        n.validate();
        return n;
    }

    /// Index n_k for 1-based level k. Throws depth_exhausted_error when a
    /// truncated list runs out.
    int at(std::size_t k) const {
        if (k == 0) throw std::invalid_argument("levels are 1-based");
        if (k <= prefix_.size()) return prefix_[k - 1];
        if (tail_ == tail_policy::truncated)
            throw depth_exhausted_error("insufficient index depth: level " + std::to_string(k) +
                                            " requested, only " + std::to_string(prefix_.size()) +
                                            " indices available",
                                        prefix_.size());
        std::size_t r = (k - prefix_.size() - 1) % period_.size();
        return period_[r];
    }

    bool has(std::size_t k) const {
        return tail_ != tail_policy::truncated || (k >= 1 && k <= prefix_.size());
    }

    tail_policy tail() const { return tail_; }
    const std::vector<int>& prefix() const { return prefix_; }
    const std::vector<int>& period() const { return period_; }

    /// Available depth: prefix size for truncated lists, unbounded otherwise.
    std::size_t depth_limit() const {
        return tail_ == tail_policy::truncated ? prefix_.size()
                                               : std::numeric_limits<std::size_t>::max();
    }

    static index_list parse(std::string_view text) {
        auto parse_ints = [](std::string_view s, std::vector<int>& out) {
            while (!s.empty()) {
                auto comma = s.find(',');
                std::string_view item = s.substr(0, comma);
                int v = 0;
                auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
                if (ec != std::errc() || p != item.data() + item.size())
                    throw std::invalid_argument("bad index list entry '" + std::string(item) + "'");
                out.push_back(v);
                if (comma == std::string_view::npos) break;
                s.remove_prefix(comma + 1);
            }
        };

        if (text.empty()) throw std::invalid_argument("empty index list");

        auto semi = text.find(';');
        if (semi != std::string_view::npos) {
            std::string_view head = text.substr(0, semi);
            std::string_view tail = text.substr(semi + 1);
            if (tail.size() < 3 || tail.front() != '(' || tail.back() != ')')
                throw std::invalid_argument("periodic tail must be written ;(p1,p2,...)");
            std::vector<int> prefix, period;
            if (!head.empty()) parse_ints(head, prefix);
            parse_ints(tail.substr(1, tail.size() - 2), period);
            return periodic(std::move(prefix), std::move(period));
        }
        if (text.back() == '*') {
            std::vector<int> items;
            parse_ints(text.substr(0, text.size() - 1), items);
            if (items.empty()) throw std::invalid_argument("constant tail needs a value before '*'");
            int c = items.back();
            items.pop_back();
            return constant(c, std::move(items));
        }
        std::vector<int> prefix;
        parse_ints(text, prefix);
        return truncated(std::move(prefix));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < prefix_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(prefix_[i]);
        }
        if (tail_ == tail_policy::constant) {
            if (!prefix_.empty()) s += ',';
            s += std::to_string(period_[0]) + "*";
        } else if (tail_ == tail_policy::periodic) {
            s += ";(";
            for (std::size_t i = 0; i < period_.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(period_[i]);
            }
            s += ')';
        }
        return s;
    }

    bool operator==(const index_list&) const = default;

private:
    void validate() const {
        for (int v : prefix_)
            if (v < 1) throw std::invalid_argument("index entries must be >= 1");
        for (int v : period_)
            if (v < 1) throw std::invalid_argument("index entries must be >= 1");
    }

    std::vector<int> prefix_;
    tail_policy tail_;
    std::vector<int> period_;
};

} // namespace infimax
