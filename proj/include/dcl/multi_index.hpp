#pragma once

// Multi-indices alpha = (alpha_1, ..., alpha_n) with the usual degree |alpha|
// and factorial alpha!.

#include "dcl/rational.hpp"

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcl {

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int n) : e_(static_cast<size_t>(n), 0) {
        if (n < 0) throw std::invalid_argument("MultiIndex: negative dimension");
    }
    MultiIndex(std::initializer_list<int> entries) : e_(entries) { validate(); }
    explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) { validate(); }

    int dimension() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    Rational index_factorial() const {
        Rational f(1);
        for (int a : e_) f *= factorial(a);
        return f;
    }

    // alpha + e_i / alpha - e_i (the latter requires alpha_i > 0).
    MultiIndex raised(int i) const {
        MultiIndex r = *this;
        r.e_[static_cast<size_t>(i)] += 1;
        return r;
    }
    MultiIndex lowered(int i) const {
        if (e_[static_cast<size_t>(i)] == 0)
            throw std::invalid_argument("MultiIndex: lowering a zero entry");
        MultiIndex r = *this;
        r.e_[static_cast<size_t>(i)] -= 1;
        return r;
    }
    MultiIndex with(int i, int value) const {
        if (value < 0) throw std::invalid_argument("MultiIndex: negative entry");
        MultiIndex r = *this;
        r.e_[static_cast<size_t>(i)] = value;
        return r;
    }

    const std::vector<int>& entries() const { return e_; }

    // Lexicographic order; also the canonical term order for printing.
    auto operator<=>(const MultiIndex&) const = default;

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

    // All multi-indices of dimension n with |alpha| == k, ascending lex.
    static std::vector<MultiIndex> all_of_degree(int n, int k) {
        std::vector<MultiIndex> out;
        MultiIndex cur(n);
        enumerate(n, k, 0, cur, out);
        return out;
    }

private:
    void validate() const {
        for (int a : e_)
            if (a < 0) throw std::invalid_argument("MultiIndex: negative entry");
    }
    static void enumerate(int n, int rest, int pos, MultiIndex& cur,
                          std::vector<MultiIndex>& out) {
        if (pos == n - 1) {
            cur.e_[static_cast<size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur.e_[static_cast<size_t>(pos)] = v;
            enumerate(n, rest - v, pos + 1, cur, out);
        }
    }

    std::vector<int> e_;
};

}  // namespace dcl
