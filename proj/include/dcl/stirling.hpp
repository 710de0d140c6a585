#pragma once

// Memoized Stirling numbers. Unsigned first kind c(s,k) (cycle counts) and
// second kind S(s,k), extended lazily row by row under a lock so shared
// tables are safe to read concurrently.

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace dcl {

class StirlingTable {
public:
    enum class Kind { First, Second };

    explicit StirlingTable(Kind kind, int cap = 32) : kind_(kind), cap_(cap) {
        rows_.push_back({mpz_class(1)});  // row s = 0
    }

    // c(s,k) or S(s,k); zero outside 0 <= k <= s.
    mpz_class at(int s, int k) {
        if (s < 0 || k < 0 || k > s) return mpz_class(0);
        if (s > cap_) throw std::invalid_argument("StirlingTable: degree exceeds cap");
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(rows_.size()) <= s) {
            int m = static_cast<int>(rows_.size());  // building row m
            const auto& prev = rows_.back();
            std::vector<mpz_class> row(static_cast<size_t>(m) + 1);
            row[0] = 0;
            row[static_cast<size_t>(m)] = 1;
            for (int j = 1; j < m; ++j) {
                mpz_class weight = (kind_ == Kind::First) ? mpz_class(m - 1) : mpz_class(j);
                row[static_cast<size_t>(j)] =
                    prev[static_cast<size_t>(j - 1)] + weight * prev[static_cast<size_t>(j)];
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<size_t>(s)][static_cast<size_t>(k)];
    }

    Kind kind() const { return kind_; }

private:
    Kind kind_;
    int cap_;
    std::mutex mu_;
    std::vector<std::vector<mpz_class>> rows_;
};

// Shared process-wide tables.
StirlingTable& stirling_first();
StirlingTable& stirling_second();

}  // namespace dcl
