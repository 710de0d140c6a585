#pragma once

// Factorial powers x^(s) of both families and the exact Stirling conversions
// between factorial powers and monomials, per coordinate and per multi-index.
// At mesh h the conversion coefficients carry h^(s-k) factors; the unscaled
// printed relations hold only at h = 1 and are kept available for the claim
// registry.

#include "dcl/family.hpp"
#include "dcl/multi_index.hpp"
#include "dcl/rational.hpp"
#include "dcl/stirling.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace dcl {

// prod_{k=0}^{s-1} (x -+ kh); s = 0 gives 1.
inline Rational factorial_power_eval(int s, FamilySign family, const Rational& h,
                                     const Rational& x) {
    if (s < 0) throw std::invalid_argument("factorial_power_eval: negative degree");
    Rational r(1);
    Rational step = Rational(family_unit(family)) * h;  // factor is (x - unit*k*h)
    for (int k = 0; k < s; ++k) r *= x - Rational(k) * step;
    return r;
}

inline Rational factorial_power_eval(const MultiIndex& alpha, FamilySign family,
                                     const Rational& h, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != alpha.dimension())
        throw std::invalid_argument("factorial_power_eval: point dimension mismatch");
    Rational r(1);
    for (int i = 0; i < alpha.dimension(); ++i)
        r *= factorial_power_eval(alpha[i], family, h, x[static_cast<size_t>(i)]);
    return r;
}

// x^(s)_F = sum_k coeff[k] x^k. Falling: signed Stirling numbers of the first
// kind; rising: unsigned. Set scaled=false for the literal h-free relation.
inline std::vector<Rational> factorial_to_monomial_1d(int s, FamilySign family,
                                                      const Rational& h, bool scaled = true) {
    std::vector<Rational> out(static_cast<size_t>(s) + 1, Rational(0));
    for (int k = 0; k <= s; ++k) {
        Rational c(mpq_class(stirling_first().at(s, k)));
        if (family == FamilySign::Minus && (s - k) % 2 != 0) c = -c;
        if (scaled) c *= h.pow(s - k);
        out[static_cast<size_t>(k)] = c;
    }
    return out;
}

// x^s = sum_k coeff[k] x^(k)_F, via Stirling numbers of the second kind.
inline std::vector<Rational> monomial_to_factorial_1d(int s, FamilySign family,
                                                      const Rational& h, bool scaled = true) {
    std::vector<Rational> out(static_cast<size_t>(s) + 1, Rational(0));
    for (int k = 0; k <= s; ++k) {
        Rational c(mpq_class(stirling_second().at(s, k)));
        if (family == FamilySign::Plus && (s - k) % 2 != 0) c = -c;
        if (scaled) c *= h.pow(s - k);
        out[static_cast<size_t>(k)] = c;
    }
    return out;
}

// Multi-index conversions by coordinate-wise products: the returned map sends
// beta to the coefficient of the target-basis power beta.
inline std::map<MultiIndex, Rational> convert_multi(
    const MultiIndex& alpha, FamilySign family, const Rational& h, bool to_monomial,
    bool scaled = true) {
    int n = alpha.dimension();
    std::map<MultiIndex, Rational> acc;
    acc.emplace(MultiIndex(n), Rational(1));
    for (int i = 0; i < n; ++i) {
        auto coeffs = to_monomial ? factorial_to_monomial_1d(alpha[i], family, h, scaled)
                                  : monomial_to_factorial_1d(alpha[i], family, h, scaled);
        std::map<MultiIndex, Rational> next;
        for (const auto& [beta, c] : acc)
            for (int k = 0; k <= alpha[i]; ++k) {
                if (coeffs[static_cast<size_t>(k)].is_zero()) continue;
                MultiIndex nb = beta.with(i, k);
                auto [it, inserted] = next.emplace(nb, c * coeffs[static_cast<size_t>(k)]);
                if (!inserted) it->second += c * coeffs[static_cast<size_t>(k)];
            }
        acc = std::move(next);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    return acc;
}

inline std::map<MultiIndex, Rational> factorial_to_monomial(const MultiIndex& alpha,
                                                            FamilySign family,
                                                            const Rational& h) {
    return convert_multi(alpha, family, h, /*to_monomial=*/true);
}
inline std::map<MultiIndex, Rational> monomial_to_factorial(const MultiIndex& alpha,
                                                            FamilySign family,
                                                            const Rational& h) {
    return convert_multi(alpha, family, h, /*to_monomial=*/false);
}

// The literal printed nested-sum coefficient of total degree b: the claim
// registry compares it against the coordinate-wise conversion above. S
// selects the first (K) or second (T, for L) kind.
inline mpz_class printed_nested_sum_coefficient(const MultiIndex& alpha, int b,
                                                StirlingTable& table) {
    int n = alpha.dimension();
    // l_0 := 0, l_n := b implicit; sum over 0 <= l_1 <= ... <= l_{n-1} <= b
    // of prod_i table(alpha_i, l_i - l_{i-1}).
    std::vector<int> l(static_cast<size_t>(n) + 1, 0);
    l[static_cast<size_t>(n)] = b;
    mpz_class total(0);
    // Recursive enumeration without recursion: simple odometer over l_1..l_{n-1}.
    std::vector<int> idx(static_cast<size_t>(n > 1 ? n - 1 : 0), 0);
    while (true) {
        bool ordered = true;
        for (size_t i = 1; i < idx.size(); ++i)
            if (idx[i] < idx[i - 1]) { ordered = false; break; }
        if (ordered) {
            for (size_t i = 0; i < idx.size(); ++i) l[i + 1] = idx[i];
            mpz_class prod(1);
            for (int i = 1; i <= n; ++i)
                prod *= table.at(alpha[i - 1], l[static_cast<size_t>(i)] - l[static_cast<size_t>(i - 1)]);
            total += prod;
        }
        // advance odometer; for n == 1 there is nothing to advance and the
        // single product above is the whole sum
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] > b) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos >= idx.size()) break;
    }
    return total;
}

}  // namespace dcl
