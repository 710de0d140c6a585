#pragma once

// Clifford algebra Cl(0,n): e_i e_j + e_j e_i = -2 delta_ij e_0. Elements are
// sparse maps from blade index sets (bitmask over {1..n}) to Rational
// coefficients. Immutable-style value semantics throughout.

#include "dcl/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcl {

using Blade = std::uint32_t;  // bit i-1 set  <=>  e_i in the blade

inline int blade_grade(Blade b) { return __builtin_popcount(b); }

// Sign of e_A * e_B from transposition counting plus e_i^2 = -1 on the
// overlap; the resulting blade is A xor B.
inline int blade_product_sign(Blade a, Blade b) {
    int swaps = 0;
    // Count, for each generator in b, how many generators of a lie above it.
    int above = blade_grade(a);
    for (int i = 0; i < 32 && (b >> i) != 0; ++i) {
        if (a & (1u << i)) --above;
        if (b & (1u << i)) swaps += above;
    }
    int squares = blade_grade(a & b);
    return ((swaps + squares) % 2 == 0) ? 1 : -1;
}

inline std::string blade_name(Blade b) {
    if (b == 0) return "e0";
    std::string s = "e";
    for (int i = 0; i < 32; ++i)
        if (b & (1u << i)) s += std::to_string(i + 1);
    return s;
}

class CliffordElement {
public:
    CliffordElement() : n_(0) {}
    explicit CliffordElement(int n) : n_(n) {
        if (n < 0 || n > 8) throw std::invalid_argument("CliffordElement: dimension out of range");
    }

    static CliffordElement scalar(int n, const Rational& c) {
        CliffordElement a(n);
        a.set(0, c);
        return a;
    }
    static CliffordElement basis_blade(int n, Blade b, const Rational& c = Rational(1)) {
        CliffordElement a(n);
        a.set(b, c);
        return a;
    }
    // e_i, 1-based.
    static CliffordElement generator(int n, int i) {
        if (i < 1 || i > n) throw std::invalid_argument("CliffordElement: generator index out of range");
        return basis_blade(n, Blade(1) << (i - 1));
    }

    int dimension() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(Blade b) const {
        auto it = coeffs_.find(b);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set(Blade b, const Rational& c) {
        if (b >= (Blade(1) << n_)) throw std::invalid_argument("CliffordElement: blade outside Cl(0,n)");
        if (c.is_zero())
            coeffs_.erase(b);
        else
            coeffs_[b] = c;
    }
    void add(Blade b, const Rational& c) { set(b, coeff(b) + c); }

    const std::map<Blade, Rational>& coeffs() const { return coeffs_; }

    Rational scalar_part() const { return coeff(0); }

    CliffordElement vector_part() const {
        CliffordElement v(n_);
        for (const auto& [b, c] : coeffs_)
            if (blade_grade(b) == 1) v.set(b, c);
        return v;
    }

    CliffordElement grade_part(int k) const {
        CliffordElement v(n_);
        for (const auto& [b, c] : coeffs_)
            if (blade_grade(b) == k) v.set(b, c);
        return v;
    }

    // Clifford conjugation: e_A -> (-1)^{k(k+1)/2} e_A, k = |A|. It is the
    // anti-automorphism with conj(e_i) = -e_i.
    CliffordElement conjugate() const {
        CliffordElement v(n_);
        for (const auto& [b, c] : coeffs_) {
            int k = blade_grade(b);
            bool flip = ((k * (k + 1) / 2) % 2) != 0;
            v.set(b, flip ? -c : c);
        }
        return v;
    }

    CliffordElement operator-() const {
        CliffordElement v(n_);
        for (const auto& [b, c] : coeffs_) v.set(b, -c);
        return v;
    }

    CliffordElement& operator+=(const CliffordElement& o) {
        check_dim(o);
        for (const auto& [b, c] : o.coeffs_) add(b, c);
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o) {
        check_dim(o);
        for (const auto& [b, c] : o.coeffs_) add(b, -c);
        return *this;
    }
    CliffordElement& operator*=(const Rational& s) {
        if (s.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [b, c] : coeffs_) c *= s;
        return *this;
    }

    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }
    friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        a.check_dim(b);
        CliffordElement r(a.n_);
        for (const auto& [ba, ca] : a.coeffs_)
            for (const auto& [bb, cb] : b.coeffs_) {
                int sgn = blade_product_sign(ba, bb);
                Rational c = ca * cb;
                r.add(ba ^ bb, sgn > 0 ? c : -c);
            }
        return r;
    }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [b, c] : coeffs_) {
            if (!first) s += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) s += "-";
            s += c.abs().str() + " " + blade_name(b);
            first = false;
        }
        return s;
    }

private:
    void check_dim(const CliffordElement& o) const {
        if (n_ != o.n_) throw std::invalid_argument("CliffordElement: dimension mismatch");
    }

    int n_;
    std::map<Blade, Rational> coeffs_;
};

inline Rational scalar_part(const CliffordElement& a) { return a.scalar_part(); }
inline CliffordElement vector_part(const CliffordElement& a) { return a.vector_part(); }

}  // namespace dcl
