#pragma once

// Clifford-valued lattice polynomials stored in the factorial-power basis of
// one family: P = sum_alpha x^(alpha) a_alpha with a_alpha in Cl(0,n). All
// operator calculus in the library works on this representation, so the mesh
// width h and the family sign travel with every polynomial.

#include "dcl/clifford.hpp"
#include "dcl/factorial.hpp"
#include "dcl/family.hpp"
#include "dcl/multi_index.hpp"
#include "dcl/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dcl {

class LatticePolynomial {
public:
    LatticePolynomial(int n, Rational h, FamilySign family)
        : n_(n), h_(std::move(h)), family_(family) {
        if (n_ < 1) throw std::invalid_argument("LatticePolynomial: dimension must be >= 1");
        if (h_.sign() <= 0) throw std::invalid_argument("LatticePolynomial: mesh width must be positive");
    }

    static LatticePolynomial zero(int n, const Rational& h, FamilySign family) {
        return LatticePolynomial(n, h, family);
    }

    static LatticePolynomial constant(int n, const Rational& h, FamilySign family,
                                      const CliffordElement& value) {
        LatticePolynomial p(n, h, family);
        p.add_term(MultiIndex(n), value);
        return p;
    }

    // Single factorial power x^(alpha) times a Clifford coefficient.
    static LatticePolynomial monomial(const MultiIndex& alpha, const Rational& h,
                                      FamilySign family, const CliffordElement& coeff) {
        LatticePolynomial p(alpha.dimension(), h, family);
        p.add_term(alpha, coeff);
        return p;
    }

    int dimension() const { return n_; }
    const Rational& mesh() const { return h_; }
    FamilySign family() const { return family_; }
    const std::map<MultiIndex, CliffordElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
        return d;
    }

    void add_term(const MultiIndex& alpha, const CliffordElement& coeff) {
        if (alpha.dimension() != n_)
            throw std::invalid_argument("LatticePolynomial: multi-index dimension mismatch");
        if (coeff.dimension() != n_)
            throw std::invalid_argument("LatticePolynomial: coefficient algebra mismatch");
        auto [it, inserted] = terms_.emplace(alpha, coeff);
        if (!inserted) it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    CliffordElement coeff(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? CliffordElement(n_) : it->second;
    }

    CliffordElement evaluate(const std::vector<Rational>& point) const {
        CliffordElement out(n_);
        for (const auto& [alpha, c] : terms_)
            out = out + factorial_power_eval(alpha, family_, h_, point) * c;
        return out;
    }

    LatticePolynomial operator+(const LatticePolynomial& o) const {
        require_compatible(o);
        LatticePolynomial out = *this;
        for (const auto& [alpha, c] : o.terms_) out.add_term(alpha, c);
        return out;
    }

    LatticePolynomial operator-(const LatticePolynomial& o) const {
        require_compatible(o);
        LatticePolynomial out = *this;
        for (const auto& [alpha, c] : o.terms_) out.add_term(alpha, -Rational(1) * c);
        return out;
    }

    LatticePolynomial operator-() const {
        LatticePolynomial out(n_, h_, family_);
        for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -Rational(1) * c);
        return out;
    }

    friend LatticePolynomial operator*(const Rational& s, const LatticePolynomial& p) {
        LatticePolynomial out(p.n_, p.h_, p.family_);
        if (s.is_zero()) return out;
        for (const auto& [alpha, c] : p.terms_) out.terms_.emplace(alpha, s * c);
        return out;
    }

    // Constant Clifford factors act on the coefficients only.
    LatticePolynomial left_multiplied(const CliffordElement& a) const {
        LatticePolynomial out(n_, h_, family_);
        for (const auto& [alpha, c] : terms_) out.add_term(alpha, a * c);
        return out;
    }

    LatticePolynomial right_multiplied(const CliffordElement& a) const {
        LatticePolynomial out(n_, h_, family_);
        for (const auto& [alpha, c] : terms_) out.add_term(alpha, c * a);
        return out;
    }

    // Multiplication by the scalar coordinate weight m_i h, using
    // x (x)^(s) = (x)^(s+1) + unit * s h (x)^(s) in coordinate i.
    LatticePolynomial coordinate_multiplied(int i) const {
        if (i < 1 || i > n_) throw std::invalid_argument("coordinate_multiplied: index out of range");
        Rational unit(family_unit(family_));
        LatticePolynomial out(n_, h_, family_);
        for (const auto& [alpha, c] : terms_) {
            out.add_term(alpha.raised(i - 1), c);
            Rational low = unit * Rational(alpha[i - 1]) * h_;
            if (!low.is_zero()) out.add_term(alpha, low * c);
        }
        return out;
    }

    // Left multiplication by the vector variable mh = sum_i (m_i h) e_i.
    LatticePolynomial vector_variable_multiplied() const {
        LatticePolynomial out(n_, h_, family_);
        for (int i = 1; i <= n_; ++i) {
            CliffordElement ei = CliffordElement::generator(n_, i);
            out = out + coordinate_multiplied(i).left_multiplied(ei);
        }
        return out;
    }

    // Pointwise multiplication by the scalar |mh|^2 = sum_i (m_i h)^2.
    LatticePolynomial norm_squared_multiplied() const {
        LatticePolynomial out(n_, h_, family_);
        for (int i = 1; i <= n_; ++i)
            out = out + coordinate_multiplied(i).coordinate_multiplied(i);
        return out;
    }

    LatticePolynomial graded_component(int k) const {
        LatticePolynomial out(n_, h_, family_);
        for (const auto& [alpha, c] : terms_)
            if (alpha.degree() == k) out.terms_.emplace(alpha, c);
        return out;
    }

    bool operator==(const LatticePolynomial& o) const {
        return n_ == o.n_ && h_ == o.h_ && family_ == o.family_ && terms_ == o.terms_;
    }
    bool operator!=(const LatticePolynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [alpha, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "X" << alpha.str() << "*(" << c.str() << ")";
        }
        return os.str();
    }

private:
    void require_compatible(const LatticePolynomial& o) const {
        if (n_ != o.n_ || h_ != o.h_ || family_ != o.family_)
            throw std::invalid_argument("LatticePolynomial: incompatible dimension, mesh, or family");
    }

    int n_;
    Rational h_;
    FamilySign family_;
    std::map<MultiIndex, CliffordElement> terms_;
};

// (mh)^s applied to the scalar 1: the s-fold vector-variable product.
inline LatticePolynomial vector_variable_power(int s, int n, const Rational& h,
                                               FamilySign family) {
    LatticePolynomial p = LatticePolynomial::constant(n, h, family, CliffordElement::scalar(n, Rational(1)));
    for (int j = 0; j < s; ++j) p = p.vector_variable_multiplied();
    return p;
}

// Homogeneous replacement for the vector-variable power (mh)^s: scalar
// |mh|^(2k)-analogues for even s and their vector-valued companions for odd
// s, built from factorial powers with doubled multi-indices.
inline LatticePolynomial homogeneous_power(int s, int n, const Rational& h, FamilySign family) {
    if (s < 0) throw std::invalid_argument("homogeneous_power: negative degree");
    int k = s / 2;
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    Rational k_factorial(1);
    for (int j = 2; j <= k; ++j) k_factorial = k_factorial * Rational(j);
    LatticePolynomial p(n, h, family);
    for (const MultiIndex& alpha : MultiIndex::all_of_degree(n, k)) {
        Rational alpha_factorial(1);
        for (int i = 0; i < n; ++i)
            for (int j = 2; j <= alpha[i]; ++j) alpha_factorial = alpha_factorial * Rational(j);
        Rational c = sign * k_factorial / alpha_factorial;
        std::vector<int> doubled(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) doubled[static_cast<size_t>(i)] = 2 * alpha[i];
        if (s % 2 == 0) {
            p.add_term(MultiIndex(std::vector<int>(doubled)),
                       CliffordElement::scalar(n, c));
        } else {
            for (int i = 1; i <= n; ++i) {
                std::vector<int> raised = doubled;
                raised[static_cast<size_t>(i - 1)] += 1;
                p.add_term(MultiIndex(std::vector<int>(raised)),
                           c * CliffordElement::generator(n, i));
            }
        }
    }
    return p;
}

// Ordered basis of the Clifford-valued homogeneous component of degree k:
// multi-indices of degree k in ascending lexicographic order, each paired
// with every blade bitmask in ascending order.
class GradedComponentBasis {
public:
    GradedComponentBasis(int n, int k) : n_(n), k_(k), alphas_(MultiIndex::all_of_degree(n, k)) {}

    int dimension_n() const { return n_; }
    int grade() const { return k_; }
    size_t size() const { return alphas_.size() << n_; }
    const std::vector<MultiIndex>& alphas() const { return alphas_; }

    // Index layout: position = alpha_index * 2^n + blade.
    std::pair<MultiIndex, Blade> element(size_t pos) const {
        size_t blades = size_t(1) << n_;
        return {alphas_[pos / blades], static_cast<Blade>(pos % blades)};
    }

    std::vector<Rational> coordinates(const LatticePolynomial& p) const {
        if (p.dimension() != n_)
            throw std::invalid_argument("GradedComponentBasis: dimension mismatch");
        std::vector<Rational> out(size(), Rational(0));
        size_t blades = size_t(1) << n_;
        for (size_t a = 0; a < alphas_.size(); ++a) {
            CliffordElement c = p.coeff(alphas_[a]);
            for (const auto& [blade, value] : c.coeffs())
                out[a * blades + blade] = value;
        }
        return out;
    }

    LatticePolynomial from_coordinates(const std::vector<Rational>& v, const Rational& h,
                                       FamilySign family) const {
        if (v.size() != size())
            throw std::invalid_argument("GradedComponentBasis: coordinate count mismatch");
        LatticePolynomial p(n_, h, family);
        size_t blades = size_t(1) << n_;
        for (size_t a = 0; a < alphas_.size(); ++a) {
            CliffordElement c(n_);
            for (size_t b = 0; b < blades; ++b)
                if (!v[a * blades + b].is_zero()) c.add(static_cast<Blade>(b), v[a * blades + b]);
            if (!c.is_zero()) p.add_term(alphas_[a], c);
        }
        return p;
    }

private:
    int n_;
    int k_;
    std::vector<MultiIndex> alphas_;
};

}  // namespace dcl
