#pragma once

// The difference operator calculus: partial differences of both signs, lattice
// shifts, Dirac and Laplace operators, the Euler/Gamma family and its
// companions A, B, C, L_jk, R, V, the exact inverse of R, and exact matrix
// assembly of any operator between graded components.
//
// Everything acts on LatticePolynomial in its factorial basis. The sign
// matched to the family acts diagonally; the mismatched sign is routed
// through exact lattice shifts, so no approximation enters anywhere.

#include "dcl/family.hpp"
#include "dcl/linalg.hpp"
#include "dcl/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcl {

// Matched partial: forward for the falling family, backward for the rising
// one; acts diagonally, d/dx x^(s) = s x^(s-1) in the given axis.
inline LatticePolynomial matched_partial(const LatticePolynomial& p, int i) {
    if (i < 1 || i > p.dimension())
        throw std::invalid_argument("matched_partial: axis out of range");
    LatticePolynomial out(p.dimension(), p.mesh(), p.family());
    for (const auto& [alpha, c] : p.terms()) {
        int s = alpha[i - 1];
        if (s == 0) continue;
        out.add_term(alpha.lowered(i - 1), Rational(s) * c);
    }
    return out;
}

// Lattice shift f(.) -> f(. + direction*h e_i). The direction matching the
// family unit is I + dir*h*matched_partial; the opposite direction is its
// inverse, a finite Neumann series because the matched partial lowers degree.
inline LatticePolynomial shift(const LatticePolynomial& p, int i, int direction) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("shift: direction must be +1 or -1");
    int easy = family_unit(p.family());
    if (direction == easy) {
        return p + (Rational(direction) * p.mesh()) * matched_partial(p, i);
    }
    LatticePolynomial out = p;
    LatticePolynomial term = p;
    Rational factor = Rational(-easy) * p.mesh();
    while (true) {
        term = factor * matched_partial(term, i);
        if (term.is_zero()) break;
        out = out + term;
    }
    return out;
}

// Partial difference of either sign: forward (f(x+he_i)-f(x))/h, backward
// (f(x)-f(x-he_i))/h. The mismatched sign is expressed through shift.
inline LatticePolynomial partial(const LatticePolynomial& p, int i, OpSign op) {
    if (op == matched_op(p.family())) return matched_partial(p, i);
    Rational inv_h = Rational(1) / p.mesh();
    if (op == OpSign::Forward) return inv_h * (shift(p, i, +1) - p);
    return inv_h * (p - shift(p, i, -1));
}

// D^± = sum_i e_i ∂^{±i}.
inline LatticePolynomial dirac(const LatticePolynomial& p, OpSign op) {
    LatticePolynomial out(p.dimension(), p.mesh(), p.family());
    for (int i = 1; i <= p.dimension(); ++i)
        out = out + partial(p, i, op).left_multiplied(CliffordElement::generator(p.dimension(), i));
    return out;
}

// Star Laplacian sum_i ∂^{+i}∂^{-i}.
inline LatticePolynomial laplacian(const LatticePolynomial& p) {
    LatticePolynomial out(p.dimension(), p.mesh(), p.family());
    for (int i = 1; i <= p.dimension(); ++i)
        out = out + partial(partial(p, i, OpSign::Backward), i, OpSign::Forward);
    return out;
}

// E^± f = sum_i (m_i h)(∂^{±i}f)(. ∓ h e_i), built literally.
inline LatticePolynomial euler(const LatticePolynomial& p, OpSign op) {
    LatticePolynomial out(p.dimension(), p.mesh(), p.family());
    for (int i = 1; i <= p.dimension(); ++i)
        out = out + shift(partial(p, i, op), i, -op_unit(op)).coordinate_multiplied(i);
    return out;
}

// A^± = ∓h sum_i (m_i h) ∂^{±i}∂^{∓i}.
inline LatticePolynomial op_A(const LatticePolynomial& p, OpSign op) {
    Rational factor = Rational(-op_unit(op)) * p.mesh();
    LatticePolynomial out(p.dimension(), p.mesh(), p.family());
    for (int i = 1; i <= p.dimension(); ++i)
        out = out + partial(partial(p, i, opposite(op)), i, op).coordinate_multiplied(i);
    return factor * out;
}

// B^± = ±h sum_i ∂^{±i}.
inline LatticePolynomial op_B(const LatticePolynomial& p, OpSign op) {
    LatticePolynomial out(p.dimension(), p.mesh(), p.family());
    for (int i = 1; i <= p.dimension(); ++i) out = out + partial(p, i, op);
    return (Rational(op_unit(op)) * p.mesh()) * out;
}

// C^± f = sum_i (m_i h) e_i f(. ∓ h e_i).
inline LatticePolynomial op_C(const LatticePolynomial& p, OpSign op) {
    LatticePolynomial out(p.dimension(), p.mesh(), p.family());
    for (int i = 1; i <= p.dimension(); ++i)
        out = out + shift(p, i, -op_unit(op))
                        .left_multiplied(CliffordElement::generator(p.dimension(), i))
                        .coordinate_multiplied(i);
    return out;
}

// L_jk^± = (m_j h) ∂^{±k} − (m_k h) ∂^{±j}.
inline LatticePolynomial op_Ljk(const LatticePolynomial& p, int j, int k, OpSign op) {
    return partial(p, k, op).coordinate_multiplied(j) - partial(p, j, op).coordinate_multiplied(k);
}

// Γ^± = −sum_{j<k} e_j e_k L_jk^± − A^±.
inline LatticePolynomial gamma_op(const LatticePolynomial& p, OpSign op) {
    int n = p.dimension();
    LatticePolynomial out = -op_A(p, op);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            CliffordElement ejk =
                CliffordElement::generator(n, j) * CliffordElement::generator(n, k);
            out = out - op_Ljk(p, j, k, op).left_multiplied(ejk);
        }
    return out;
}

// R_{h,r}^± = rI + E^± − A^±  and  V_{h,r}^± = R_{h,r}^± + B^±/2.
inline LatticePolynomial op_R(const LatticePolynomial& p, OpSign op, const Rational& r) {
    return r * p + euler(p, op) - op_A(p, op);
}

inline LatticePolynomial op_V(const LatticePolynomial& p, OpSign op, const Rational& r) {
    return op_R(p, op, r) + Rational(1, 2) * op_B(p, op);
}

// ---------------------------------------------------------------------------
// Operator matrices between graded components.

// Raised when an operator image has a component outside the declared target
// degrees; carries the offending basis element.
struct SpanError : std::runtime_error {
    SpanError(MultiIndex alpha_, Blade blade_, int image_degree_)
        : std::runtime_error("operator image of basis element X" + alpha_.str() + " " +
                             blade_name(blade_) + " has a component of degree " +
                             std::to_string(image_degree_) + " outside the target span"),
          alpha(std::move(alpha_)),
          blade(blade_),
          image_degree(image_degree_) {}
    MultiIndex alpha;
    Blade blade;
    int image_degree;
};

// Ordered basis of a direct sum of graded components (ascending degrees).
class GradedSumBasis {
public:
    GradedSumBasis(int n, std::vector<int> degrees) : n_(n), degrees_(std::move(degrees)) {
        std::sort(degrees_.begin(), degrees_.end());
        degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
        for (int k : degrees_) {
            if (k < 0) throw std::invalid_argument("GradedSumBasis: negative degree");
            components_.emplace_back(n, k);
        }
    }

    static GradedSumBasis up_to(int n, int max_degree) {
        std::vector<int> d;
        for (int k = 0; k <= max_degree; ++k) d.push_back(k);
        return GradedSumBasis(n, std::move(d));
    }

    int dimension_n() const { return n_; }
    const std::vector<int>& degrees() const { return degrees_; }

    size_t size() const {
        size_t s = 0;
        for (const auto& c : components_) s += c.size();
        return s;
    }

    bool contains_degree(int k) const {
        return std::binary_search(degrees_.begin(), degrees_.end(), k);
    }

    std::pair<MultiIndex, Blade> element(size_t pos) const {
        for (const auto& c : components_) {
            if (pos < c.size()) return c.element(pos);
            pos -= c.size();
        }
        throw std::invalid_argument("GradedSumBasis: position out of range");
    }

    // Throws SpanError-free here; callers check degrees first via coordinates().
    std::vector<Rational> coordinates(const LatticePolynomial& p) const {
        std::vector<Rational> out(size(), Rational(0));
        size_t offset = 0;
        for (const auto& c : components_) {
            auto part = c.coordinates(p.graded_component(c.grade()));
            std::copy(part.begin(), part.end(), out.begin() + static_cast<long>(offset));
            offset += c.size();
        }
        return out;
    }

    LatticePolynomial from_coordinates(const std::vector<Rational>& v, const Rational& h,
                                       FamilySign family) const {
        if (v.size() != size())
            throw std::invalid_argument("GradedSumBasis: coordinate count mismatch");
        LatticePolynomial p(n_, h, family);
        size_t offset = 0;
        for (const auto& c : components_) {
            std::vector<Rational> part(v.begin() + static_cast<long>(offset),
                                       v.begin() + static_cast<long>(offset + c.size()));
            p = p + c.from_coordinates(part, h, family);
            offset += c.size();
        }
        return p;
    }

private:
    int n_;
    std::vector<int> degrees_;
    std::vector<GradedComponentBasis> components_;
};

using PolynomialMap = std::function<LatticePolynomial(const LatticePolynomial&)>;

// Exact matrix of a linear operator from the source to the target basis.
// Columns are images of source basis elements; if any image has a graded
// component outside the target degrees, assembly fails with SpanError —
// several printed inclusion claims are refuted through exactly this error.
inline Matrix assemble_matrix(const PolynomialMap& op, const GradedSumBasis& source,
                              const GradedSumBasis& target, const Rational& h,
                              FamilySign family) {
    Matrix m(target.size(), source.size());
    for (size_t col = 0; col < source.size(); ++col) {
        auto [alpha, blade] = source.element(col);
        LatticePolynomial basis_elt = LatticePolynomial::monomial(
            alpha, h, family, CliffordElement::basis_blade(source.dimension_n(), blade));
        LatticePolynomial image = op(basis_elt);
        for (const auto& [beta, c] : image.terms())
            if (!target.contains_degree(beta.degree()))
                throw SpanError(alpha, blade, beta.degree());
        auto coords = target.coordinates(image);
        for (size_t row = 0; row < coords.size(); ++row) m.at(row, col) = coords[row];
    }
    return m;
}

// Exact inverse of R_{h,r}^± for r > 0: assemble R on all degrees up to
// deg(p) and solve. R is triangular with diagonal blocks (r + k)I up to a
// strictly degree-lowering correction, so the system is uniquely solvable.
inline LatticePolynomial invert_R(const LatticePolynomial& p, OpSign op, const Rational& r) {
    if (r.sign() <= 0) throw std::invalid_argument("invert_R: requires r > 0");
    if (p.is_zero()) return p;
    GradedSumBasis basis = GradedSumBasis::up_to(p.dimension(), p.degree());
    Matrix m = assemble_matrix([&](const LatticePolynomial& q) { return op_R(q, op, r); },
                               basis, basis, p.mesh(), p.family());
    auto x = solve(m, basis.coordinates(p));
    if (!x) throw std::runtime_error("invert_R: operator matrix is singular");
    return basis.from_coordinates(*x, p.mesh(), p.family());
}

// ---------------------------------------------------------------------------
// The literal summation formulas for J and its would-be companion W, as
// pointwise evaluations at a lattice point. th runs over [0,1)_h for the
// forward sign and (0,1]_h for the backward one; both need h = 1/N. The
// factorial power (.)^(r-1) forces r to be a positive integer here.

namespace detail {

inline long grid_count(const Rational& h) {
    Rational inv = Rational(1) / h;
    if (inv.denominator() != 1)
        throw std::invalid_argument("J/W summation: h must be 1/N for an integer N");
    return inv.to_long();
}

inline long integer_r(const Rational& r) {
    if (r.sign() <= 0 || r.denominator() != 1)
        throw std::invalid_argument("J/W summation: r must be a positive integer");
    return r.to_long();
}

// Common body: sum_{th} h * d_h^±( weight(th) * f(th * point) ) with
// (d_h^± g)(th) = ∓(g(th) − g(th ± h))/h; weight_shift chooses between the
// J kernel (th ∓ h)^(r-1) and the W kernel (th)^(r-1), both of the family
// opposite to the operator sign.
inline CliffordElement jw_sum(const LatticePolynomial& p, OpSign op, const Rational& r,
                              const std::vector<Rational>& point, bool shifted_kernel) {
    long n_grid = grid_count(p.mesh());
    long rr = integer_r(r);
    const Rational& h = p.mesh();
    int u = op_unit(op);
    FamilySign kernel_family = (op == OpSign::Forward) ? FamilySign::Minus : FamilySign::Plus;

    auto g = [&](const Rational& th) {
        Rational base = shifted_kernel ? th - Rational(u) * h : th;
        Rational w = factorial_power_eval(static_cast<int>(rr - 1), kernel_family, h, base);
        std::vector<Rational> scaled(point.size());
        for (size_t i = 0; i < point.size(); ++i) scaled[i] = th * point[i];
        return w * p.evaluate(scaled);
    };

    CliffordElement acc(p.dimension());
    for (long t = 0; t < n_grid; ++t) {
        // forward sign: th = 0, h, ..., 1-h; backward: th = h, ..., 1.
        Rational th = (op == OpSign::Forward) ? Rational(t) * h : Rational(t + 1) * h;
        CliffordElement d = Rational(-u) * (g(th) - g(th + Rational(u) * h));
        acc += d;  // h * d_h cancels the 1/h in the difference quotient
    }
    return acc;
}

}  // namespace detail

inline CliffordElement eval_J_summation(const LatticePolynomial& p, OpSign op,
                                        const Rational& r, const std::vector<Rational>& point) {
    return detail::jw_sum(p, op, r, point, /*shifted_kernel=*/true);
}

inline CliffordElement eval_W_summation(const LatticePolynomial& p, OpSign op,
                                        const Rational& r, const std::vector<Rational>& point) {
    return detail::jw_sum(p, op, r, point, /*shifted_kernel=*/false);
}

// ---------------------------------------------------------------------------
// Named operator descriptors for the CLI and for matrix assembly.

struct DifferenceOperator {
    enum class Kind {
        Partial,   // "d+:i" / "d-:i"
        Dirac,     // "dh+" / "dh-"
        Laplacian, // "lap"
        Euler,     // "euler+"
        Gamma,     // "gamma-"
        A,         // "A+"
        B,         // "B-"
        C,         // "C+"
        R,         // "R+:3/2"
        V,         // "V-:1"
        J,         // "J+:2"  (the exact inverse of R)
        Ljk,       // "L+:1,2"
        Shift,     // "shift:+1"
    };

    Kind kind = Kind::Dirac;
    OpSign sign = OpSign::Forward;
    int axis = 0;        // Partial, Shift
    int axis2 = 0;       // Ljk second axis
    int direction = 0;   // Shift
    Rational r;          // R, V, J

    LatticePolynomial apply(const LatticePolynomial& p) const {
        switch (kind) {
            case Kind::Partial: return partial(p, axis, sign);
            case Kind::Dirac: return dirac(p, sign);
            case Kind::Laplacian: return laplacian(p);
            case Kind::Euler: return euler(p, sign);
            case Kind::Gamma: return gamma_op(p, sign);
            case Kind::A: return op_A(p, sign);
            case Kind::B: return op_B(p, sign);
            case Kind::C: return op_C(p, sign);
            case Kind::R: return op_R(p, sign, r);
            case Kind::V: return op_V(p, sign, r);
            case Kind::J: return invert_R(p, sign, r);
            case Kind::Ljk: return op_Ljk(p, axis, axis2, sign);
            case Kind::Shift: return shift(p, axis, direction);
        }
        throw std::logic_error("DifferenceOperator: unhandled kind");
    }

    // Parses the CLI operator grammar, e.g. "dh+", "lap", "euler-", "R+:3/2",
    // "J-:2", "shift:-2", "L+:1,2", "d+:1".
    static DifferenceOperator parse(const std::string& name) {
        auto fail = [&]() -> DifferenceOperator {
            throw std::invalid_argument("unknown operator name: '" + name + "'");
        };
        DifferenceOperator d;
        auto colon = name.find(':');
        std::string head = name.substr(0, colon);
        std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);

        auto take_sign = [&](const std::string& stem) -> bool {
            if (head == stem + "+") { d.sign = OpSign::Forward; return true; }
            if (head == stem + "-") { d.sign = OpSign::Backward; return true; }
            return false;
        };
        auto parse_axis = [&](const std::string& s) {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail();
            return std::stoi(s);
        };

        if (head == "lap") {
            if (!arg.empty()) fail();
            d.kind = Kind::Laplacian;
        } else if (take_sign("dh")) {
            if (!arg.empty()) fail();
            d.kind = Kind::Dirac;
        } else if (take_sign("euler")) {
            if (!arg.empty()) fail();
            d.kind = Kind::Euler;
        } else if (take_sign("gamma")) {
            if (!arg.empty()) fail();
            d.kind = Kind::Gamma;
        } else if (take_sign("A") || take_sign("B") || take_sign("C")) {
            if (!arg.empty()) fail();
            d.kind = head[0] == 'A' ? Kind::A : head[0] == 'B' ? Kind::B : Kind::C;
        } else if (take_sign("R") || take_sign("V") || take_sign("J")) {
            d.kind = head[0] == 'R' ? Kind::R : head[0] == 'V' ? Kind::V : Kind::J;
            try {
                d.r = Rational::parse(arg);
            } catch (const std::exception&) {
                fail();
            }
        } else if (take_sign("L")) {
            d.kind = Kind::Ljk;
            auto comma = arg.find(',');
            if (comma == std::string::npos) fail();
            d.axis = parse_axis(arg.substr(0, comma));
            d.axis2 = parse_axis(arg.substr(comma + 1));
        } else if (take_sign("d")) {
            d.kind = Kind::Partial;
            d.axis = parse_axis(arg);
        } else if (head == "shift") {
            d.kind = Kind::Shift;
            if (arg.size() < 2 || (arg[0] != '+' && arg[0] != '-')) fail();
            d.direction = arg[0] == '+' ? 1 : -1;
            d.axis = parse_axis(arg.substr(1));
        } else {
            fail();
        }
        return d;
    }
};

}  // namespace dcl
