#pragma once

// Quaternion view of the n = 3 setting: four components (f0, f1, f2, f3)
// with units 1, i, j, k, i*j = k. The left-regular 4x4 matrix of a pure
// vector matches the Dirac matrices of the mixed-difference operators; the
// identification with Cl(0,3) goes through the even subalgebra
// i = e23, j = -e13, k = e12.

#include "dcl/clifford.hpp"
#include "dcl/rational.hpp"

#include <array>

namespace dcl {

struct QuaternionView {
    std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};

    QuaternionView() = default;
    QuaternionView(Rational a0, Rational a1, Rational a2, Rational a3)
        : c{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    friend QuaternionView operator*(const QuaternionView& a, const QuaternionView& b) {
        const auto& p = a.c;
        const auto& q = b.c;
        return QuaternionView(
            p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]);
    }
    friend QuaternionView operator+(const QuaternionView& a, const QuaternionView& b) {
        return QuaternionView(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]);
    }
    friend bool operator==(const QuaternionView& a, const QuaternionView& b) { return a.c == b.c; }

    QuaternionView conjugate() const { return QuaternionView(c[0], -c[1], -c[2], -c[3]); }

    // Left-regular representation: left_matrix(a) * components(b) == a*b.
    std::array<std::array<Rational, 4>, 4> left_matrix() const {
        const auto& a = c;
        return {{{a[0], -a[1], -a[2], -a[3]},
                 {a[1], a[0], -a[3], a[2]},
                 {a[2], a[3], a[0], -a[1]},
                 {a[3], -a[2], a[1], a[0]}}};
    }

    // Even-subalgebra embedding into Cl(0,3): i = e23, j = -e13, k = e12.
    CliffordElement to_clifford() const {
        CliffordElement a(3);
        a.set(0b000, c[0]);
        a.set(0b110, c[1]);   // e23
        a.set(0b101, -c[2]);  // -e13
        a.set(0b011, c[3]);   // e12
        return a;
    }
    static QuaternionView from_clifford(const CliffordElement& a) {
        if (a.dimension() != 3)
            throw std::invalid_argument("QuaternionView: dimension must be 3");
        for (const auto& [b, v] : a.coeffs())
            if (blade_grade(b) % 2 != 0)
                throw std::invalid_argument("QuaternionView: element not in the even subalgebra");
        return QuaternionView(a.coeff(0b000), a.coeff(0b110), -a.coeff(0b101), a.coeff(0b011));
    }
};

}  // namespace dcl
