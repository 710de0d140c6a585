// Fischer inner product, kernel bases, decomposition towers, and the
// quaternionic mixed-operator calculus: structural properties plus frozen
// hand-verified dimensions and one fully worked decomposition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcl/fischer.hpp"
#include "dcl/io.hpp"
#include "dcl/quaternion.hpp"

#include <random>

using namespace dcl;

namespace {

LatticePolynomial random_homogeneous(std::mt19937_64& rng, int n, int k, const Rational& h,
                                     FamilySign fam) {
    LatticePolynomial p(n, h, fam);
    auto alphas = MultiIndex::all_of_degree(n, k);
    for (int t = 0; t < 3; ++t) {
        const MultiIndex& a = alphas[rng() % alphas.size()];
        Blade b = static_cast<Blade>(rng() % (1u << n));
        long c = static_cast<long>(rng() % 9) - 4;
        p.add_term(a, CliffordElement::basis_blade(n, b, Rational(c == 0 ? 1 : c)));
    }
    return p;
}

QuaternionLatticePolynomial random_qpoly(std::mt19937_64& rng, int k, const Rational& h,
                                         FamilySign fam) {
    QuaternionLatticePolynomial q(h, fam);
    auto alphas = MultiIndex::all_of_degree(3, k);
    for (int t = 0; t < 3; ++t) {
        const MultiIndex& a = alphas[rng() % alphas.size()];
        long c = static_cast<long>(rng() % 9) - 4;
        q.component(static_cast<int>(rng() % 4))
            .add_term(a, CliffordElement::scalar(3, Rational(c == 0 ? 1 : c)));
    }
    return q;
}

long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

const std::vector<Rational> kMeshes = {Rational(1), Rational(1, 2)};

}  // namespace

TEST_CASE("Fischer inner product: duality route agrees with the weighted-sum route") {
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int k = 0; k <= 3; ++k)
                    for (int rep = 0; rep < 3; ++rep) {
                        auto P = random_homogeneous(rng, n, k, h, fam);
                        auto Q = random_homogeneous(rng, n, k, h, fam);
                        CHECK(fischer_inner_product(P, Q) ==
                              fischer_inner_product_operator_route(P, Q));
                    }
}

TEST_CASE("Fischer adjointness: [(mh)P, Q] = -[P, D Q]") {
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
                OpSign op = matched_op(fam);
                for (int k = 0; k <= 3; ++k)
                    for (int rep = 0; rep < 3; ++rep) {
                        auto P = random_homogeneous(rng, n, k, h, fam);
                        auto Q = random_homogeneous(rng, n, k + 1, h, fam);
                        CHECK(fischer_inner_product(P.vector_variable_multiplied(), Q) ==
                              -fischer_inner_product(P, dirac(Q, op)));
                    }
            }
}

TEST_CASE("Fischer inner product is positive definite on each graded piece") {
    std::mt19937_64 rng(47);
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int k = 0; k <= 3; ++k)
                    for (int rep = 0; rep < 3; ++rep) {
                        auto P = random_homogeneous(rng, n, k, h, fam);
                        Rational v = fischer_inner_product(P, P);
                        CHECK(v.sign() >= 0);
                        CHECK((v.sign() > 0) == !P.is_zero());
                    }
}

TEST_CASE("monogenic kernel n=2 k=1 has dimension 4 and contains the hand element") {
    for (const Rational& h : kMeshes)
        for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
            auto kb = monogenic_kernel(1, 2, h, fam);
            CHECK(kb.elements.size() == 4);
            OpSign op = matched_op(fam);
            for (const auto& e : kb.elements) CHECK(dirac(e, op).is_zero());
            // 1/2 ( (m_1h) e0 + (m_2h) e2 e1 ): e2e1 = -e12
            LatticePolynomial hand(2, h, fam);
            hand.add_term(MultiIndex{1, 0}, CliffordElement::scalar(2, Rational(1, 2)));
            hand.add_term(MultiIndex{0, 1},
                          CliffordElement::basis_blade(2, Blade{0b11}, Rational(-1, 2)));
            CHECK(dirac(hand, op).is_zero());
        }
}

TEST_CASE("rank-nullity: dim M_k + rank D_k = dim Pi_k for k <= 4, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int k = 1; k <= 4; ++k) {
                    auto kb = monogenic_kernel(k, n, h, fam);
                    size_t full = static_cast<size_t>(binom(k + n - 1, n - 1)) << n;
                    CHECK(kb.elements.size() + kb.operator_rank == full);
                }
}

TEST_CASE("harmonic kernel dimensions, n=2") {
    // star-Laplacian kernel inside homogeneous degree k: frozen dimensions
    const size_t expect[] = {4, 8, 8, 4, 0};
    for (const Rational& h : kMeshes)
        for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
            for (int k = 0; k <= 4; ++k) {
                auto kb = harmonic_kernel(k, 2, h, fam);
                CHECK(kb.elements.size() == expect[k]);
                for (const auto& e : kb.elements) CHECK(laplacian(e).is_zero());
            }
}

TEST_CASE("hand-verified Dirac decomposition: n=2, P = (m_1h) e0") {
    Rational h(1);
    LatticePolynomial p(2, h, FamilySign::Minus);
    p.add_term(MultiIndex{1, 0}, CliffordElement::scalar(2, Rational(1)));
    auto res = fischer_decompose_dirac(p, "auto");
    REQUIRE(res.feasible);
    REQUIRE(res.components.size() == 2);
    // K_1 = -1/2 (m_2h) e12 + 1/2 (m_1h) e0
    LatticePolynomial k1(2, h, FamilySign::Minus);
    k1.add_term(MultiIndex{0, 1}, CliffordElement::basis_blade(2, Blade{0b11}, Rational(-1, 2)));
    k1.add_term(MultiIndex{1, 0}, CliffordElement::scalar(2, Rational(1, 2)));
    // K_0 = -1/2 e1
    LatticePolynomial k0(2, h, FamilySign::Minus);
    k0.add_term(MultiIndex{0, 0}, CliffordElement::basis_blade(2, Blade{0b01}, Rational(-1, 2)));
    CHECK(res.components[0] == k1);
    CHECK(res.components[1] == k0);
    REQUIRE(res.residual.has_value());
    CHECK(res.residual->is_zero());
    CHECK(res.kernel_verified);
    // reassembly: K_1 + (mh) K_0 = P
    CHECK(res.components[0] + res.components[1].vector_variable_multiplied() == p);
}

TEST_CASE("graded strategy: zero residual and verified kernels, random inputs") {
    std::mt19937_64 rng(53);
    for (int n = 1; n <= 3; ++n)
        for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
            for (int k = 1; k <= 3; ++k)
                for (int rep = 0; rep < 2; ++rep) {
                    auto p = random_homogeneous(rng, n, k, Rational(1, 2), fam);
                    if (p.is_zero()) continue;
                    auto res = fischer_decompose_dirac(p, "graded");
                    REQUIRE(res.feasible);
                    REQUIRE(res.residual.has_value());
                    CHECK(res.residual->is_zero());
                    CHECK(res.kernel_verified);
                    CHECK(res.components.size() == static_cast<size_t>(k) + 1);
                }
}

TEST_CASE("exact strategy is honestly infeasible at k >= 2 but solvable at k <= 1") {
    Rational h(1);
    for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
        LatticePolynomial p1(2, h, fam);
        p1.add_term(MultiIndex{1, 0}, CliffordElement::scalar(2, Rational(1)));
        CHECK(fischer_decompose_exact(
                  p1, [fam](const LatticePolynomial& q) { return dirac(q, matched_op(fam)); },
                  1, detail::vector_lift())
                  .feasible);
        LatticePolynomial p2(2, h, fam);
        p2.add_term(MultiIndex{2, 0}, CliffordElement::scalar(2, Rational(1)));
        auto res = fischer_decompose_exact(
            p2, [fam](const LatticePolynomial& q) { return dirac(q, matched_op(fam)); }, 1,
            detail::vector_lift());
        CHECK_FALSE(res.feasible);
        CHECK_FALSE(res.diagnostics.empty());
        // and the dispatcher falls back to the graded strategy
        auto dispatched = fischer_decompose_dirac(p2, "auto");
        CHECK(dispatched.strategy == "graded");
        CHECK(dispatched.feasible);
    }
}

TEST_CASE("Laplacian decomposition: graded residual vanishes") {
    std::mt19937_64 rng(59);
    for (int n = 2; n <= 3; ++n)
        for (int k = 2; k <= 4; ++k) {
            auto p = random_homogeneous(rng, n, k, Rational(1), FamilySign::Minus);
            if (p.is_zero()) continue;
            auto res = fischer_decompose_laplacian(p, "graded");
            REQUIRE(res.feasible);
            CHECK(res.residual->is_zero());
            // kernel_verified is honestly false in general: the star Laplacian
            // mixes mismatched partials, so a top-grade harmonic piece need not
            // be harmonic in full. The Dirac tower (matched partials, exactly
            // graded) does verify; see the graded-strategy case above.
        }
}

TEST_CASE("monogenic/(mh)-lift orthogonality holds in the top grade") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto cert = orthogonality_certificate(k, n, Rational(1, 2), FamilySign::Minus);
            CHECK(cert.top_grade_orthogonal);
        }
}

TEST_CASE("quaternion: Laplacian factorization through the two mixed Diracs") {
    std::mt19937_64 rng(61);
    for (const Rational& h : kMeshes)
        for (MixedVariant v : {MixedVariant::MinusPlus, MixedVariant::PlusMinus}) {
            FamilySign fam = mixed_family(v);
            MixedVariant w =
                v == MixedVariant::MinusPlus ? MixedVariant::PlusMinus : MixedVariant::MinusPlus;
            for (int k = 0; k <= 3; ++k)
                for (int rep = 0; rep < 3; ++rep) {
                    auto f = random_qpoly(rng, k, h, fam);
                    // -D^{-/+} D^{+/-} = Delta_h componentwise
                    auto lhs = Rational(-1) * mixed_dirac(mixed_dirac(f, v), w);
                    CHECK(lhs == laplacian_q(f));
                }
        }
}

TEST_CASE("quaternion: mixed Dirac block form equals the 4x4 matrix transcription") {
    std::mt19937_64 rng(67);
    for (MixedVariant v : {MixedVariant::MinusPlus, MixedVariant::PlusMinus})
        for (int k = 0; k <= 3; ++k) {
            auto f = random_qpoly(rng, k, Rational(1, 2), mixed_family(v));
            CHECK(mixed_dirac(f, v) == mixed_dirac_block(f, v));
        }
}

TEST_CASE("quaternion: div/curl calculus against the matrix rows") {
    std::mt19937_64 rng(71);
    for (MixedVariant v : {MixedVariant::MinusPlus, MixedVariant::PlusMinus}) {
        FamilySign fam = mixed_family(v);
        OpSign scalar_op = v == MixedVariant::MinusPlus ? OpSign::Backward : OpSign::Forward;
        OpSign vector_op = v == MixedVariant::MinusPlus ? OpSign::Forward : OpSign::Backward;
        for (int rep = 0; rep < 5; ++rep) {
            auto f = random_qpoly(rng, 2, Rational(1, 2), fam);
            auto img = mixed_dirac(f, v);
            // scalar row: -div of the vector part
            CHECK(img.component(0) == Rational(-1) * div_h(f, scalar_op));
            // vector rows: grad of the scalar part + curl of the vector part
            auto g = grad_h(f.component(0), scalar_op);
            auto c = curl_h(f, vector_op);
            for (int i = 1; i <= 3; ++i)
                CHECK(img.component(i) == g[static_cast<size_t>(i - 1)] +
                                              c[static_cast<size_t>(i - 1)]);
        }
    }
}

TEST_CASE("quaternion: corrected Gamma identity (mh)D = -(E + Gamma)") {
    std::mt19937_64 rng(73);
    for (MixedVariant v : {MixedVariant::MinusPlus, MixedVariant::PlusMinus})
        for (int k = 0; k <= 3; ++k)
            for (int rep = 0; rep < 3; ++rep) {
                auto f = random_qpoly(rng, k, Rational(1), mixed_family(v));
                auto lhs = mh_multiplied(mixed_dirac(f, v));
                auto rhs = Rational(-1) * (mixed_euler(f, v) +
                                           mixed_gamma(f, v, GammaReading::Corrected));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("quaternion: mixed monogenic kernel dimensions 4, 8, 9 for k = 0, 1, 2") {
    // sources have 4*C(k+2,2) coordinates: 4, 12, 24; frozen kernel dimensions
    const size_t expect[] = {4, 8, 9};
    for (MixedVariant v : {MixedVariant::MinusPlus, MixedVariant::PlusMinus})
        for (int k = 0; k <= 2; ++k) {
            auto kern = mixed_monogenic_kernel(k, Rational(1, 2), v);
            CHECK(kern.elements.size() == expect[k]);
            for (const auto& e : kern.elements) CHECK(mixed_dirac(e, v).is_zero());
        }
}

TEST_CASE("quaternion: mixed Dirac is not graded (closure violation exists at k = 2)") {
    for (MixedVariant v : {MixedVariant::MinusPlus, MixedVariant::PlusMinus}) {
        auto op = [v](const QuaternionLatticePolynomial& q) { return mixed_dirac(q, v); };
        CHECK(graded_closure_violation(op, 2, Rational(1, 2), mixed_family(v)).has_value());
        CHECK_FALSE(graded_closure_violation(op, 1, Rational(1, 2), mixed_family(v))
                        .has_value());
    }
}

TEST_CASE("quaternion Fischer decomposition: zero residual on random inputs") {
    std::mt19937_64 rng(79);
    for (MixedVariant v : {MixedVariant::MinusPlus, MixedVariant::PlusMinus})
        for (int k = 1; k <= 3; ++k) {
            auto f = random_qpoly(rng, k, Rational(1, 2), mixed_family(v));
            auto res = quaternion_fischer_decompose(f, v, "auto");
            REQUIRE(res.feasible);
            REQUIRE(res.residual.has_value());
            CHECK(res.residual->is_zero());
        }
}
