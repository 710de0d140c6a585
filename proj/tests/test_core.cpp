// Core exact-arithmetic suite: Clifford algebra, factorial bases, Stirling
// conversions, and the first-order difference operators, checked against the
// pointwise stencil oracle and frozen hand-derived values.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcl/factorial.hpp"
#include "dcl/io.hpp"
#include "dcl/operators.hpp"
#include "dcl/polynomial.hpp"
#include "dcl/stirling.hpp"
#include "oracle.hpp"

#include <random>

using namespace dcl;

namespace {

LatticePolynomial random_poly(std::mt19937_64& rng, int n, int max_deg, const Rational& h,
                              FamilySign fam) {
    LatticePolynomial p(n, h, fam);
    for (int t = 0; t < 4; ++t) {
        int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        auto alphas = MultiIndex::all_of_degree(n, deg);
        const MultiIndex& a = alphas[rng() % alphas.size()];
        Blade b = static_cast<Blade>(rng() % (1u << n));
        long c = static_cast<long>(rng() % 9) - 4;
        p.add_term(a, CliffordElement::basis_blade(n, b, Rational(c == 0 ? 1 : c)));
    }
    return p;
}

const std::vector<Rational> kMeshes = {Rational(1), Rational(1, 2), Rational(1, 4)};

}  // namespace

TEST_CASE("Clifford generators anticommute and square to -1") {
    int n = 3;
    for (int i = 1; i <= n; ++i) {
        auto ei = CliffordElement::generator(n, i);
        CHECK(ei * ei == CliffordElement::scalar(n, Rational(-1)));
        for (int j = i + 1; j <= n; ++j) {
            auto ej = CliffordElement::generator(n, j);
            CHECK(ei * ej == Rational(-1) * (ej * ei));
        }
    }
}

TEST_CASE("Clifford conjugation is an anti-automorphism") {
    std::mt19937_64 rng(7);
    int n = 3;
    for (int rep = 0; rep < 50; ++rep) {
        CliffordElement a(n), b(n);
        for (int t = 0; t < 3; ++t) {
            a.add(static_cast<Blade>(rng() % 8), Rational(static_cast<long>(rng() % 7) - 3));
            b.add(static_cast<Blade>(rng() % 8), Rational(static_cast<long>(rng() % 7) - 3));
        }
        CHECK((a * b).conjugate() == b.conjugate() * a.conjugate());
    }
}

TEST_CASE("multi-index enumeration has the multiset dimension") {
    // dim Pi_k (scalar coefficients) = C(k+n-1, n-1)
    CHECK(MultiIndex::all_of_degree(2, 4).size() == 5);
    CHECK(MultiIndex::all_of_degree(3, 4).size() == 15);
    CHECK(MultiIndex::all_of_degree(1, 0).size() == 1);
}

TEST_CASE("Stirling numbers match frozen table values") {
    // unsigned first kind: c(4,2) = 11; second kind: S(4,2) = 7
    CHECK(stirling_first().at(4, 2) == 11);
    CHECK(stirling_second().at(4, 2) == 7);
    CHECK(stirling_first().at(6, 3) == 225);
    CHECK(stirling_second().at(6, 3) == 90);
    CHECK(stirling_first().at(5, 5) == 1);
    CHECK(stirling_second().at(5, 0) == 0);
}

TEST_CASE("factorial powers equal their defining products pointwise") {
    for (const Rational& h : kMeshes)
        for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
            Rational sign(fam == FamilySign::Minus ? -1 : 1);
            for (int s = 0; s <= 5; ++s)
                for (long m = -4; m <= 4; ++m) {
                    Rational x = Rational(m) * h;
                    Rational expect(1);
                    for (int k = 0; k < s; ++k) expect = expect * (x + sign * Rational(k) * h);
                    CHECK(factorial_power_eval(s, fam, h, x) == expect);
                }
        }
}

TEST_CASE("frozen factorial values") {
    // (m_1h)^{(2)}_- at h=1, m=3: 3*2 = 6
    CHECK(factorial_power_eval(2, FamilySign::Minus, Rational(1), Rational(3)) == Rational(6));
    // rising family at h=1/2, m=3 (x=3/2), s=2: (3/2)(3/2+1/2) = 3
    CHECK(factorial_power_eval(2, FamilySign::Plus, Rational(1, 2), Rational(3, 2)) ==
          Rational(3));
}

TEST_CASE("monomial<->factorial round trip is the identity for |alpha| <= 6") {
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : {Rational(1), Rational(1, 2), Rational(1, 3)})
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
                int kmax = n == 3 ? 4 : 6;  // n=3, k<=4 keeps the suite fast; 1d/2d go to 6
                for (int k = 0; k <= kmax; ++k)
                    for (const auto& alpha : MultiIndex::all_of_degree(n, k)) {
                        // factorial -> monomial -> factorial
                        std::map<MultiIndex, Rational> acc;
                        for (const auto& [beta, c] : factorial_to_monomial(alpha, fam, h))
                            for (const auto& [gamma, d] : monomial_to_factorial(beta, fam, h))
                                acc[gamma] += c * d;
                        std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
                        REQUIRE(acc.size() == 1);
                        CHECK(acc.begin()->first == alpha);
                        CHECK(acc.begin()->second == Rational(1));
                    }
            }
}

TEST_CASE("1d monomial<->factorial round trip to degree 6 at h = 1/3") {
    for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
        for (int s = 0; s <= 6; ++s) {
            auto down = factorial_to_monomial_1d(s, fam, Rational(1, 3));
            // recompose x^{(s)} from monomials and members of the inverse table
            std::vector<Rational> acc(static_cast<size_t>(s) + 1, Rational(0));
            for (int k = 0; k <= s; ++k) {
                auto up = monomial_to_factorial_1d(k, fam, Rational(1, 3));
                for (int j = 0; j <= k; ++j)
                    acc[static_cast<size_t>(j)] += down[static_cast<size_t>(k)] *
                                                   up[static_cast<size_t>(j)];
            }
            for (int j = 0; j <= s; ++j)
                CHECK(acc[static_cast<size_t>(j)] == (j == s ? Rational(1) : Rational(0)));
        }
}

TEST_CASE("partial differences agree with the two-point stencil oracle") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int rep = 0; rep < 5; ++rep) {
                    auto f = random_poly(rng, n, 3, h, fam);
                    auto fe = oracle::eval_fn(f);
                    for (OpSign op : {OpSign::Forward, OpSign::Backward})
                        for (int i = 1; i <= n; ++i) {
                            auto img = partial(f, i, op);
                            for (const auto& m : oracle::box(n, n == 3 ? 1 : 2))
                                CHECK(img.evaluate(oracle::scale(m, h)) ==
                                      oracle::partial_at(fe, m, i, op, h));
                        }
                }
}

TEST_CASE("matched partial acts diagonally on factorial powers (P2)") {
    for (const Rational& h : kMeshes)
        for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
            OpSign op = matched_op(fam);
            for (int s = 1; s <= 4; ++s) {
                auto mono = LatticePolynomial::monomial(MultiIndex{s}, h, fam,
                                                        CliffordElement::scalar(1, Rational(1)));
                auto expect = Rational(s) * LatticePolynomial::monomial(
                                                MultiIndex{s - 1}, h, fam,
                                                CliffordElement::scalar(1, Rational(1)));
                CHECK(partial(mono, 1, op) == expect);
            }
        }
}

TEST_CASE("frozen: mismatched partial of (m_1h)^{(2)}_- at h=1 is 2x^{(1)} - 2h") {
    Rational h(1);
    auto mono = LatticePolynomial::monomial(MultiIndex{2}, h, FamilySign::Minus,
                                            CliffordElement::scalar(1, Rational(1)));
    auto img = partial(mono, 1, OpSign::Backward);
    // pointwise: 2(x - h) at every lattice point
    for (long m = -4; m <= 4; ++m) {
        Rational x(m);
        CHECK(img.evaluate({x}) == CliffordElement::scalar(1, Rational(2) * (x - h)));
    }
}

TEST_CASE("frozen: lattice shift of (m_1h)^{(2)}_- by -1 at h=1, m=3 gives 2") {
    Rational h(1);
    auto mono = LatticePolynomial::monomial(MultiIndex{2}, h, FamilySign::Minus,
                                            CliffordElement::scalar(1, Rational(1)));
    auto shifted = shift(mono, 1, -1);
    CHECK(shifted.evaluate({Rational(3)}) == CliffordElement::scalar(1, Rational(2)));
}

TEST_CASE("product rules (both placements) hold pointwise") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 2; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int rep = 0; rep < 5; ++rep) {
                    auto f = random_poly(rng, n, 2, h, fam);
                    auto g = random_poly(rng, n, 2, h, fam);
                    auto fe = oracle::eval_fn(f);
                    auto ge = oracle::eval_fn(g);
                    oracle::PointFn prod = [&](const std::vector<long>& m) {
                        return fe(m) * ge(m);
                    };
                    for (OpSign op : {OpSign::Forward, OpSign::Backward})
                        for (int i = 1; i <= n; ++i)
                            for (const auto& m : oracle::box(n)) {
                                long u = op == OpSign::Forward ? 1 : -1;
                                auto ms = m;
                                ms[static_cast<size_t>(i - 1)] += u;
                                auto d = oracle::partial_at(prod, m, i, op, h);
                                auto df = oracle::partial_at(fe, m, i, op, h);
                                auto dg = oracle::partial_at(ge, m, i, op, h);
                                CHECK(d == fe(m) * dg + df * ge(ms));
                                CHECK(d == fe(ms) * dg + df * ge(m));
                            }
                }
}

TEST_CASE("Dirac operator equals its stencil oracle") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int rep = 0; rep < 3; ++rep) {
                    auto f = random_poly(rng, n, 3, h, fam);
                    auto fe = oracle::eval_fn(f);
                    for (OpSign op : {OpSign::Forward, OpSign::Backward}) {
                        auto img = dirac(f, op);
                        for (const auto& m : oracle::box(n, n == 3 ? 1 : 2))
                            CHECK(img.evaluate(oracle::scale(m, h)) ==
                                  oracle::dirac_at(fe, m, n, op, h));
                    }
                }
}

TEST_CASE("star Laplacian equals the 2n+1-point stencil and both partial orders") {
    std::mt19937_64 rng(19);
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int rep = 0; rep < 3; ++rep) {
                    auto f = random_poly(rng, n, 3, h, fam);
                    auto fe = oracle::eval_fn(f);
                    auto lap = laplacian(f);
                    LatticePolynomial fb(n, h, fam), bf(n, h, fam);
                    for (int i = 1; i <= n; ++i) {
                        fb = fb + partial(partial(f, i, OpSign::Forward), i, OpSign::Backward);
                        bf = bf + partial(partial(f, i, OpSign::Backward), i, OpSign::Forward);
                    }
                    CHECK(lap == fb);
                    CHECK(lap == bf);
                    for (const auto& m : oracle::box(n, n == 3 ? 1 : 2))
                        CHECK(lap.evaluate(oracle::scale(m, h)) ==
                              oracle::laplacian_at(fe, m, n, h));
                }
}

TEST_CASE("frozen: A_h^+ on (m_1h)^{(2)}_- gives -2h (m_1h)^{(1)}_-") {
    for (const Rational& h : kMeshes) {
        auto mono = LatticePolynomial::monomial(MultiIndex{2}, h, FamilySign::Minus,
                                                CliffordElement::scalar(1, Rational(1)));
        auto expect = (Rational(-2) * h) *
                      LatticePolynomial::monomial(MultiIndex{1}, h, FamilySign::Minus,
                                                  CliffordElement::scalar(1, Rational(1)));
        CHECK(op_A(mono, OpSign::Forward) == expect);
        // and A kills degree 1
        auto lin = LatticePolynomial::monomial(MultiIndex{1}, h, FamilySign::Minus,
                                               CliffordElement::scalar(1, Rational(1)));
        CHECK(op_A(lin, OpSign::Forward).is_zero());
    }
}

TEST_CASE("Euler operator measures homogeneity; Gamma kills radial scalars at degree 0") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
                OpSign op = matched_op(fam);
                for (int k = 0; k <= 4; ++k) {
                    auto alphas = MultiIndex::all_of_degree(n, k);
                    const MultiIndex& a = alphas[rng() % alphas.size()];
                    auto p = LatticePolynomial::monomial(a, h, fam,
                                                         CliffordElement::scalar(n, Rational(1)));
                    CHECK(euler(p, op) == Rational(k) * p);
                }
                auto c = LatticePolynomial::constant(n, h, fam,
                                                     CliffordElement::scalar(n, Rational(3)));
                CHECK(euler(c, op).is_zero());
                CHECK(gamma_op(c, op).is_zero());
            }
}

TEST_CASE("(mh) D = -(E + Gamma) for the matched pairing") {
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : kMeshes)
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
                OpSign op = matched_op(fam);
                for (int rep = 0; rep < 5; ++rep) {
                    auto f = random_poly(rng, n, 3, h, fam);
                    CHECK(dirac(f, op).vector_variable_multiplied() ==
                          Rational(-1) * (euler(f, op) + gamma_op(f, op)));
                }
            }
}

TEST_CASE("R inverse: frozen degree-1 value and round trips") {
    std::mt19937_64 rng(31);
    for (const Rational& h : kMeshes)
        for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
            OpSign op = matched_op(fam);
            // J_{h,r}((m_1h)^{(1)}) = (m_1h)^{(1)} / (r+1): A vanishes on degree 1
            for (const Rational& r : {Rational(1), Rational(2), Rational(5, 2)}) {
                auto lin = LatticePolynomial::monomial(MultiIndex{1}, h, fam,
                                                       CliffordElement::scalar(1, Rational(1)));
                CHECK(invert_R(lin, op, r) == (Rational(1) / (r + Rational(1))) * lin);
            }
            // random round trips in dimension 2, degree <= 4
            for (int rep = 0; rep < 5; ++rep) {
                auto f = random_poly(rng, 2, 4, h, fam);
                CHECK(op_R(invert_R(f, op, Rational(2)), op, Rational(2)) == f);
                CHECK(invert_R(op_R(f, op, Rational(2)), op, Rational(2)) == f);
            }
        }
}

TEST_CASE("literal summation telescopes; the true inverse fixes constants at r = 1") {
    auto c = LatticePolynomial::constant(2, Rational(1, 2), FamilySign::Minus,
                                         CliffordElement::scalar(2, Rational(5)));
    CHECK(invert_R(c, OpSign::Forward, Rational(1)) == c);
    // The printed summation telescopes to g(1) - g(0); at r = 1 both boundary
    // weights are the empty product, so constants map to 0, not to themselves.
    CHECK(eval_J_summation(c, OpSign::Forward, Rational(1), {Rational(1), Rational(1)})
              .is_zero());
    // On inputs vanishing at the origin the boundary term drops: the summation
    // reproduces f(mh) itself at r = 1 (still not the inverse, which divides by 2).
    auto lin = LatticePolynomial::monomial(MultiIndex{1}, Rational(1, 4), FamilySign::Minus,
                                           CliffordElement::scalar(1, Rational(1)));
    CHECK(eval_J_summation(lin, OpSign::Forward, Rational(1), {Rational(1)}) ==
          CliffordElement::scalar(1, Rational(1)));
    CHECK(invert_R(lin, OpSign::Forward, Rational(1)).evaluate({Rational(1)}) ==
          CliffordElement::scalar(1, Rational(1, 2)));
    // the zero polynomial maps to zero either way
    LatticePolynomial z(2, Rational(1, 2), FamilySign::Minus);
    CHECK(eval_J_summation(z, OpSign::Forward, Rational(2), {Rational(1), Rational(0)})
              .is_zero());
}

TEST_CASE("homogeneous powers: frozen H_s actions") {
    for (const Rational& h : kMeshes)
        for (int n = 2; n <= 3; ++n) {
            FamilySign fam = FamilySign::Minus;  // the '+' operator family pairing
            OpSign op = matched_op(fam);
            auto H0 = homogeneous_power(0, n, h, fam);
            auto H1 = homogeneous_power(1, n, h, fam);
            auto H2 = homogeneous_power(2, n, h, fam);
            CHECK(op_C(H1, op) == H2);
            CHECK(dirac(H2, op) == Rational(-2) * H1);           // even s: -s
            CHECK(dirac(H1, op) == Rational(-n) * H0);           // odd s: -(n+s-1)
            CHECK(euler(H2, op) == Rational(2) * H2);
        }
}

TEST_CASE("operator name parsing round trips through apply") {
    Rational h(1, 2);
    auto p = LatticePolynomial::monomial(MultiIndex{2, 0}, h, FamilySign::Minus,
                                         CliffordElement::scalar(2, Rational(1)));
    CHECK(DifferenceOperator::parse("dh+").apply(p) == dirac(p, OpSign::Forward));
    CHECK(DifferenceOperator::parse("lap").apply(p) == laplacian(p));
    CHECK(DifferenceOperator::parse("euler+").apply(p) == euler(p, OpSign::Forward));
    CHECK(DifferenceOperator::parse("A+").apply(p) == op_A(p, OpSign::Forward));
    CHECK(DifferenceOperator::parse("R+:3/2").apply(p) ==
          op_R(p, OpSign::Forward, Rational(3, 2)));
    CHECK(DifferenceOperator::parse("V-:1").apply(p) == op_V(p, OpSign::Backward, Rational(1)));
    CHECK(DifferenceOperator::parse("d+:1").apply(p) == partial(p, 1, OpSign::Forward));
    CHECK(DifferenceOperator::parse("shift:-2").apply(p) == shift(p, 2, -1));
    CHECK_THROWS(DifferenceOperator::parse("bogus"));
}
