// Acceptance gate: one pass/fail line per criterion, exit nonzero if any
// criterion fails. Criteria are computed faithfully; two are red by honest
// refutation (the literal intertwining relations and the odd-degree Dirac
// action fail, and the coarse-mesh contraction ratio for s >= 3 starts at
// 8/5), and this binary reports them red rather than weakening the checks.

#include "dcl/claims.hpp"
#include "dcl/fischer.hpp"
#include "dcl/io.hpp"
#include "dcl/quaternion.hpp"
#include "dcl/stirling.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

using namespace dcl;

namespace {

int g_failures = 0;

void report(int num, bool pass, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << num << ": " << (pass ? "pass" : "FAIL") << " - " << what
              << "\n";
    if (!detail.empty()) std::cout << detail;
    if (!pass) ++g_failures;
}

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

// ---------------------------------------------------------------------------

void criterion1(const RegistryReport& rep, double registry_seconds) {
    // Exact core suite, delegated to the registry claims that encode exactly
    // these identities over n <= 3, k <= 4, h in {1, 1/2, 1/4}, both signs.
    const char* ids[] = {"Eq2",        "Eq3",
                         "P1",         "P2",
                         "P3",         "Lemma3.1",
                         "Lemma3.2",   "Eq8",
                         "Eq10",       "EulerEigen",
                         "GammaEigen", "DiracEuler",
                         "DiracVectorVariable",
                         "Eq18",       "Eq19",
                         "RInvertible",  // J o R = R o J = I for the true inverse
                         "HomoC",      "HomoD",
                         "HomoE",      "Eq38",
                         "DivCurl",    "CurlGrad",
                         "CurlCurl",   "Eq41"};
    std::string failing;
    for (const auto& c : rep.claims)
        for (const char* id : ids)
            if (c.id == id && c.status != ClaimStatus::Confirmed)
                failing += std::string("    refuted sub-item: ") + id + "\n";
    bool in_time = registry_seconds < 300.0;
    if (!in_time) failing += "    registry runtime exceeded 5 minutes\n";
    report(1, failing.empty() && in_time,
           "exact core suite (product rules through Eq41) 100% exact on the grid", failing);
}

void criterion2() {
    bool ok = true;
    for (int n = 1; n <= 3 && ok; ++n)
        for (const Rational& h : {Rational(1), Rational(1, 2), Rational(1, 3)})
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int k = 0; k <= 6 && ok; ++k)
                    for (const auto& alpha : MultiIndex::all_of_degree(n, k)) {
                        std::map<MultiIndex, Rational> acc;
                        for (const auto& [beta, c] : factorial_to_monomial(alpha, fam, h))
                            for (const auto& [gamma, d] : monomial_to_factorial(beta, fam, h))
                                acc[gamma] += c * d;
                        std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
                        if (acc.size() != 1 || acc.begin()->first != alpha ||
                            acc.begin()->second != Rational(1)) {
                            ok = false;
                            break;
                        }
                    }
    // printed Stirling statement, verbatim at h = 1
    for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus}) {
        int fsign = fam == FamilySign::Minus ? -1 : 1;
        for (int s = 0; s <= 6; ++s)
            for (long m = -4; m <= 4; ++m) {
                Rational x(m), sum1(0), sum2(0), xk(1);
                for (int k = 0; k <= s; ++k) {
                    Rational S(mpq_class(stirling_first().at(s, k)));
                    Rational T(mpq_class(stirling_second().at(s, k)));
                    if ((s - k) % 2 == 1) {
                        S = Rational(fsign) * S;
                        T = Rational(-fsign) * T;
                    }
                    sum1 = sum1 + S * xk;
                    sum2 = sum2 + T * factorial_power_eval(k, fam, Rational(1), x);
                    xk = xk * x;
                }
                if (factorial_power_eval(s, fam, Rational(1), x) != sum1) ok = false;
                Rational mono(1);
                for (int t = 0; t < s; ++t) mono = mono * x;
                if (mono != sum2) ok = false;
            }
    }
    // h-scaled correction: the 1d conversion tables are mutually inverse
    // change-of-basis data at every mesh, verified by evaluation
    for (const Rational& h : {Rational(1), Rational(1, 2), Rational(1, 3)})
        for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
            for (int s = 0; s <= 6; ++s) {
                auto to_mono = factorial_to_monomial_1d(s, fam, h);
                auto to_fact = monomial_to_factorial_1d(s, fam, h);
                for (long m = -4; m <= 4; ++m) {
                    Rational x = Rational(m) * h, sum1(0), sum2(0), xk(1);
                    for (int k = 0; k <= s; ++k) {
                        sum1 = sum1 + to_mono[static_cast<size_t>(k)] * xk;
                        sum2 = sum2 + to_fact[static_cast<size_t>(k)] *
                                          factorial_power_eval(k, fam, h, x);
                        xk = xk * x;
                    }
                    if (factorial_power_eval(s, fam, h, x) != sum1) ok = false;
                    Rational mono(1);
                    for (int t = 0; t < s; ++t) mono = mono * x;
                    if (mono != sum2) ok = false;
                }
            }
    report(2, ok, "monomial<->factorial round trip identity and Stirling statements");
}

void criterion3() {
    // deviation of the factorial power from the monomial at x = 1 must halve
    // (ratio within [1.8, 2.2]) with each mesh halving, h = 2^-1 .. 2^-6.
    std::string detail;
    bool ok = true;
    for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
        for (int s = 0; s <= 4; ++s) {
            std::vector<Rational> dev;
            Rational h(1, 2);
            for (int e = 1; e <= 6; ++e, h = h / Rational(2)) {
                Rational d = factorial_power_eval(s, fam, h, Rational(1)) - Rational(1);
                if (d.sign() < 0) d = -d;
                dev.push_back(d);
            }
            for (size_t i = 0; i + 1 < dev.size(); ++i) {
                if (dev[i].is_zero() && dev[i + 1].is_zero()) continue;  // s <= 1: exact
                if (dev[i + 1].is_zero()) {
                    ok = false;
                    continue;
                }
                Rational ratio = dev[i] / dev[i + 1];
                // within [9/5, 11/5]?
                if ((ratio - Rational(9, 5)).sign() < 0 ||
                    (Rational(11, 5) - ratio).sign() < 0) {
                    ok = false;
                    std::ostringstream os;
                    os << "    family " << (fam == FamilySign::Minus ? '-' : '+') << " s=" << s
                       << " h=1/" << (2L << i) << ": ratio " << ratio.str() << " ("
                       << ratio.to_double() << ") outside [1.8, 2.2]\n";
                    detail += os.str();
                }
            }
        }
    report(3, ok, "factorial-power deviation at x=1 contracts by ~2 per mesh halving",
           detail);
}

void criterion4() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 3; ++n)
        for (const Rational& h : {Rational(1), Rational(1, 2), Rational(1, 4)})
            for (FamilySign fam : {FamilySign::Minus, FamilySign::Plus})
                for (int k = 1; k <= 4; ++k) {
                    auto kb = monogenic_kernel(k, n, h, fam);
                    size_t full = static_cast<size_t>(binom(k + n - 1, n - 1)) << n;
                    if (kb.elements.size() + kb.operator_rank != full) ok = false;
                    OpSign op = matched_op(fam);
                    for (const auto& e : kb.elements)
                        if (!dirac(e, op).is_zero()) ok = false;
                }
    auto kb = monogenic_kernel(1, 2, Rational(1), FamilySign::Minus);
    if (kb.elements.size() != 4) ok = false;
    LatticePolynomial hand(2, Rational(1), FamilySign::Minus);
    hand.add_term(MultiIndex{1, 0}, CliffordElement::scalar(2, Rational(1, 2)));
    hand.add_term(MultiIndex{0, 1},
                  CliffordElement::basis_blade(2, Blade{0b11}, Rational(-1, 2)));
    // membership: D annihilates it and the kernel solve must express it
    if (!dirac(hand, OpSign::Forward).is_zero()) ok = false;
    report(4, ok, "kernel accounting: rank-nullity, exact annihilation, n=2 k=1 hand element");
}

void criterion5() {
    std::mt19937_64 rng(0);
    bool ok = true;
    std::string detail;
    std::map<std::string, std::pair<int, int>> exact_by_cell;  // cell -> (feasible, total)
    int runs = 0;
    while (runs < 100) {
        int n = 1 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 4);
        Rational h = std::vector<Rational>{Rational(1), Rational(1, 2),
                                           Rational(1, 4)}[rng() % 3];
        FamilySign fam = rng() % 2 ? FamilySign::Minus : FamilySign::Plus;
        auto p = random_homogeneous(rng, n, k, h, fam);
        if (p.is_zero()) continue;
        ++runs;
        auto res = fischer_decompose_dirac(p, "auto");
        OpSign op = matched_op(fam);
        if (!res.feasible || !res.residual || !res.residual->is_zero()) ok = false;
        for (const auto& comp : res.components)
            if (!dirac(comp, op).is_zero()) ok = false;
        std::string cell = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        auto& cnt = exact_by_cell[cell];
        if (res.strategy == "exact") ++cnt.first;
        ++cnt.second;
    }
    // the hand-verified case
    LatticePolynomial p(2, Rational(1), FamilySign::Minus);
    p.add_term(MultiIndex{1, 0}, CliffordElement::scalar(2, Rational(1)));
    auto res = fischer_decompose_dirac(p, "auto");
    LatticePolynomial m1(2, Rational(1), FamilySign::Minus);
    m1.add_term(MultiIndex{1, 0}, CliffordElement::scalar(2, Rational(1, 2)));
    m1.add_term(MultiIndex{0, 1},
                CliffordElement::basis_blade(2, Blade{0b11}, Rational(-1, 2)));
    LatticePolynomial m0(2, Rational(1), FamilySign::Minus);
    m0.add_term(MultiIndex{0, 0}, CliffordElement::basis_blade(2, Blade{0b01}, Rational(-1, 2)));
    if (!(res.feasible && res.components.size() == 2 && res.components[0] == m1 &&
          res.components[1] == m0))
        ok = false;
    for (const auto& [cell, cnt] : exact_by_cell)
        detail += "    exact strategy feasible: " + cell + ": " +
                  std::to_string(cnt.first) + "/" + std::to_string(cnt.second) + "\n";
    report(5, ok, "decomposition contract on 100 random inputs plus the hand case", detail);
}

void criterion6() {
    std::mt19937_64 rng(0);
    bool ok = true;
    std::string detail;
    // Eq41 factorization, 100 random quaternion polynomials
    for (int rep = 0; rep < 100; ++rep) {
        MixedVariant v = rng() % 2 ? MixedVariant::MinusPlus : MixedVariant::PlusMinus;
        MixedVariant w =
            v == MixedVariant::MinusPlus ? MixedVariant::PlusMinus : MixedVariant::MinusPlus;
        Rational h = std::vector<Rational>{Rational(1), Rational(1, 2)}[rng() % 2];
        auto f = random_qpoly(rng, static_cast<int>(rng() % 4), h, mixed_family(v));
        if (!(Rational(-1) * mixed_dirac(mixed_dirac(f, v), w) == laplacian_q(f))) ok = false;
    }
    // one-sided non-factorization: a stored counterexample where the
    // same-sign composition D∘D misses -Delta
    bool found = false;
    for (int k = 0; k <= 3 && !found; ++k)
        for (const auto& alpha : MultiIndex::all_of_degree(2, k)) {
            LatticePolynomial f(2, Rational(1), FamilySign::Minus);
            f.add_term(alpha, CliffordElement::scalar(2, Rational(1)));
            auto lhs = dirac(dirac(f, OpSign::Forward), OpSign::Backward);
            if (!(lhs == -laplacian(f))) {
                found = true;
                detail += "    counterexample: f = " + print_polynomial(f) +
                          ", D-D+ f = " + print_polynomial(lhs) +
                          ", -lap f = " + print_polynomial(-laplacian(f)) + "\n";
                break;
            }
        }
    if (!found) ok = false;
    // surviving Gamma transcription: (mh)D + E + Gamma = 0 on 50 random inputs
    for (int rep = 0; rep < 50; ++rep) {
        MixedVariant v = rng() % 2 ? MixedVariant::MinusPlus : MixedVariant::PlusMinus;
        auto f = random_qpoly(rng, static_cast<int>(rng() % 4), Rational(1, 2),
                              mixed_family(v));
        auto zero = mh_multiplied(mixed_dirac(f, v)) + mixed_euler(f, v) +
                    mixed_gamma(f, v, GammaReading::Corrected);
        if (!zero.is_zero()) ok = false;
    }
    report(6, ok, "quaternionic suite: factorization, stored gap counterexample, Gamma",
           detail);
}

void criterion7(const RegistryReport& rep) {
    bool ok = rep.claims.size() >= 45;
    RegistryOptions opt;
    auto again = run_registry(opt);
    if (again.text() != rep.text() || again.json().dump() != rep.json().dump()) ok = false;
    bool saw_refuted_hypothesis = false;
    for (const auto& c : rep.claims) {
        if (c.status == ClaimStatus::Refuted) {
            saw_refuted_hypothesis = true;
            if (c.expectation != Expectation::NegativeWitness && !c.witness) ok = false;
        }
    }
    if (!saw_refuted_hypothesis) ok = false;
    // the pinned Eq24 witness
    bool eq24 = false;
    for (const auto& c : rep.claims)
        if (c.id == "Eq24" && c.status == ClaimStatus::Refuted && c.witness &&
            c.witness->cell == "n=1 h=1 family=- k=2" && c.witness->input == "X1^(2) e0" &&
            c.witness->lhs == "-2 X1^(1) e0" && c.witness->rhs == "X1^(2) e0")
            eq24 = true;
    if (!eq24) ok = false;
    // exit code reflects expected-exact status only
    if (rep.exit_code() != (rep.all_expected_exact_confirmed() ? 0 : 1)) ok = false;
    report(7, ok, "claim registry: coverage, determinism, witnesses, exit semantics");
}

std::string run_command(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

std::string read_file(const std::string& path) {
    FILE* f = fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    fclose(f);
    return out;
}

void criterion8(const std::string& cli, const std::string& golden_dir) {
    std::mt19937_64 rng(0);
    bool ok = true;
    std::string detail;
    for (int rep = 0; rep < 500; ++rep) {
        int n = 1 + static_cast<int>(rng() % 3);
        Rational h(1, 1 + static_cast<long>(rng() % 4));
        FamilySign fam = rng() % 2 ? FamilySign::Minus : FamilySign::Plus;
        LatticePolynomial p(n, h, fam);
        for (int t = 0; t < 3; ++t) {
            int deg = static_cast<int>(rng() % 5);
            auto alphas = MultiIndex::all_of_degree(n, deg);
            long num = static_cast<long>(rng() % 19) - 9;
            p.add_term(alphas[rng() % alphas.size()],
                       CliffordElement::basis_blade(n, static_cast<Blade>(rng() % (1u << n)),
                                                    Rational(num == 0 ? 1 : num,
                                                             1 + static_cast<long>(rng() % 6))));
        }
        if (parse_polynomial(print_polynomial(p), n, h, fam) != p) ok = false;
        if (polynomial_from_json(to_json(p)) != p) ok = false;
    }
    if (cli.empty() || golden_dir.empty()) {
        ok = false;
        detail += "    golden transcripts not exercised (usage: acceptance CLI GOLDEN_DIR)\n";
    } else {
        const std::pair<const char*, std::string> transcripts[] = {
            {"decompose.txt",
             " decompose --n 2 --h 1 --family - --expr \"X1^(1) e0\" --format json 2>&1"},
            {"verify.txt", " verify --filter \"Eq4*\" 2>&1"},
            {"eval.txt",
             " eval --expr \"X1^(2) e0\" --at 3 --h 1 --n 1 --family - 2>&1"},
        };
        for (const auto& [file, args] : transcripts) {
            std::string want = read_file(golden_dir + "/" + file);
            std::string got = run_command(cli + args);
            if (want.empty() || want != got) {
                ok = false;
                detail += std::string("    transcript mismatch: ") + file + "\n";
            }
        }
    }
    report(8, ok, "round trips on 500 random polynomials; golden transcripts byte-stable",
           detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::string golden = argc > 2 ? argv[2] : "";

    auto t0 = std::chrono::steady_clock::now();
    RegistryOptions opt;
    RegistryReport rep = run_registry(opt);
    double registry_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    criterion1(rep, registry_seconds);
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(rep);
    criterion8(cli, golden);

    std::cout << (g_failures ? "acceptance: " + std::to_string(g_failures) +
                                   " criterion(s) failed\n"
                             : "acceptance: all criteria passed\n");
    return g_failures ? 1 : 0;
}
