#pragma once

// The claim registry: a catalogue of the library's numbered identities and
// structural assertions, each encoded as an exact machine check over a
// deterministic enumeration grid. Claims carry an expectation:
//
//   expected-exact    the identity should hold on every grid cell; a single
//                     counterexample is a registry failure (nonzero exit).
//   hypothesis        a printed statement under adjudication; the registry
//                     reports confirmed/refuted with a reproducible witness
//                     and neither outcome fails the run.
//   negative-witness  the claim asserts a NON-identity; it is confirmed by
//                     exhibiting a concrete witness of the inequality.
//
// Every check uses rational arithmetic only; a claim whose prerequisites
// throw (e.g. a span/closure error) reports infeasible with the diagnostic
// instead of aborting the run.

#include "dcl/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dcl {

enum class Expectation { ExpectedExact, Hypothesis, NegativeWitness };
enum class ClaimStatus { Confirmed, Refuted, Infeasible };

inline const char* expectation_name(Expectation e) {
    switch (e) {
        case Expectation::ExpectedExact: return "expected-exact";
        case Expectation::Hypothesis: return "hypothesis";
        case Expectation::NegativeWitness: return "negative-witness";
    }
    return "?";
}

inline const char* claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Confirmed: return "confirmed";
        case ClaimStatus::Refuted: return "refuted";
        case ClaimStatus::Infeasible: return "infeasible";
    }
    return "?";
}

// A concrete counterexample (for refuted identities) or exhibit (for
// confirmed negative-witness claims): the grid cell, the serialized input,
// and both sides of the comparison, reproducible from the payload alone.
struct ClaimWitness {
    std::string cell;
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct ClaimReport {
    std::string id;
    std::string statement;
    Expectation expectation = Expectation::ExpectedExact;
    ClaimStatus status = ClaimStatus::Infeasible;
    long cells = 0;  // grid cells actually evaluated
    std::optional<ClaimWitness> witness;
    std::string diagnostic;

    // An expected-exact claim must confirm; a negative-witness claim must
    // produce its witness; hypotheses are informative either way.
    bool acceptable() const {
        if (expectation == Expectation::Hypothesis) return status != ClaimStatus::Infeasible;
        return status == ClaimStatus::Confirmed;
    }
};

struct RegistryOptions {
    std::vector<int> dimensions = {1, 2, 3};
    int max_degree = 4;
    std::vector<Rational> meshes = {Rational(1), Rational(1, 2), Rational(1, 4)};
    int samples = 25;  // random polynomials per grid cell
    std::uint64_t seed = 0;
    std::string filter;  // claim id, or prefix glob like "Eq2*"; empty = all
};

struct RegistryReport {
    std::vector<ClaimReport> claims;
    std::uint64_t seed = 0;
    std::string version;

    bool all_expected_exact_confirmed() const {
        for (const auto& c : claims)
            if (c.expectation == Expectation::ExpectedExact && c.status != ClaimStatus::Confirmed)
                return false;
        return true;
    }
    int exit_code() const { return all_expected_exact_confirmed() ? 0 : 1; }

    std::string text() const;
    nlohmann::json json() const;
};

struct ClaimInfo {
    std::string id;
    std::string statement;
    Expectation expectation;
};

// The full catalogue (id, statement, expectation), in report order.
std::vector<ClaimInfo> list_claims();

// Evaluates every claim matching options.filter on its grid. Deterministic:
// each claim draws from a generator seeded with options.seed xor a hash of
// the claim id, so reports are byte-identical for identical options.
RegistryReport run_registry(const RegistryOptions& options = RegistryOptions());

}  // namespace dcl
