#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "noether/io.hpp"

namespace noether {

/// Tolerances and budgets shared by the acceptance suites.
namespace tolerance {
inline constexpr double kGramEigenvalue = 1e-8;   // minimum Gram eigenvalue
inline constexpr double kConjugation = 1e-12;     // conjugation invariance
inline constexpr double kIdentity = 1e-12;        // phi(e) = 1
inline constexpr double kSchur = 1e-9;            // central multiplicativity
inline constexpr double kFourier = 1e-9;          // Fourier transform identities
inline constexpr double kOrthogonality = 1e-6;    // character orthogonality
}  // namespace tolerance

struct SuiteConfig {
    std::uint64_t seed = 7;
};

struct SuiteOutcome {
    int id = 0;
    std::string name;
    bool pass = false;
    double budget_seconds = 0;
    Json report;  // deterministic: no timings
};

struct Suite {
    int id;
    std::string name;
    double budget_seconds;
    std::function<SuiteOutcome(const SuiteConfig&)> run;
};

/// Criteria 1-12 in order.
const std::vector<Suite>& acceptance_suites();

SuiteOutcome suite_depth_examples(const SuiteConfig& cfg);
SuiteOutcome suite_colon_identities(const SuiteConfig& cfg);
SuiteOutcome suite_depth_lattice(const SuiteConfig& cfg);
SuiteOutcome suite_measure_classification(const SuiteConfig& cfg);
SuiteOutcome suite_invariant_subgroups(const SuiteConfig& cfg);
SuiteOutcome suite_fourier_haar(const SuiteConfig& cfg);
SuiteOutcome suite_center_words(const SuiteConfig& cfg);
SuiteOutcome suite_tits(const SuiteConfig& cfg);
SuiteOutcome suite_center_of_quotient(const SuiteConfig& cfg);
SuiteOutcome suite_normal_form(const SuiteConfig& cfg);
SuiteOutcome suite_commutators(const SuiteConfig& cfg);
SuiteOutcome suite_character_round_trip(const SuiteConfig& cfg);

/// Random polynomial with at most `terms` terms, total degree <= deg and
/// coefficients in [-coeff, coeff].
Polynomial random_polynomial(std::mt19937_64& rng, const RingPresentation& ring, unsigned terms, unsigned deg,
                             long coeff);
/// Random word of at most `letters` elementary letters with |r| <= bound.
ZWord random_word(std::mt19937_64& rng, std::size_t d, std::size_t letters, long bound);

}  // namespace noether
