#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noether/ideal.hpp"
#include "noether/snf.hpp"

namespace noether {

enum class FiniteStatus { Finite, Infinite, Unknown };
const char* to_string(FiniteStatus s);

struct FinitenessVerdict {
    FiniteStatus status = FiniteStatus::Unknown;
    /// N with N in I (the generator of I intersected with Z); 0 when trivial.
    BigInt integer_part = 0;
    /// For Finite: per-variable (n_i, m_i), n_i < m_i, with x_i^m_i - x_i^n_i in I.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> witnesses;
    /// For Finite: |R/I|.
    BigInt cardinality = 0;
    /// For Infinite: 0 when I meets Z trivially, otherwise a prime p whose
    /// staircase modulo p is not zero-dimensional.
    BigInt bad_prime = 0;
};

/// Prime divisors of c > 0 by trial division up to limits().trial_division_bound.
/// Throws ResourceLimitError when a cofactor above the bound squared remains.
std::vector<BigInt> prime_divisors(const BigInt& c);

FinitenessVerdict finite_index_test(const Ideal& i);

/// Additive group of R/I: standard monomials S (those with a_m != 1), the
/// triangular relation matrix, and its Smith form.
struct AdditiveStructure {
    std::size_t nvars = 0;
    TermOrder order{};
    std::vector<Monomial> staircase;
    std::vector<BigInt> leading_ideal;  // a_m for each staircase monomial
    std::vector<BigInt> invariant_factors;
    /// Column of the Smith transform used by each invariant factor.
    std::vector<std::size_t> factor_columns;
    SmithForm smith;
    StrongGB gb;

    BigInt order_of_group() const;
    /// Coefficient vector of a normal form over the staircase.
    std::vector<BigInt> staircase_vector(const Polynomial& f) const;
    /// Coordinates of f in the invariant-factor basis, each reduced into [0, m_i).
    std::vector<BigInt> coordinates(const Polynomial& f) const;
    /// Normal form of the element with the given coordinates.
    Polynomial element(const std::vector<BigInt>& coords) const;
};

/// Precondition: finite_index_test(i) is Finite.
AdditiveStructure cardinality_and_structure(const Ideal& i);

/// r in mfi(I), decided as finiteness of I : r.
bool depth_membership(const Polynomial& r, const Ideal& i);

struct DepthBounds {
    unsigned degree = 4;    // B
    unsigned coeff = 6;     // C
};

enum class DepthAnswer { Yes, No, CertifiedNo };
const char* to_string(DepthAnswer a);

struct IsDepthResult {
    DepthAnswer answer = DepthAnswer::Yes;
    std::optional<Polynomial> witness;
};

IsDepthResult is_depth(const Ideal& i, DepthBounds bounds = {});

enum class DepthStatus { Certified, BoundLimited };
const char* to_string(DepthStatus s);

struct DepthResult {
    Ideal depth;
    DepthStatus status = DepthStatus::BoundLimited;
    /// Elements added by the greedy closure, in order.
    std::vector<Polynomial> added;
};

DepthResult compute_depth(const Ideal& i, DepthBounds bounds = {});

bool commensurable(const Ideal& a, const Ideal& b);

/// Candidate elements tried by the greedy closure, in the order tried.
std::vector<Polynomial> depth_candidates(const Ideal& i, DepthBounds bounds);

}  // namespace noether
