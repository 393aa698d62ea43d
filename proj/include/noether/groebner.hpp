#pragma once

#include <vector>

#include "noether/limits.hpp"
#include "noether/polynomial.hpp"

namespace noether {

/// Reduced strong Groebner basis over the integers.  Elements have positive
/// leading coefficients, are sorted ascending by leading monomial, and the
/// tail coefficients at each monomial m lie in [0, a_m).
struct StrongGB {
    std::size_t nvars = 0;
    TermOrder order{};
    std::vector<Polynomial> elements;

    bool is_unit() const { return elements.size() == 1 && elements.front().is_one(); }
    /// Smallest positive integer in the ideal, 0 when the ideal meets Z trivially.
    BigInt integer_part() const;
    /// gcd of leading coefficients of elements whose leading monomial divides m;
    /// 0 when no leading monomial divides m.
    BigInt leading_ideal_at(const Monomial& m) const;
    friend bool operator==(const StrongGB&, const StrongGB&) = default;
};

/// Buchberger with S- and G-polynomials.  Throws ResourceLimitError when the
/// pair or degree cap in limits() is exceeded.
StrongGB strong_groebner(const std::vector<Polynomial>& gens, std::size_t nvars, TermOrder order);

/// Strong reduction: every remainder term c*m has 0 < c < a_m.  Unique for a
/// reduced strong basis.
Polynomial normal_form(const Polynomial& f, const StrongGB& basis);

}  // namespace noether
