#pragma once

#include <vector>

#include "noether/polynomial.hpp"

namespace noether {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// U A V = D for an m x n integer matrix A whose rows are relations.  Only the
/// column transform V and its inverse are tracked: x |-> x V identifies
/// Z^n / rowspace(A) with the direct sum of Z / d_i.
struct SmithForm {
    std::vector<BigInt> diagonal;  // length min(m, n); nonnegative, d_i | d_{i+1}
    IntMatrix v;                   // n x n
    IntMatrix v_inv;               // n x n
};

SmithForm smith_normal_form(IntMatrix a, std::size_t ncols);

/// Invariant factors (> 1) of Z^n / rowspace(A); zeros encode free summands.
std::vector<BigInt> invariant_factors(const IntMatrix& a, std::size_t ncols);

}  // namespace noether
