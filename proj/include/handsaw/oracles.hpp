#pragma once

#include <random>
#include <vector>

#include "handsaw/kl.hpp"
#include "handsaw/laurent.hpp"

namespace handsaw {

// Brute-force cross-checks used by the test and acceptance suites. Nothing
// here may call into the engines it verifies: the KL oracle goes through
// R-polynomials and the triangularity identity instead of the descent
// recursion.

// R_{x,w}: 1 on the diagonal, 0 off the Bruhat order, otherwise
// R_{xs,ws} when xs < x and (q-1) R_{x,ws} + q R_{xs,ws} when xs > x,
// for s a right descent of w.
LaurentPolynomial r_polynomial(const Permutation& x, const Permutation& w);

// Solves q^{len(w)-len(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_{x<z<=w} R_{x,z} P_{z,w}
// top-down in len(x); the degree bound deg P < (len(w)-len(x))/2 splits the
// two sides by degree, so the low half of the right-hand side determines P.
// Throws std::logic_error if the solved P fails the identity exactly.
LaurentPolynomial kl_polynomial_oracle(const Permutation& x, const Permutation& w);

// Random unimodal column sequences for property tests (n <= 5, level <= 8).
std::vector<int> random_unimodal_columns(std::mt19937& rng);

}  // namespace handsaw
