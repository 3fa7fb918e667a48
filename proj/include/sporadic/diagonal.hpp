#pragma once

#include <span>
#include <vector>

#include "sporadic/laurent.hpp"

namespace sporadic {

// First N+1 diagonal coefficients of 1/(1 - Q) for a polynomial Q with CT(Q) = 0,
// by summing Q^k in a dense box truncated at degree N per variable.
// Throws DomainError if Q has a negative exponent or a nonzero constant term.
std::vector<Integer> diagonal_prefix(const LaurentPoly& q, unsigned N);
// Single-threaded version of the same kernel.
std::vector<Integer> diagonal_prefix_serial(const LaurentPoly& q, unsigned N);

// prod_i (sum_j M_ij x_j) / (x_1 ... x_d), M given row-major.
LaurentPoly matrix_to_ct_poly(int dim, std::span<const long> matrix);

// det(I - M Diag(x_1..x_d)) as a polynomial.
LaurentPoly macmahon_determinant(int dim, std::span<const long> matrix);

// x_1 ... x_{d+1} A(x_1..x_d) in d+1 variables; its 1/(1 - .) diagonal is CTS(A).
// Throws DomainError if the result is not a polynomial.
LaurentPoly cts_diagonal_series(const LaurentPoly& a);

}  // namespace sporadic
