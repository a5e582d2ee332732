#pragma once

#include <vector>

#include "invkit/polynomial.hpp"
#include "invkit/rational.hpp"

namespace invkit {

/// n x n matrix with ones on the superdiagonal: e_1 -> 0, e_j -> e_{j-1}.
/// Nilpotent of index exactly n.
MatrixQ shift_matrix(std::size_t n);

/// exp(tX) x as exact polynomials in (t, x_1..x_n), one per component; the
/// series terminates because X is nilpotent (validated by exact powering,
/// error if X^n != 0). The returned polynomials live on the context
/// (t, x1, ..., xn) with t first.
std::vector<Polynomial> nilpotent_flow(const MatrixQ& x);

/// The polynomial invariants P_1 ... P_{n-1} of the one-parameter group
/// generated by the shift matrix, obtained from the rational section of the
/// flow through the hyperplane x_{n-1} = 0:
///   - (exp(tX)x)_{n-1} = x_{n-1} + t x_n is exactly linear in t,
///   - substituting t* = -x_{n-1}/x_n gives rational section coordinates
///     Q_r with denominator a power of x_n,
///   - P_r = x_n^{n-r-1} Q_r for r <= n-2 clears the denominator exactly,
///     and P_{n-1} = x_n.
/// Construction fails hard (InternalError) if a denominator does not cancel;
/// every P_r is validated to be annihilated by the generator field
/// N = x_2 d/dx_1 + ... + x_n d/dx_{n-1}.
struct SectionInvariants {
  std::size_t n = 0;
  std::vector<Polynomial> polys;  // P_1 ... P_{n-1} on (x1, ..., xn)
};
SectionInvariants section_invariants(std::size_t n);

}  // namespace invkit
