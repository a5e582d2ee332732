#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invkit/exact_linalg.hpp"
#include "invkit/lie_algebra.hpp"
#include "invkit/polynomial.hpp"
#include "invkit/vector_field.hpp"

namespace invkit {

/// Basis of the joint kernel of the given linear fields on the homogeneous
/// slice of total degree `degree` in the state variables. Built by stacking,
/// for each field, the matrix of its action on the monomial basis of the
/// slice and extracting the exact nullspace; output polynomials have
/// primitive integer coefficients and every one is re-checked to be
/// annihilated by every field before being returned.
std::vector<Polynomial> invariant_space(const std::vector<VectorField>& fields,
                                        std::uint32_t degree);

/// Per-degree invariant bases for degrees 1..max_degree. The degree slices
/// are independent exact solves and run concurrently (see parallel.hpp).
struct GradedInvariantBasis {
  std::map<std::uint32_t, std::vector<Polynomial>> by_degree;
  /// All basis polynomials, ascending degree.
  std::vector<Polynomial> pooled() const;
};
GradedInvariantBasis invariant_spaces(const std::vector<VectorField>& fields,
                                      std::uint32_t max_degree);

/// The space of all n x n matrices A whose linear field annihilates every
/// input polynomial; one exact linear solve in the n^2 entries of A. The
/// basis is the reduced echelon form under row-major flattening, so it is
/// deterministic; it is always closed under the matrix commutator.
struct StabilizerAlgebra {
  std::vector<MatrixQ> basis;
  std::size_t dim() const { return basis.size(); }
};
StabilizerAlgebra linear_stabilizer(const std::vector<Polynomial>& polys);

/// Exact check that every commutator of basis elements stays in the span.
bool bracket_closed(const StabilizerAlgebra& s);

/// Decision for target = sum_i phi_i * generator_i with polynomial
/// coefficients phi_i of total degree <= bound. Solved one graded component
/// at a time: with linear generators the component of degree k of the
/// identity only involves the degree k-1 parts of the phi_i. A YES is
/// re-verified symbolically before being returned; NO carries the exhausted
/// bound.
struct MembershipCertificate {
  bool member;
  std::vector<Polynomial> coefficients;  // one per generator when member
  std::uint32_t degree_bound;
};
MembershipCertificate module_membership(const VectorField& target,
                                        const std::vector<VectorField>& generators,
                                        std::uint32_t coeff_degree_bound);

/// Rank of the r x n matrix of partial derivatives at an exact point.
std::size_t jacobian_rank(const std::vector<Polynomial>& polys, const VectorQ& point);

enum class Verdict { kCharacteristic, kNotCharacteristic, kInconclusive };
std::string verdict_name(Verdict v);

/// Comparison of the stabilizer algebra S of a polynomial family with the
/// span I of the representation matrices. I is contained in S whenever the
/// polynomials are invariant (validated on entry), so
///   dim S = dim I   proves the invariants pin down the algebra, while
///   dim S > dim I   refutes it only when the polynomial family is known to
///                   generate all invariants (generators_complete).
struct VerdictRecord {
  std::size_t stabilizer_dim = 0;
  std::size_t rep_span_dim = 0;
  bool generators_complete = false;
  Verdict verdict = Verdict::kInconclusive;
  StabilizerAlgebra stabilizer;
};
VerdictRecord characteristic_verdict(const Representation& rep,
                                     const std::vector<Polynomial>& invariant_polys,
                                     bool generators_complete);

}  // namespace invkit
