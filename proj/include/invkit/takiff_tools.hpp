#pragma once

#include <vector>

#include "invkit/invariant_solver.hpp"
#include "invkit/lie_algebra.hpp"
#include "invkit/polynomial.hpp"

namespace invkit {

/// The m+1 derived invariants of one base invariant p on g: P_j is the
/// coefficient of t^j in p(x_0 + t x_1 + ... + t^m x_m). Indexing is 0-based
/// throughout (P_0 is p on the 0-block). Every P_j is validated to be
/// annihilated by the adjoint fields of the Takiff algebra g_m.
struct TakiffInvariantFamily {
  Polynomial base;
  std::uint32_t m = 0;
  std::vector<Polynomial> derived;  // P_0 ... P_m on the block context
};

/// Builds the family; rejects a base polynomial that is not invariant under
/// the adjoint fields of g (checked on p's own context, whose state count
/// must be dim g).
TakiffInvariantFamily derived_invariants(const LieAlgebra& g, const Polynomial& p,
                                         std::uint32_t m);

/// Pools the derived families of all base invariants and compares their
/// linear stabilizer on g_m with the span of the ad-matrices of g_m. The
/// derived families need not generate all invariants of g_m, so the verdict
/// is computed with generators_complete = false: equality of dimensions
/// proves the characteristic property, strict inequality stays inconclusive.
/// max_degree records the degree bound at which the evidence was gathered.
struct TakiffVerdict {
  std::uint32_t m = 0;
  std::size_t base_count = 0;
  std::size_t pooled_count = 0;
  std::uint32_t max_degree = 0;
  VerdictRecord record;
};
TakiffVerdict verify_takiff_corollary(const LieAlgebra& g,
                                      const std::vector<Polynomial>& base_invariants,
                                      std::uint32_t m);

/// P_j with the variables of the top block set to zero, re-read on the
/// (m-1)-block context. For j < m this is exactly the j-th derived invariant
/// of the same base polynomial at order m-1.
Polynomial restrict_top_block(const Polynomial& p_on_blocks, std::size_t base_state_count,
                              std::uint32_t m);

}  // namespace invkit
