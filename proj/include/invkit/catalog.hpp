#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invkit/invariant_solver.hpp"
#include "invkit/lie_algebra.hpp"
#include "invkit/polynomial.hpp"

namespace invkit {

/// Facts about an entry that the test suite recomputes from scratch.
/// Stabilizer facts refer to the entry's distinguished invariant list.
struct ExpectedFacts {
  std::map<std::uint32_t, std::size_t> invariant_dims;  // degree -> dimension
  std::optional<std::size_t> stabilizer_dim;
  std::optional<std::size_t> rep_span_dim;
  std::optional<Verdict> verdict;
  bool generators_complete = false;
};

/// A named example construction: a validated representation, its
/// distinguished invariants, and the facts known about it.
struct CatalogEntry {
  std::string name;
  std::string provenance;  // what the construction is, in words
  Representation rep;
  std::vector<std::pair<std::string, Polynomial>> invariants;
  ExpectedFacts expected;
};

/// Published entry names, fixed order.
const std::vector<std::string>& catalog_names();

/// Builds an entry on demand; unknown names raise ValidationError listing
/// the published names.
CatalogEntry catalog_get(const std::string& name);

/// Lie algebra spanned by explicit matrices; structure constants are
/// extracted by exact linear solves against the given basis.
LieAlgebra matrix_lie_algebra(std::vector<std::string> names,
                              const std::vector<MatrixQ>& basis);

/// Evidence for the transposition component on n x n matrix space under
/// conjugation: every trace power tr(x^k), k <= k_max, is fixed by the
/// transposition operator, yet that operator lies outside the span of the
/// conjugation (ad) matrices.
struct TranspositionReport {
  std::size_t n = 0;
  std::uint32_t k_max = 0;
  bool trace_powers_fixed = false;
  bool transposition_in_ad_span = true;
  std::size_t ad_span_dim = 0;
};
TranspositionReport transposition_check(std::size_t n, std::uint32_t k_max);

}  // namespace invkit
