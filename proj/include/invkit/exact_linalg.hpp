#pragma once

#include <optional>
#include <vector>

#include "invkit/rational.hpp"

namespace invkit {

/// Reduced row echelon form with primitive integer rows.
///
/// Rows are scaled so that entries are integers with gcd 1 and the pivot
/// entry positive; pivot columns are strictly increasing and every pivot
/// column is zero in all other rows. The form is unique, so any two
/// computations of the same row space print identically.
struct Echelon {
  MatrixQ rows;                          // rank x n
  std::vector<Eigen::Index> pivot_cols;  // ascending
  Eigen::Index rank() const { return rows.rows(); }
};

/// Fraction-free (Bareiss) elimination over the rationals. Rows are first
/// cleared to primitive integer vectors; pivots are chosen per column among
/// the candidate rows by smallest bit length (ties: lowest row index), which
/// keeps intermediate entries from blowing up.
Echelon reduced_row_echelon(const MatrixQ& a);

Eigen::Index rank_of(const MatrixQ& a);

/// Basis of { v : a v = 0 } as primitive integer vectors, one per free
/// column of the echelon form, ordered by free column ascending.
std::vector<VectorQ> nullspace(const MatrixQ& a);

/// One exact solution of a x = b (free variables set to zero), or nullopt.
std::optional<VectorQ> solve_linear(const MatrixQ& a, const VectorQ& b);

/// Scales to integer entries with gcd 1 and first nonzero entry positive.
/// The zero vector is returned unchanged.
VectorQ primitive_integer(const VectorQ& v);

/// Whether v lies in the row space described by an echelon form.
bool in_row_span(const Echelon& ech, const VectorQ& v);

/// Rows of `mats` flattened row-major into vectors, stacked as matrix rows.
MatrixQ stack_vectorized(const std::vector<MatrixQ>& mats);

/// Exact entrywise tests (no Eigen precision machinery involved).
bool exact_zero(const MatrixQ& a);
bool exact_equal(const MatrixQ& a, const MatrixQ& b);

}  // namespace invkit
