#pragma once

// Test-only oracle: a deliberately plain rational Gauss-Jordan elimination,
// independent of the fraction-free production routine in exact_linalg. No
// pivot strategy beyond "first nonzero", no integer scaling tricks.

#include <vector>

#include "invkit/exact_linalg.hpp"
#include "invkit/polynomial.hpp"
#include "invkit/rational.hpp"

namespace invkit::testing {

inline std::vector<VectorQ> naive_nullspace(MatrixQ a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.row(r).swap(a.row(p));
    const Rational inv = Rational(1) / a(r, c);
    for (Eigen::Index j = 0; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (const auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<VectorQ> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorQ v = VectorQ::Zero(cols);
    v(f) = Rational(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v(pivot_cols[k]) = -a(static_cast<Eigen::Index>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline MatrixQ stack_rows(const std::vector<VectorQ>& vs) {
  if (vs.empty()) return MatrixQ(0, 0);
  MatrixQ m(static_cast<Eigen::Index>(vs.size()), vs[0].size());
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  return m;
}

inline Eigen::Index span_dim(const std::vector<VectorQ>& vs) {
  if (vs.empty()) return 0;
  return rank_of(stack_rows(vs));
}

// Equal linear spans: both ranks equal the rank of the union.
inline bool same_span(const std::vector<VectorQ>& a, const std::vector<VectorQ>& b) {
  const Eigen::Index ra = span_dim(a), rb = span_dim(b);
  if (ra != rb) return false;
  std::vector<VectorQ> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_dim(both) == ra;
}

inline std::vector<VectorQ> poly_coeff_vectors(const std::vector<Polynomial>& polys,
                                               const std::vector<Monomial>& basis) {
  std::vector<VectorQ> out;
  for (const auto& p : polys) {
    VectorQ v = VectorQ::Zero(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) v(static_cast<Eigen::Index>(i)) = p.coeff(basis[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace invkit::testing
