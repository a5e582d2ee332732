#include "invkit/exact_linalg.hpp"

#include <algorithm>

#include "invkit/error.hpp"

namespace invkit {

namespace {

using IntMatrix = std::vector<std::vector<Int>>;

// Clears denominators and divides out the content; sign left as is.
void make_row_primitive(std::vector<Int>& row) {
  Int g = 0;
  for (const Int& x : row) g = gcd(g, x);
  if (g.is_zero() || g == 1) return;
  for (Int& x : row) x /= g;
}

IntMatrix to_primitive_integer_rows(const MatrixQ& a) {
  IntMatrix m(static_cast<std::size_t>(a.rows()),
              std::vector<Int>(static_cast<std::size_t>(a.cols())));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Int den = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j) den = lcm(den, a(i, j).den());
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Rational scaled = a(i, j) * Rational(den);
      ensure(scaled.is_integer(), "row scaling failed to clear denominators");
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = scaled.num();
    }
    make_row_primitive(m[static_cast<std::size_t>(i)]);
  }
  return m;
}

// Fraction-free forward elimination. Returns pivot (row, col) pairs; on exit
// m is upper echelon with exact integer entries.
std::vector<std::pair<std::size_t, std::size_t>> bareiss_forward(IntMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Smallest-bitlength pivot in this column, lowest row on ties.
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const std::size_t bits = bit_length(m[i][c]);
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;  // free column
    std::swap(m[r], m[best]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        ensure(prev == 1 || t % prev == 0, "fraction-free step not exact");
        m[i][j] = t / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

VectorQ primitive_integer(const VectorQ& v) {
  Int den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, v(i).den());
  Int num = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) num = gcd(num, (v(i) * Rational(den)).num());
  if (num.is_zero()) return v;  // zero vector
  int lead_sign = 0;
  for (Eigen::Index i = 0; i < v.size() && lead_sign == 0; ++i) lead_sign = v(i).sign();
  const Rational scale = Rational(lead_sign < 0 ? Int(-den) : den, num);
  VectorQ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * scale;
  return out;
}

Echelon reduced_row_echelon(const MatrixQ& a) {
  Echelon result;
  result.rows.resize(0, a.cols());
  if (a.rows() == 0 || a.cols() == 0) return result;

  IntMatrix m = to_primitive_integer_rows(a);
  const auto pivots = bareiss_forward(m);
  const std::size_t rank = pivots.size();

  // Back-substitution over the rationals, then clear each row.
  MatrixQ red(static_cast<Eigen::Index>(rank), a.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      red(static_cast<Eigen::Index>(i), j) = Rational(m[i][static_cast<std::size_t>(j)]);
  for (std::size_t ii = rank; ii-- > 0;) {
    const auto i = static_cast<Eigen::Index>(ii);
    const Eigen::Index p = static_cast<Eigen::Index>(pivots[ii].second);
    const Rational inv_pivot = Rational(1) / red(i, p);
    for (Eigen::Index j = 0; j < a.cols(); ++j) red(i, j) *= inv_pivot;
    for (std::size_t k = 0; k < ii; ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      const Rational f = red(kk, p);
      if (f.is_zero()) continue;
      for (Eigen::Index j = 0; j < a.cols(); ++j) red(kk, j) -= f * red(i, j);
    }
  }

  result.rows.resize(static_cast<Eigen::Index>(rank), a.cols());
  result.pivot_cols.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    result.rows.row(static_cast<Eigen::Index>(i)) =
        primitive_integer(red.row(static_cast<Eigen::Index>(i)).transpose()).transpose();
    result.pivot_cols.push_back(static_cast<Eigen::Index>(pivots[i].second));
  }
  return result;
}

Eigen::Index rank_of(const MatrixQ& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  IntMatrix m = to_primitive_integer_rows(a);
  return static_cast<Eigen::Index>(bareiss_forward(m).size());
}

std::vector<VectorQ> nullspace(const MatrixQ& a) {
  const Echelon ech = reduced_row_echelon(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (const auto c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<VectorQ> basis;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorQ v = VectorQ::Zero(a.cols());
    v(f) = Rational(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) {
      const Eigen::Index p = ech.pivot_cols[static_cast<std::size_t>(r)];
      v(p) = -ech.rows(r, f) / ech.rows(r, p);
    }
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

std::optional<VectorQ> solve_linear(const MatrixQ& a, const VectorQ& b) {
  require(a.rows() == b.size(), "solve_linear: dimension mismatch");
  MatrixQ aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const Echelon ech = reduced_row_echelon(aug);
  for (const auto c : ech.pivot_cols)
    if (c == a.cols()) return std::nullopt;  // inconsistent system
  VectorQ x = VectorQ::Zero(a.cols());
  for (Eigen::Index r = 0; r < ech.rank(); ++r) {
    const Eigen::Index p = ech.pivot_cols[static_cast<std::size_t>(r)];
    x(p) = ech.rows(r, a.cols()) / ech.rows(r, p);
  }
  return x;
}

bool in_row_span(const Echelon& ech, const VectorQ& v) {
  VectorQ w = v;
  for (Eigen::Index r = 0; r < ech.rank(); ++r) {
    const Eigen::Index p = ech.pivot_cols[static_cast<std::size_t>(r)];
    if (w(p).is_zero()) continue;
    const Rational f = w(p) / ech.rows(r, p);
    for (Eigen::Index j = 0; j < w.size(); ++j) w(j) -= f * ech.rows(r, j);
  }
  for (Eigen::Index j = 0; j < w.size(); ++j)
    if (!w(j).is_zero()) return false;
  return true;
}

bool exact_zero(const MatrixQ& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

bool exact_equal(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

MatrixQ stack_vectorized(const std::vector<MatrixQ>& mats) {
  if (mats.empty()) return MatrixQ(0, 0);
  const Eigen::Index len = mats[0].rows() * mats[0].cols();
  MatrixQ out(static_cast<Eigen::Index>(mats.size()), len);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    require(mats[k].rows() * mats[k].cols() == len, "stack_vectorized: shape mismatch");
    Eigen::Index idx = 0;
    for (Eigen::Index i = 0; i < mats[k].rows(); ++i)
      for (Eigen::Index j = 0; j < mats[k].cols(); ++j)
        out(static_cast<Eigen::Index>(k), idx++) = mats[k](i, j);
  }
  return out;
}

}  // namespace invkit
