#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "invkit/polynomial.hpp"
#include "invkit/rational.hpp"

namespace invkit {

/// One declared bracket [e_i, e_j] = sum_k c_k e_k with i < j (0-based).
struct BracketSpec {
  std::size_t i;
  std::size_t j;
  std::vector<std::pair<std::size_t, Rational>> terms;  // (k, c_k)
};

/// Finite-dimensional Lie algebra given by structure constants. Only pairs
/// i < j are stored; antisymmetry is implicit and the Jacobi identity is
/// checked for every basis triple at construction.
class LieAlgebra {
 public:
  static LieAlgebra make(std::size_t dim, std::vector<std::string> basis_names,
                         const std::vector<BracketSpec>& brackets);

  /// Abelian algebra of the given dimension (all brackets zero).
  static LieAlgebra abelian(std::size_t dim, std::vector<std::string> basis_names);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// Coefficient vector of [e_i, e_j]; any index order, i == j gives zero.
  VectorQ bracket_basis(std::size_t i, std::size_t j) const;
  VectorQ bracket(const VectorQ& x, const VectorQ& y) const;

  bool is_abelian() const { return table_.empty(); }

  /// The stored (i, j) pairs with nonzero bracket, ascending.
  const std::map<std::pair<std::size_t, std::size_t>, VectorQ>& table() const { return table_; }

 private:
  LieAlgebra(std::size_t dim, std::vector<std::string> names,
             std::map<std::pair<std::size_t, std::size_t>, VectorQ> table)
      : dim_(dim), names_(std::move(names)), table_(std::move(table)) {}

  std::size_t dim_;
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, VectorQ> table_;  // keys i < j only
};

/// Lie algebra together with matrices acting on an n-dimensional space.
/// Construction verifies the homomorphism property
/// rho([e_i, e_j]) = rho_i rho_j - rho_j rho_i for every pair.
class Representation {
 public:
  static Representation make(LieAlgebra algebra, std::vector<MatrixQ> matrices,
                             VarContextPtr space_ctx = nullptr);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t space_dim() const { return static_cast<std::size_t>(matrices_.empty() ? 0 : matrices_[0].rows()); }
  const std::vector<MatrixQ>& matrices() const { return matrices_; }
  const VarContextPtr& space_context() const { return ctx_; }

  /// Same matrices, different coordinate names.
  Representation with_context(VarContextPtr ctx) const;

 private:
  Representation(LieAlgebra algebra, std::vector<MatrixQ> matrices, VarContextPtr ctx)
      : algebra_(std::move(algebra)), matrices_(std::move(matrices)), ctx_(std::move(ctx)) {}
  LieAlgebra algebra_;
  std::vector<MatrixQ> matrices_;
  VarContextPtr ctx_;
};

/// ad(e_i) with entries (rho_i)_{kj} = coefficient of e_k in [e_i, e_j].
/// Default coordinates are the basis names themselves.
Representation adjoint_rep(const LieAlgebra& g, VarContextPtr space_ctx = nullptr);

/// Coadjoint matrices are the negated transposes of the adjoint ones,
/// realizing the pairing convention <ad*(x) xi, y> = -<xi, [x, y]>.
Representation coadjoint_rep(const LieAlgebra& g, VarContextPtr space_ctx = nullptr);

/// Takiff algebra: dimension (m+1) dim(g), basis e_i (x) T^a ordered
/// block-major by (a, i) and named "<name>_<a>"; brackets multiply in T and
/// truncate above degree m. The Jacobi identity is validated again.
LieAlgebra takiff(const LieAlgebra& g, std::uint32_t m);

}  // namespace invkit
