#include "invkit/lie_algebra.hpp"

#include <set>
#include <sstream>

#include "invkit/error.hpp"
#include "invkit/exact_linalg.hpp"

namespace invkit {

namespace {

std::string vector_str(const VectorQ& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i);
  }
  os << ")";
  return os.str();
}

void check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        VectorQ defect = VectorQ::Zero(static_cast<Eigen::Index>(n));
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        const auto acc = [&](std::size_t a, std::size_t b, std::size_t c) {
          const VectorQ ab = g.bracket_basis(a, b);
          for (std::size_t l = 0; l < n; ++l) {
            const Rational& coeff = ab(static_cast<Eigen::Index>(l));
            if (coeff.is_zero()) continue;
            defect += g.bracket_basis(l, c) * coeff;
          }
        };
        acc(i, j, k);
        acc(j, k, i);
        acc(k, i, j);
        if (!exact_zero(defect)) {
          throw ValidationError("Jacobi identity fails on basis triple (" +
                                std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                                std::to_string(k + 1) + "), defect " + vector_str(defect));
        }
      }
}

}  // namespace

LieAlgebra LieAlgebra::make(std::size_t dim, std::vector<std::string> basis_names,
                            const std::vector<BracketSpec>& brackets) {
  require(dim >= 1, "Lie algebra dimension must be positive");
  require(basis_names.size() == dim, "need one basis name per dimension");
  std::set<std::string> seen;
  for (const auto& n : basis_names)
    require(seen.insert(n).second, "duplicate basis name '" + n + "'");

  std::map<std::pair<std::size_t, std::size_t>, VectorQ> table;
  for (const auto& b : brackets) {
    require(b.i < b.j, "bracket pairs must have i < j");
    require(b.j < dim, "bracket index out of range");
    VectorQ v = VectorQ::Zero(static_cast<Eigen::Index>(dim));
    for (const auto& [k, c] : b.terms) {
      require(k < dim, "bracket target index out of range");
      v(static_cast<Eigen::Index>(k)) += c;
    }
    const auto key = std::make_pair(b.i, b.j);
    require(table.find(key) == table.end(),
            "bracket (" + std::to_string(b.i + 1) + ", " + std::to_string(b.j + 1) +
                ") declared twice");
    if (!exact_zero(v)) table.emplace(key, std::move(v));
  }

  LieAlgebra g(dim, std::move(basis_names), std::move(table));
  check_jacobi(g);
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::vector<std::string> basis_names) {
  return make(dim, std::move(basis_names), {});
}

VectorQ LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  require(i < dim_ && j < dim_, "basis index out of range");
  if (i == j) return VectorQ::Zero(static_cast<Eigen::Index>(dim_));
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = table_.find({i, j});
  if (it == table_.end()) return VectorQ::Zero(static_cast<Eigen::Index>(dim_));
  return flip ? VectorQ(-it->second) : it->second;
}

VectorQ LieAlgebra::bracket(const VectorQ& x, const VectorQ& y) const {
  require(static_cast<std::size_t>(x.size()) == dim_ &&
              static_cast<std::size_t>(y.size()) == dim_,
          "bracket operand length mismatch");
  VectorQ out = VectorQ::Zero(static_cast<Eigen::Index>(dim_));
  for (const auto& [key, v] : table_) {
    const auto [i, j] = key;
    const Rational c = x(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(j)) -
                       x(static_cast<Eigen::Index>(j)) * y(static_cast<Eigen::Index>(i));
    if (!c.is_zero()) out += v * c;
  }
  return out;
}

Representation Representation::make(LieAlgebra algebra, std::vector<MatrixQ> matrices,
                                    VarContextPtr space_ctx) {
  require(matrices.size() == algebra.dim(), "need one matrix per basis element");
  require(!matrices.empty(), "empty representation");
  const Eigen::Index n = matrices[0].rows();
  require(n >= 1, "representation space must have positive dimension");
  for (const auto& m : matrices)
    require(m.rows() == n && m.cols() == n, "representation matrices must be square and equal-sized");

  for (std::size_t i = 0; i < matrices.size(); ++i)
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      const VectorQ c = algebra.bracket_basis(i, j);
      MatrixQ lhs = MatrixQ::Zero(n, n);
      for (std::size_t k = 0; k < matrices.size(); ++k) {
        const Rational& ck = c(static_cast<Eigen::Index>(k));
        if (!ck.is_zero()) lhs += matrices[k] * ck;
      }
      const MatrixQ rhs = matrices[i] * matrices[j] - matrices[j] * matrices[i];
      if (!exact_equal(lhs, rhs))
        throw ValidationError("representation is not a homomorphism on basis pair (" +
                              std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    }

  if (!space_ctx) space_ctx = default_context(static_cast<std::size_t>(n));
  require(space_ctx->state_count() == static_cast<std::size_t>(n),
          "space context size must match the representation dimension");
  return Representation(std::move(algebra), std::move(matrices), std::move(space_ctx));
}

Representation Representation::with_context(VarContextPtr ctx) const {
  require(ctx && ctx->state_count() == space_dim(),
          "space context size must match the representation dimension");
  return Representation(algebra_, matrices_, std::move(ctx));
}

Representation adjoint_rep(const LieAlgebra& g, VarContextPtr space_ctx) {
  const auto n = static_cast<Eigen::Index>(g.dim());
  std::vector<MatrixQ> mats;
  mats.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    MatrixQ m = MatrixQ::Zero(n, n);
    for (std::size_t j = 0; j < g.dim(); ++j)
      m.col(static_cast<Eigen::Index>(j)) = g.bracket_basis(i, j);
    mats.push_back(std::move(m));
  }
  if (!space_ctx) space_ctx = VarContext::make(g.basis_names());
  return Representation::make(g, std::move(mats), std::move(space_ctx));
}

Representation coadjoint_rep(const LieAlgebra& g, VarContextPtr space_ctx) {
  const Representation ad = adjoint_rep(g);
  std::vector<MatrixQ> mats;
  mats.reserve(g.dim());
  for (const auto& m : ad.matrices()) mats.push_back(-m.transpose());
  if (!space_ctx) space_ctx = VarContext::make(g.basis_names());
  return Representation::make(g, std::move(mats), std::move(space_ctx));
}

LieAlgebra takiff(const LieAlgebra& g, std::uint32_t m) {
  const std::size_t d = g.dim();
  const std::size_t dim = (m + 1) * d;
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::uint32_t a = 0; a <= m; ++a)
    for (std::size_t i = 0; i < d; ++i)
      names.push_back(g.basis_names()[i] + "_" + std::to_string(a));

  std::vector<BracketSpec> brackets;
  for (std::uint32_t a = 0; a <= m; ++a)
    for (std::uint32_t b = a; b <= m; ++b) {
      if (a + b > m) continue;
      for (std::size_t i = 0; i < d; ++i) {
        const std::size_t j_start = (a == b) ? i + 1 : 0;
        for (std::size_t j = j_start; j < d; ++j) {
          const VectorQ c = g.bracket_basis(i, j);
          if (exact_zero(c)) continue;
          BracketSpec spec;
          spec.i = a * d + i;
          spec.j = b * d + j;
          for (std::size_t k = 0; k < d; ++k) {
            const Rational& ck = c(static_cast<Eigen::Index>(k));
            if (!ck.is_zero()) spec.terms.emplace_back((a + b) * d + k, ck);
          }
          brackets.push_back(std::move(spec));
        }
      }
    }
  return LieAlgebra::make(dim, std::move(names), std::move(brackets));
}

}  // namespace invkit
