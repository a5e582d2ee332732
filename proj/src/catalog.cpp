#include "invkit/catalog.hpp"

#include <functional>
#include <sstream>

#include "invkit/error.hpp"
#include "invkit/exact_linalg.hpp"
#include "invkit/nilpotent_section.hpp"
#include "invkit/vector_field.hpp"

namespace invkit {

namespace {

MatrixQ unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  MatrixQ m = MatrixQ::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Rational(1);
  return m;
}

// --- polynomial matrices, used to expand tr(x^k) symbolically -------------

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b, const VarContextPtr& ctx) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial::zero(ctx)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

Polynomial poly_matrix_trace(const PolyMatrix& a, const VarContextPtr& ctx) {
  Polynomial t = Polynomial::zero(ctx);
  for (std::size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
  return t;
}

// tr(x^k) for the generic element x = sum_i c_i B_i of a matrix basis,
// as a polynomial in the coordinates c_i.
Polynomial trace_power(const std::vector<MatrixQ>& basis, const VarContextPtr& ctx,
                       std::uint32_t k) {
  const std::size_t n = static_cast<std::size_t>(basis.front().rows());
  PolyMatrix generic(n, std::vector<Polynomial>(n, Polynomial::zero(ctx)));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& e = basis[b](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (!e.is_zero()) generic[i][j] = generic[i][j] + Polynomial::variable(ctx, b) * e;
      }
  PolyMatrix power = generic;
  for (std::uint32_t s = 1; s < k; ++s) power = poly_matrix_mul(power, generic, ctx);
  return poly_matrix_trace(power, ctx);
}

// --- entry builders --------------------------------------------------------

CatalogEntry heisenberg3_coadjoint() {
  const LieAlgebra h = LieAlgebra::make(3, {"P", "Q", "Z"}, {{0, 1, {{2, Rational(1)}}}});
  const VarContextPtr ctx = VarContext::make({"x", "y", "z"});
  CatalogEntry e{"heisenberg3-coadjoint",
                 "coadjoint representation of the 3-dimensional Heisenberg algebra",
                 coadjoint_rep(h, ctx),
                 {},
                 {}};
  const Polynomial z = Polynomial::variable(ctx, 2);
  e.invariants = {{"z", z}, {"z2", z * z}, {"z3", z * z * z}};
  e.expected.invariant_dims = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}};
  e.expected.stabilizer_dim = 6;
  e.expected.rep_span_dim = 2;
  e.expected.verdict = Verdict::kNotCharacteristic;
  e.expected.generators_complete = true;
  return e;
}

CatalogEntry dixmier6_coadjoint() {
  const LieAlgebra g = LieAlgebra::make(6, {"e1", "e2", "e3", "e4", "e5", "e6"},
                                        {{0, 1, {{4, Rational(1)}}},
                                         {0, 2, {{5, Rational(1)}}},
                                         {1, 3, {{5, Rational(1)}}}});
  const VarContextPtr ctx = VarContext::make({"y1", "y2", "y3", "y4", "y5", "y6"});
  CatalogEntry e{"dixmier6-coadjoint",
                 "coadjoint representation of the 6-dimensional nilpotent algebra with "
                 "[e1,e2]=e5, [e1,e3]=e6, [e2,e4]=e6",
                 coadjoint_rep(g, ctx),
                 {},
                 {}};
  e.invariants = {{"y5", Polynomial::variable(ctx, 4)}, {"y6", Polynomial::variable(ctx, 5)}};
  e.expected.invariant_dims = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  e.expected.rep_span_dim = 4;
  return e;
}

CatalogEntry unipotent_standard(std::size_t n) {
  // Strictly upper triangular matrices with the natural action on R^n.
  std::vector<std::string> names;
  std::vector<MatrixQ> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      basis.push_back(unit_matrix(n, i, j));
    }
  LieAlgebra g = matrix_lie_algebra(names, basis);
  const VarContextPtr ctx = default_context(n);
  CatalogEntry e{"unipotent-standard-" + std::to_string(n),
                 "strictly upper triangular matrices acting naturally on " +
                     std::to_string(n) + "-space",
                 Representation::make(std::move(g), basis, ctx),
                 {},
                 {}};
  const Polynomial xn = Polynomial::variable(ctx, n - 1);
  e.invariants = {{"xn", xn}, {"xn2", xn * xn}};
  e.expected.invariant_dims = {{1, 1}, {2, 1}, {3, 1}, {4, 1}};
  e.expected.stabilizer_dim = n * n - n;
  e.expected.rep_span_dim = n * (n - 1) / 2;
  e.expected.verdict = Verdict::kNotCharacteristic;
  e.expected.generators_complete = true;
  return e;
}

CatalogEntry principal_nilpotent(std::size_t n) {
  LieAlgebra g = LieAlgebra::abelian(1, {"X"});
  const VarContextPtr ctx = default_context(n);
  CatalogEntry e{"principal-nilpotent-" + std::to_string(n),
                 "one-parameter unipotent group of the principal shift matrix on " +
                     std::to_string(n) + "-space",
                 Representation::make(std::move(g), {shift_matrix(n)}, ctx),
                 {},
                 {}};
  const SectionInvariants s = section_invariants(n);
  for (std::size_t r = 0; r < s.polys.size(); ++r)
    e.invariants.emplace_back("P" + std::to_string(r + 1), s.polys[r]);
  e.expected.rep_span_dim = 1;
  if (n == 2) {
    // Single invariant x2; its stabilizer is bigger than the line through X.
    e.expected.stabilizer_dim = 2;
    e.expected.verdict = Verdict::kNotCharacteristic;
    e.expected.generators_complete = true;
  } else {
    e.expected.stabilizer_dim = 1;
    e.expected.verdict = Verdict::kCharacteristic;
    e.expected.generators_complete = false;  // P_r generate the field, not the ring
  }
  return e;
}

CatalogEntry sl2_adjoint() {
  const LieAlgebra g = LieAlgebra::make(3, {"h", "e", "f"},
                                        {{0, 1, {{1, Rational(2)}}},
                                         {0, 2, {{2, Rational(-2)}}},
                                         {1, 2, {{0, Rational(1)}}}});
  const VarContextPtr ctx = VarContext::make({"a", "b", "c"});
  CatalogEntry entry{"sl2-adjoint",
                     "adjoint representation of sl2 in the basis (h, e, f)",
                     adjoint_rep(g, ctx),
                     {},
                     {}};
  // Casimir q = a^2 + bc = (1/8) tr(ad(x)^2) in these coordinates.
  const Polynomial a = Polynomial::variable(ctx, 0);
  const Polynomial b = Polynomial::variable(ctx, 1);
  const Polynomial c = Polynomial::variable(ctx, 2);
  entry.invariants = {{"casimir", a * a + b * c}};
  entry.expected.invariant_dims = {{1, 0}, {2, 1}, {3, 0}, {4, 1}};
  entry.expected.stabilizer_dim = 3;
  entry.expected.rep_span_dim = 3;
  entry.expected.verdict = Verdict::kCharacteristic;
  entry.expected.generators_complete = true;
  return entry;
}

std::vector<MatrixQ> sl3_basis() {
  std::vector<MatrixQ> basis;
  // E12, E13, E23, E21, E31, E32, H1 = E11-E22, H2 = E22-E33.
  basis.push_back(unit_matrix(3, 0, 1));
  basis.push_back(unit_matrix(3, 0, 2));
  basis.push_back(unit_matrix(3, 1, 2));
  basis.push_back(unit_matrix(3, 1, 0));
  basis.push_back(unit_matrix(3, 2, 0));
  basis.push_back(unit_matrix(3, 2, 1));
  basis.push_back(unit_matrix(3, 0, 0) - unit_matrix(3, 1, 1));
  basis.push_back(unit_matrix(3, 1, 1) - unit_matrix(3, 2, 2));
  return basis;
}

CatalogEntry sl3_adjoint() {
  const std::vector<MatrixQ> basis = sl3_basis();
  LieAlgebra g = matrix_lie_algebra({"E12", "E13", "E23", "E21", "E31", "E32", "H1", "H2"},
                                    basis);
  std::vector<std::string> coords;
  for (std::size_t i = 1; i <= 8; ++i) coords.push_back("c" + std::to_string(i));
  const VarContextPtr ctx = VarContext::make(std::move(coords));
  CatalogEntry e{"sl3-adjoint",
                 "adjoint representation of sl3 on its 8-dimensional adjoint space",
                 adjoint_rep(g, ctx),
                 {},
                 {}};
  e.invariants = {{"tr_x2", trace_power(basis, ctx, 2)},
                  {"tr_x3", trace_power(basis, ctx, 3)}};
  e.expected.invariant_dims = {{1, 0}, {2, 1}, {3, 1}};
  e.expected.stabilizer_dim = 8;
  e.expected.rep_span_dim = 8;
  e.expected.verdict = Verdict::kCharacteristic;
  e.expected.generators_complete = true;
  return e;
}

CatalogEntry so3_standard() {
  const Rational one(1);
  MatrixQ l1 = MatrixQ::Zero(3, 3), l2 = MatrixQ::Zero(3, 3), l3 = MatrixQ::Zero(3, 3);
  l1(1, 2) = -one; l1(2, 1) = one;
  l2(0, 2) = one;  l2(2, 0) = -one;
  l3(0, 1) = -one; l3(1, 0) = one;
  LieAlgebra g = matrix_lie_algebra({"L1", "L2", "L3"}, {l1, l2, l3});
  const VarContextPtr ctx = VarContext::make({"x", "y", "z"});
  CatalogEntry e{"so3-standard",
                 "rotation algebra so3 acting on 3-space",
                 Representation::make(std::move(g), {l1, l2, l3}, ctx),
                 {},
                 {}};
  const Polynomial x = Polynomial::variable(ctx, 0);
  const Polynomial y = Polynomial::variable(ctx, 1);
  const Polynomial z = Polynomial::variable(ctx, 2);
  e.invariants = {{"r2", x * x + y * y + z * z}};
  e.expected.invariant_dims = {{1, 0}, {2, 1}};
  e.expected.stabilizer_dim = 3;
  e.expected.rep_span_dim = 3;
  e.expected.verdict = Verdict::kCharacteristic;
  e.expected.generators_complete = true;
  return e;
}

// Conjugation matrices of gl_n on n x n matrix space with row-major
// coordinates x11..xnn: rho(E_ab) maps E_ij to d_{bi} E_aj - d_{ja} E_ib.
std::vector<MatrixQ> gln_conjugation_matrices(std::size_t n) {
  const std::size_t nn = n * n;
  std::vector<MatrixQ> mats;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      MatrixQ rho = MatrixQ::Zero(static_cast<Eigen::Index>(nn), static_cast<Eigen::Index>(nn));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t col = i * n + j;
          if (b == i) rho(static_cast<Eigen::Index>(a * n + j), static_cast<Eigen::Index>(col)) += Rational(1);
          if (j == a) rho(static_cast<Eigen::Index>(i * n + b), static_cast<Eigen::Index>(col)) -= Rational(1);
        }
      mats.push_back(std::move(rho));
    }
  return mats;
}

VarContextPtr matrix_space_context(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      names.push_back("x" + std::to_string(i) + std::to_string(j));
  return VarContext::make(std::move(names));
}

Polynomial matrix_trace_power(const VarContextPtr& ctx, std::size_t n, std::uint32_t k) {
  // tr(x^k) in the coordinates x_ij themselves.
  std::vector<MatrixQ> entry_basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entry_basis.push_back(unit_matrix(n, i, j));
  return trace_power(entry_basis, ctx, k);
}

CatalogEntry gln_conjugation(std::size_t n) {
  std::vector<std::string> names;
  std::vector<MatrixQ> gl_basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
      gl_basis.push_back(unit_matrix(n, a, b));
    }
  LieAlgebra g = matrix_lie_algebra(names, gl_basis);
  const VarContextPtr ctx = matrix_space_context(n);
  CatalogEntry e{"gln-conjugation-" + std::to_string(n),
                 "conjugation action of gl" + std::to_string(n) + " on " + std::to_string(n) +
                     "x" + std::to_string(n) + " matrix space",
                 Representation::make(std::move(g), gln_conjugation_matrices(n), ctx),
                 {},
                 {}};
  e.invariants = {{"tr_x2", matrix_trace_power(ctx, n, 2)},
                  {"tr_x3", matrix_trace_power(ctx, n, 3)}};
  e.expected.invariant_dims = {{1, 1}, {2, 2}};
  e.expected.rep_span_dim = n * n - 1;
  return e;
}

using Builder = std::function<CatalogEntry()>;

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> list = [] {
    std::vector<std::pair<std::string, Builder>> b;
    b.emplace_back("heisenberg3-coadjoint", heisenberg3_coadjoint);
    b.emplace_back("dixmier6-coadjoint", dixmier6_coadjoint);
    for (std::size_t n = 2; n <= 6; ++n)
      b.emplace_back("unipotent-standard-" + std::to_string(n),
                     [n] { return unipotent_standard(n); });
    for (std::size_t n = 2; n <= 6; ++n)
      b.emplace_back("principal-nilpotent-" + std::to_string(n),
                     [n] { return principal_nilpotent(n); });
    b.emplace_back("sl2-adjoint", sl2_adjoint);
    b.emplace_back("sl3-adjoint", sl3_adjoint);
    b.emplace_back("so3-standard", so3_standard);
    b.emplace_back("gln-conjugation-2", [] { return gln_conjugation(2); });
    b.emplace_back("gln-conjugation-3", [] { return gln_conjugation(3); });
    return b;
  }();
  return list;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : builders()) n.push_back(name);
    return n;
  }();
  return names;
}

CatalogEntry catalog_get(const std::string& name) {
  for (const auto& [n, fn] : builders())
    if (n == name) return fn();
  std::ostringstream os;
  os << "unknown catalog entry '" << name << "'; available:";
  for (const auto& n : catalog_names()) os << " " << n;
  throw ValidationError(os.str());
}

LieAlgebra matrix_lie_algebra(std::vector<std::string> names,
                              const std::vector<MatrixQ>& basis) {
  require(!basis.empty(), "matrix_lie_algebra: empty basis");
  const std::size_t dim = basis.size();
  const Eigen::Index n = basis.front().rows();

  // Columns of `span` are the vectorized basis elements.
  MatrixQ span(n * n, static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k)
    span.col(static_cast<Eigen::Index>(k)) = stack_vectorized({basis[k]}).row(0).transpose();
  require(rank_of(span) == static_cast<Eigen::Index>(dim),
          "matrix_lie_algebra: basis matrices are linearly dependent");

  std::vector<BracketSpec> brackets;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const MatrixQ c = basis[i] * basis[j] - basis[j] * basis[i];
      const auto coords = solve_linear(span, stack_vectorized({c}).row(0).transpose());
      require(coords.has_value(),
              "matrix_lie_algebra: bracket leaves the span of the basis");
      BracketSpec spec;
      spec.i = i;
      spec.j = j;
      for (std::size_t k = 0; k < dim; ++k) {
        const Rational& ck = (*coords)(static_cast<Eigen::Index>(k));
        if (!ck.is_zero()) spec.terms.emplace_back(k, ck);
      }
      if (!spec.terms.empty()) brackets.push_back(std::move(spec));
    }
  return LieAlgebra::make(dim, std::move(names), brackets);
}

TranspositionReport transposition_check(std::size_t n, std::uint32_t k_max) {
  require(n >= 2, "transposition_check: need n >= 2");
  require(k_max >= 2, "transposition_check: need k_max >= 2");
  const VarContextPtr ctx = matrix_space_context(n);

  // Transposition as an operator on the coordinate space: x_ij -> x_ji.
  const std::size_t nn = n * n;
  MatrixQ tau = MatrixQ::Zero(static_cast<Eigen::Index>(nn), static_cast<Eigen::Index>(nn));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      tau(static_cast<Eigen::Index>(i * n + j), static_cast<Eigen::Index>(j * n + i)) = Rational(1);

  TranspositionReport report;
  report.n = n;
  report.k_max = k_max;
  report.trace_powers_fixed = true;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    const Polynomial p = matrix_trace_power(ctx, n, k);
    if (p.pullback(tau) != p) report.trace_powers_fixed = false;
  }

  const std::vector<MatrixQ> ad = gln_conjugation_matrices(n);
  const Echelon span = reduced_row_echelon(stack_vectorized(ad));
  report.ad_span_dim = static_cast<std::size_t>(span.rank());
  report.transposition_in_ad_span =
      in_row_span(span, stack_vectorized({tau}).row(0).transpose());
  return report;
}

}  // namespace invkit
