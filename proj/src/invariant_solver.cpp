#include "invkit/invariant_solver.hpp"

#include <algorithm>

#include "invkit/error.hpp"
#include "invkit/parallel.hpp"

namespace invkit {

namespace {

// Monomials of total degree `degree` in the state variables, lifted to the
// full context (parameter exponents zero), descending grlex.
std::vector<Monomial> state_slice(const VarContext& ctx, std::uint32_t degree) {
  const auto base = monomial_basis(ctx.state_count(), degree);
  if (ctx.param_count() == 0) return base;
  std::vector<Monomial> lifted;
  lifted.reserve(base.size());
  for (const auto& m : base) {
    std::vector<std::uint32_t> e(ctx.total(), 0);
    for (std::size_t i = 0; i < ctx.state_count(); ++i) e[i] = m.exp(i);
    lifted.emplace_back(std::move(e));
  }
  return lifted;
}

using MonomialIndex = std::map<Monomial, std::size_t, bool (*)(const Monomial&, const Monomial&)>;

MonomialIndex index_of(const std::vector<Monomial>& monos) {
  MonomialIndex idx(grlex_greater);
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

void check_fields(const std::vector<VectorField>& fields, const char* who) {
  require(!fields.empty(), std::string(who) + ": at least one field required");
  for (const auto& f : fields) {
    require_same_context(f.context(), fields.front().context());
    require(f.is_linear(),
            std::string(who) + ": non-linear field supplied (graded slicing invalid)");
  }
}

}  // namespace

std::vector<Polynomial> invariant_space(const std::vector<VectorField>& fields,
                                        std::uint32_t degree) {
  require(degree >= 1, "invariant_space: degree must be at least 1");
  check_fields(fields, "invariant_space");
  const VarContextPtr ctx = fields.front().context();

  const std::vector<Monomial> basis = state_slice(*ctx, degree);
  const MonomialIndex row_of = index_of(basis);
  const auto nb = static_cast<Eigen::Index>(basis.size());

  // One block of rows per field: the matrix of its action on the slice.
  MatrixQ stacked = MatrixQ::Zero(static_cast<Eigen::Index>(fields.size()) * nb, nb);
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const Eigen::Index row0 = static_cast<Eigen::Index>(f) * nb;
    for (Eigen::Index j = 0; j < nb; ++j) {
      const Polynomial image =
          fields[f].apply(Polynomial::from_monomial(ctx, basis[static_cast<std::size_t>(j)], Rational(1)));
      for (const auto& [m, c] : image.terms()) {
        const auto it = row_of.find(m);
        ensure(it != row_of.end(), "linear field left the graded slice");
        stacked(row0 + static_cast<Eigen::Index>(it->second), j) = c;
      }
    }
  }

  std::vector<Polynomial> result;
  for (const VectorQ& v : nullspace(stacked)) {
    std::vector<Polynomial::Term> terms;
    for (Eigen::Index j = 0; j < v.size(); ++j)
      if (!v(j).is_zero()) terms.emplace_back(basis[static_cast<std::size_t>(j)], v(j));
    result.push_back(Polynomial::from_terms(ctx, std::move(terms)));
  }

  // Do not trust the solve: re-check annihilation exactly.
  for (const auto& p : result)
    for (const auto& f : fields)
      ensure(f.apply(p).is_zero(), "invariant_space result fails exact annihilation re-check");
  return result;
}

std::vector<Polynomial> GradedInvariantBasis::pooled() const {
  std::vector<Polynomial> out;
  for (const auto& [d, polys] : by_degree) out.insert(out.end(), polys.begin(), polys.end());
  return out;
}

GradedInvariantBasis invariant_spaces(const std::vector<VectorField>& fields,
                                      std::uint32_t max_degree) {
  require(max_degree >= 1, "invariant_spaces: max degree must be at least 1");
  std::vector<std::vector<Polynomial>> slices(max_degree);
  parallel::parallel_for(max_degree, [&](std::size_t i) {
    slices[i] = invariant_space(fields, static_cast<std::uint32_t>(i + 1));
  });
  GradedInvariantBasis out;
  for (std::uint32_t d = 1; d <= max_degree; ++d)
    out.by_degree.emplace(d, std::move(slices[d - 1]));
  return out;
}

StabilizerAlgebra linear_stabilizer(const std::vector<Polynomial>& polys) {
  require(!polys.empty(), "linear_stabilizer: at least one polynomial required");
  const VarContextPtr ctx = polys.front().context();
  for (const auto& p : polys) {
    require_same_context(p.context(), ctx);
    require(!p.uses_parameter_vars(),
            "linear_stabilizer: polynomials must not involve parameter variables");
  }
  const std::size_t n = ctx->state_count();
  const auto nn = static_cast<Eigen::Index>(n * n);

  // Unknowns a_ij (row-major). For each input polynomial the identity
  // sum_ij a_ij x_j dp/dx_i = 0 contributes one equation per monomial.
  std::vector<VectorQ> rows;
  for (const auto& p : polys) {
    std::map<Monomial, VectorQ, bool (*)(const Monomial&, const Monomial&)> eq(grlex_greater);
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial dp = p.diff(i);
      if (dp.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Polynomial q = Polynomial::variable(ctx, j) * dp;
        for (const auto& [m, c] : q.terms()) {
          auto it = eq.find(m);
          if (it == eq.end()) it = eq.emplace(m, VectorQ::Zero(nn)).first;
          it->second(static_cast<Eigen::Index>(i * n + j)) += c;
        }
      }
    }
    for (auto& [m, v] : eq) rows.push_back(std::move(v));
  }

  MatrixQ system = MatrixQ::Zero(static_cast<Eigen::Index>(rows.size()), nn);
  for (std::size_t r = 0; r < rows.size(); ++r) system.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();

  StabilizerAlgebra s;
  for (const VectorQ& v : nullspace(system)) {
    MatrixQ a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            v(static_cast<Eigen::Index>(i * n + j));
    s.basis.push_back(std::move(a));
  }

  // Exact validation: each basis matrix annihilates every input polynomial.
  for (const auto& a : s.basis) {
    const VectorField field = VectorField::from_matrix(a, ctx);
    for (const auto& p : polys)
      ensure(field.apply(p).is_zero(), "stabilizer basis fails exact annihilation re-check");
  }
  return s;
}

bool bracket_closed(const StabilizerAlgebra& s) {
  if (s.basis.empty()) return true;
  const Echelon span = reduced_row_echelon(stack_vectorized(s.basis));
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    for (std::size_t j = i + 1; j < s.basis.size(); ++j) {
      const MatrixQ c = s.basis[i] * s.basis[j] - s.basis[j] * s.basis[i];
      if (!in_row_span(span, stack_vectorized({c}).row(0).transpose())) return false;
    }
  return true;
}

MembershipCertificate module_membership(const VectorField& target,
                                        const std::vector<VectorField>& generators,
                                        std::uint32_t coeff_degree_bound) {
  check_fields(generators, "module_membership");
  const VarContextPtr ctx = target.context();
  require_same_context(ctx, generators.front().context());
  const std::size_t n = ctx->state_count();
  const std::size_t nv = ctx->total();
  const std::size_t ng = generators.size();

  MembershipCertificate cert;
  cert.member = false;
  cert.degree_bound = coeff_degree_bound;

  // Occurring total degrees across the target components.
  std::vector<std::uint32_t> degrees;
  for (const auto& c : target.coefficients())
    for (const auto d : c.occurring_degrees()) degrees.push_back(d);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  std::vector<Polynomial> phi(ng, Polynomial::zero(ctx));
  for (const auto k : degrees) {
    // Degree-k component of the identity needs phi parts of degree k-1.
    if (k == 0) return cert;  // constants are never hit by phi * linear field
    if (k - 1 > coeff_degree_bound) return cert;
    const std::vector<Monomial> coeff_monos = monomial_basis(nv, k - 1);
    const std::vector<Monomial> eq_monos = monomial_basis(nv, k);
    const MonomialIndex eq_row = index_of(eq_monos);
    const auto rows_per_comp = static_cast<Eigen::Index>(eq_monos.size());

    MatrixQ a = MatrixQ::Zero(rows_per_comp * static_cast<Eigen::Index>(n),
                              static_cast<Eigen::Index>(ng * coeff_monos.size()));
    VectorQ b = VectorQ::Zero(a.rows());
    for (std::size_t g = 0; g < ng; ++g)
      for (std::size_t mu = 0; mu < coeff_monos.size(); ++mu) {
        const auto col = static_cast<Eigen::Index>(g * coeff_monos.size() + mu);
        for (std::size_t comp = 0; comp < n; ++comp) {
          const Polynomial& gc = generators[g].coefficients()[comp];
          if (gc.is_zero()) continue;
          const Polynomial prod =
              Polynomial::from_monomial(ctx, coeff_monos[mu], Rational(1)) * gc;
          for (const auto& [m, c] : prod.terms()) {
            const auto it = eq_row.find(m);
            ensure(it != eq_row.end(), "membership product left the expected slice");
            a(static_cast<Eigen::Index>(comp) * rows_per_comp +
                  static_cast<Eigen::Index>(it->second),
              col) = c;
          }
        }
      }
    for (std::size_t comp = 0; comp < n; ++comp) {
      const Polynomial tc = target.coefficients()[comp].homogeneous_component(k);
      for (const auto& [m, c] : tc.terms()) {
        const auto it = eq_row.find(m);
        ensure(it != eq_row.end(), "target term left the expected slice");
        b(static_cast<Eigen::Index>(comp) * rows_per_comp +
          static_cast<Eigen::Index>(it->second)) = c;
      }
    }

    const auto solution = solve_linear(a, b);
    if (!solution) return cert;
    for (std::size_t g = 0; g < ng; ++g) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t mu = 0; mu < coeff_monos.size(); ++mu) {
        const Rational& c = (*solution)(static_cast<Eigen::Index>(g * coeff_monos.size() + mu));
        if (!c.is_zero()) terms.emplace_back(coeff_monos[mu], c);
      }
      phi[g] = phi[g] + Polynomial::from_terms(ctx, std::move(terms));
    }
  }

  // Symbolic re-verification before a YES leaves the solver.
  VectorField combo = VectorField::zero(ctx);
  for (std::size_t g = 0; g < ng; ++g) combo = combo + generators[g].scaled(phi[g]);
  ensure(combo == target, "membership certificate failed symbolic re-verification");

  cert.member = true;
  cert.coefficients = std::move(phi);
  return cert;
}

std::size_t jacobian_rank(const std::vector<Polynomial>& polys, const VectorQ& point) {
  require(!polys.empty(), "jacobian_rank: at least one polynomial required");
  const VarContextPtr ctx = polys.front().context();
  for (const auto& p : polys) require_same_context(p.context(), ctx);
  require(static_cast<std::size_t>(point.size()) == ctx->state_count(),
          "jacobian_rank: point length must equal the state-variable count");
  MatrixQ jac(static_cast<Eigen::Index>(polys.size()),
              static_cast<Eigen::Index>(ctx->state_count()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (std::size_t i = 0; i < ctx->state_count(); ++i)
      jac(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) =
          polys[r].diff(i).eval_state(point);
  return static_cast<std::size_t>(rank_of(jac));
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kCharacteristic:
      return "CHARACTERISTIC";
    case Verdict::kNotCharacteristic:
      return "NOT_CHARACTERISTIC";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

VerdictRecord characteristic_verdict(const Representation& rep,
                                     const std::vector<Polynomial>& invariant_polys,
                                     bool generators_complete) {
  require(!invariant_polys.empty(), "characteristic_verdict: empty polynomial family");
  const std::vector<VectorField> fields =
      rep_fields(rep, invariant_polys.front().context());
  for (const auto& p : invariant_polys)
    for (const auto& f : fields)
      require(f.apply(p).is_zero(),
              "characteristic_verdict: polynomial '" + p.str() +
                  "' is not invariant under the representation");

  VerdictRecord rec;
  rec.generators_complete = generators_complete;
  rec.stabilizer = linear_stabilizer(invariant_polys);
  rec.stabilizer_dim = rec.stabilizer.dim();
  rec.rep_span_dim = static_cast<std::size_t>(rank_of(stack_vectorized(rep.matrices())));

  // I is contained in S: every representation matrix reduces to zero against
  // the stabilizer's echelon basis.
  if (!rec.stabilizer.basis.empty()) {
    const Echelon span = reduced_row_echelon(stack_vectorized(rec.stabilizer.basis));
    for (const auto& m : rep.matrices())
      ensure(in_row_span(span, stack_vectorized({m}).row(0).transpose()),
             "representation matrix escaped the stabilizer span");
  } else {
    ensure(rec.rep_span_dim == 0, "representation matrix escaped the stabilizer span");
  }

  if (rec.stabilizer_dim == rec.rep_span_dim)
    rec.verdict = Verdict::kCharacteristic;
  else if (generators_complete)
    rec.verdict = Verdict::kNotCharacteristic;
  else
    rec.verdict = Verdict::kInconclusive;
  return rec;
}

}  // namespace invkit
