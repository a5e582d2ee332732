#include "invkit/nilpotent_section.hpp"

#include <map>

#include "invkit/error.hpp"
#include "invkit/exact_linalg.hpp"
#include "invkit/vector_field.hpp"

namespace invkit {

MatrixQ shift_matrix(std::size_t n) {
  require(n >= 2, "shift_matrix: need n >= 2");
  MatrixQ x = MatrixQ::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i + 1 < n; ++i)
    x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = Rational(1);
  return x;
}

std::vector<Polynomial> nilpotent_flow(const MatrixQ& x) {
  require(x.rows() == x.cols() && x.rows() >= 1, "nilpotent_flow: square matrix required");
  const std::size_t n = static_cast<std::size_t>(x.rows());

  // Powers of x until they vanish; more than n steps means not nilpotent.
  std::vector<MatrixQ> powers;
  powers.push_back(MatrixQ::Identity(x.rows(), x.cols()));
  while (!exact_zero(powers.back())) {
    require(powers.size() <= n, "nilpotent_flow: matrix is not nilpotent");
    powers.push_back(powers.back() * x);
  }

  std::vector<std::string> names{"t"};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  const VarContextPtr ctx = VarContext::make(std::move(names));

  std::vector<Polynomial> flow;
  flow.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial comp = Polynomial::zero(ctx);
    for (std::size_t k = 0; k + 1 < powers.size(); ++k) {
      const Rational inv_fact = Rational(Int(1), factorial(static_cast<unsigned>(k)));
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& e = powers[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (e.is_zero()) continue;
        // (1/k!) * e * t^k * x_{j+1}
        Monomial m(ctx->total());
        m = m.raised(0, static_cast<std::uint32_t>(k)).raised(1 + j);
        comp = comp + Polynomial::from_monomial(ctx, m, inv_fact * e);
      }
    }
    flow.push_back(std::move(comp));
  }
  return flow;
}

namespace {

// Splits a polynomial on (t, x) by the exponent of t, re-reading each slice
// on the x-only context.
std::map<std::uint32_t, Polynomial> collect_by_t(const Polynomial& p, const VarContextPtr& xctx) {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t d = m.exp(0);
    std::vector<std::uint32_t> e(m.exps().begin() + 1, m.exps().end());
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Polynomial::zero(xctx)).first;
    it->second = it->second + Polynomial::from_monomial(xctx, Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace

SectionInvariants section_invariants(std::size_t n) {
  require(n >= 2, "section_invariants: need n >= 2");
  const std::vector<Polynomial> flow = nilpotent_flow(shift_matrix(n));
  const VarContextPtr xctx = default_context(n);

  // The solvability fact the construction rests on: component n-1 of the
  // flow is exactly x_{n-1} + t x_n.
  {
    const VarContextPtr& tctx = flow[n - 2].context();
    Polynomial expected = Polynomial::variable(tctx, n - 1);  // x_{n-1}
    Monomial txn(tctx->total());
    txn = txn.raised(0).raised(n);  // t * x_n
    expected = expected + Polynomial::from_monomial(tctx, txn, Rational(1));
    ensure(flow[n - 2] == expected, "flow component n-1 is not linear in t as expected");
  }

  const Polynomial xn = Polynomial::variable(xctx, n - 1);
  const Polynomial minus_xnm1 = -Polynomial::variable(xctx, n - 2);

  SectionInvariants out;
  out.n = n;
  for (std::size_t r = 1; r <= n - 2; ++r) {
    // Numerator of the section coordinate over the common denominator
    // x_n^D, where D is the t-degree of the flow component:
    //   N_r = sum_d g_d(x) (-x_{n-1})^d x_n^{D-d}.
    const auto slices = collect_by_t(flow[r - 1], xctx);
    const std::uint32_t big_d = slices.rbegin()->first;
    Polynomial num = Polynomial::zero(xctx);
    for (const auto& [d, g] : slices) {
      Polynomial term = g;
      for (std::uint32_t k = 0; k < d; ++k) term = term * minus_xnm1;
      for (std::uint32_t k = 0; k < big_d - d; ++k) term = term * xn;
      num = num + term;
    }
    // P_r = x_n^{n-r-1} N_r / x_n^D: the quotient must be exact.
    const std::uint32_t clear = n - r - 1;
    ensure(big_d >= clear, "section denominator exponent exceeds the clearing power");
    Monomial div(xctx->total());
    div = div.raised(n - 1, big_d - clear);
    out.polys.push_back(num.exact_monomial_quotient(div));
  }
  out.polys.push_back(xn);  // P_{n-1} = x_n

  // Invariance under N = x_2 d/dx_1 + ... + x_n d/dx_{n-1}.
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 0; i + 1 < n; ++i) coeffs.push_back(Polynomial::variable(xctx, i + 1));
  coeffs.push_back(Polynomial::zero(xctx));
  const VectorField gen = VectorField::make(xctx, std::move(coeffs));
  for (const auto& p : out.polys)
    ensure(gen.apply(p).is_zero(), "section invariant fails annihilation by the flow field");
  return out;
}

}  // namespace invkit
