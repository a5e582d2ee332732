#include <doctest.h>

#include <random>

#include "invkit/error.hpp"
#include "invkit/polynomial.hpp"

using namespace invkit;

namespace {

Polynomial var(const VarContextPtr& ctx, std::size_t i) { return Polynomial::variable(ctx, i); }

// Small random polynomial with a fixed generator (deterministic tests).
Polynomial random_poly(const VarContextPtr& ctx, std::mt19937& rng, int terms = 4,
                       std::uint32_t max_exp = 2) {
  std::vector<Polynomial::Term> ts;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(ctx->total());
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_exp + 1));
    const long long num = static_cast<long long>(rng() % 11) - 5;
    const long long den = 1 + static_cast<long long>(rng() % 4);
    ts.emplace_back(Monomial(std::move(e)), Rational(Int(num), Int(den)));
  }
  return Polynomial::from_terms(ctx, std::move(ts));
}

MatrixQ random_matrix(std::mt19937& rng, Eigen::Index n) {
  MatrixQ a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = Rational(static_cast<long long>(rng() % 7) - 3);
  return a;
}

}  // namespace

TEST_CASE("monomial_basis enumerates graded slices in order") {
  const auto b22 = monomial_basis(2, 2);
  REQUIRE(b22.size() == 3);  // x1^2, x1 x2, x2^2
  CHECK(b22[0].exps() == std::vector<std::uint32_t>{2, 0});
  CHECK(b22[1].exps() == std::vector<std::uint32_t>{1, 1});
  CHECK(b22[2].exps() == std::vector<std::uint32_t>{0, 2});
  CHECK(monomial_basis(1, 7).size() == 1);
  CHECK(monomial_basis(1, 7)[0].exp(0) == 7);
  CHECK(monomial_basis(3, 2).size() == 6);
}

TEST_CASE("monomial_basis count matches the binomial formula") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint32_t d = 0; d <= 8; ++d)
      CHECK(monomial_basis(n, d).size() == binomial(n + d - 1, d));
}

TEST_CASE("ring operations") {
  const auto ctx = default_context(2);
  const Polynomial x1 = var(ctx, 0), x2 = var(ctx, 1);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  const Polynomial p = x1 * x2 + x2 * x2;
  CHECK(p + Polynomial::zero(ctx) == p);
  CHECK((x2 * x2 * Rational(1, 2)) * Rational(2) == x2 * x2);
  CHECK((p - p).is_zero());

  const auto other = default_context(3);
  CHECK_THROWS_AS(p + Polynomial::zero(other), ValidationError);
}

TEST_CASE("differentiation") {
  const auto ctx = default_context(3);
  const Polynomial x1 = var(ctx, 0), x2 = var(ctx, 1), x3 = var(ctx, 2);
  // d(x1 x3 - 1/2 x2^2)/dx2 = -x2
  const Polynomial p = x1 * x3 - x2 * x2 * Rational(1, 2);
  CHECK(p.diff(1) == -x2);
  CHECK(Polynomial::constant(ctx, Rational(5)).diff(0).is_zero());
  CHECK((x1 * x1 * x1).diff(0) == x1 * x1 * Rational(3));
}

TEST_CASE("Leibniz rule on random polynomials") {
  const auto ctx = default_context(3);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_poly(ctx, rng);
    const Polynomial q = random_poly(ctx, rng);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK((p * q).diff(i) == p.diff(i) * q + p * q.diff(i));
  }
}

TEST_CASE("pullback under linear substitution") {
  const auto ctx = default_context(2);
  const Polynomial x1 = var(ctx, 0), x2 = var(ctx, 1);
  const Polynomial p = x1 * x1 + x2 * x2;

  MatrixQ rot(2, 2);
  rot << Rational(0), Rational(-1), Rational(1), Rational(0);
  CHECK(p.pullback(rot) == p);

  CHECK(p.pullback(MatrixQ::Identity(2, 2)) == p);

  MatrixQ wrong(3, 3);
  CHECK_THROWS_AS(p.pullback(wrong), ValidationError);
}

TEST_CASE("pullback fixes trace powers under transposition of 2x2 matrices") {
  // Coordinates x11, x12, x21, x22; tr(x^2) = x11^2 + 2 x12 x21 + x22^2.
  const auto ctx = VarContext::make({"x11", "x12", "x21", "x22"});
  const Polynomial tr2 = var(ctx, 0) * var(ctx, 0) + var(ctx, 1) * var(ctx, 2) * Rational(2) +
                         var(ctx, 3) * var(ctx, 3);
  MatrixQ tau = MatrixQ::Zero(4, 4);
  tau(0, 0) = Rational(1);
  tau(1, 2) = Rational(1);
  tau(2, 1) = Rational(1);
  tau(3, 3) = Rational(1);
  CHECK(tr2.pullback(tau) == tr2);
}

TEST_CASE("pullback is functorial on random matrices") {
  const auto ctx = default_context(3);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial p = random_poly(ctx, rng);
    const MatrixQ a = random_matrix(rng, 3);
    const MatrixQ b = random_matrix(rng, 3);
    CHECK(p.pullback(a).pullback(b) == p.pullback(MatrixQ(a * b)));
  }
}

TEST_CASE("taylor coefficients: binomial and linear cases") {
  const auto ctx = VarContext::make({"x"});
  const Polynomial x = var(ctx, 0);

  // x^2, m = 1 -> [x_0^2, 2 x_0 x_1]
  const auto sq = (x * x).taylor_coefficients(1);
  REQUIRE(sq.size() == 2);
  const auto b1 = sq[0].context();
  CHECK(sq[0] == var(b1, 0) * var(b1, 0));
  CHECK(sq[1] == var(b1, 0) * var(b1, 1) * Rational(2));

  // x, m = 2 -> [x_0, x_1, x_2]
  const auto lin = x.taylor_coefficients(2);
  REQUIRE(lin.size() == 3);
  const auto b2 = lin[0].context();
  CHECK(lin[0] == var(b2, 0));
  CHECK(lin[1] == var(b2, 1));
  CHECK(lin[2] == var(b2, 2));
}

TEST_CASE("taylor coefficients of the sl2 Casimir against an independent substitution") {
  const auto ctx = VarContext::make({"a", "b", "c"});
  const Polynomial q = var(ctx, 0) * var(ctx, 0) + var(ctx, 1) * var(ctx, 2);
  const auto fam = q.taylor_coefficients(1);
  REQUIRE(fam.size() == 2);
  const auto blocks = fam[0].context();  // a_0, b_0, c_0, a_1, b_1, c_1

  // Frozen hand expansion: P_0 = q(x_0), P_1 = 2 a0 a1 + b0 c1 + c0 b1.
  const Polynomial a0 = var(blocks, 0), b0 = var(blocks, 1), c0 = var(blocks, 2);
  const Polynomial a1 = var(blocks, 3), b1 = var(blocks, 4), c1 = var(blocks, 5);
  CHECK(fam[0] == a0 * a0 + b0 * c0);
  CHECK(fam[1] == a0 * a1 * Rational(2) + b0 * c1 + c0 * b1);

  // Independent route: substitute with an explicit deformation variable t
  // and read off the t-slices.
  const auto tctx = VarContext::make({"t", "a_0", "b_0", "c_0", "a_1", "b_1", "c_1"});
  const Polynomial t = var(tctx, 0);
  std::vector<Polynomial> images = {var(tctx, 1) + t * var(tctx, 4),
                                    var(tctx, 2) + t * var(tctx, 5),
                                    var(tctx, 3) + t * var(tctx, 6)};
  const Polynomial expanded = q.subst(images);
  // Slice by the exponent of t and compare against the family.
  for (std::uint32_t j = 0; j <= 1; ++j) {
    std::vector<Polynomial::Term> slice;
    for (const auto& [m, c] : expanded.terms()) {
      if (m.exp(0) != j) continue;
      std::vector<std::uint32_t> e(m.exps().begin() + 1, m.exps().end());
      slice.emplace_back(Monomial(std::move(e)), c);
    }
    CHECK(Polynomial::from_terms(blocks, std::move(slice)) == fam[j]);
  }
}

TEST_CASE("taylor series identity: sum_j t^j P_j reproduces the substitution") {
  std::mt19937 rng(11);
  const auto ctx = default_context(2);
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const Polynomial p = random_poly(ctx, rng, 5, 3);
    const auto fam = p.taylor_coefficients(m);
    REQUIRE(fam.size() == m + 1);
    const auto blocks = fam[0].context();

    // Explicit t-context: t, then all block variables.
    std::vector<std::string> names{"t"};
    for (const auto& n : blocks->names()) names.push_back(n);
    const auto tctx = VarContext::make(names);
    const Polynomial t = var(tctx, 0);

    // x_i -> sum_a t^a x_{a,i}
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < 2; ++i) {
      Polynomial im = Polynomial::zero(tctx);
      Polynomial tpow = Polynomial::constant(tctx, Rational(1));
      for (std::uint32_t a = 0; a <= m; ++a) {
        im = im + tpow * var(tctx, 1 + a * 2 + i);
        tpow = tpow * t;
      }
      images.push_back(im);
    }
    Polynomial substituted = p.subst(images);
    // Truncate above t^m.
    std::vector<Polynomial::Term> kept;
    for (const auto& [mm, c] : substituted.terms())
      if (mm.exp(0) <= m) kept.emplace_back(mm, c);
    substituted = Polynomial::from_terms(tctx, std::move(kept));

    // Assemble sum_j t^j P_j on the t-context.
    Polynomial assembled = Polynomial::zero(tctx);
    for (std::uint32_t j = 0; j <= m; ++j) {
      std::vector<Polynomial::Term> lifted;
      for (const auto& [mm, c] : fam[j].terms()) {
        std::vector<std::uint32_t> e(tctx->total(), 0);
        e[0] = j;
        for (std::size_t i = 0; i < mm.n_vars(); ++i) e[i + 1] = mm.exp(i);
        lifted.emplace_back(Monomial(std::move(e)), c);
      }
      assembled = assembled + Polynomial::from_terms(tctx, std::move(lifted));
    }
    CHECK(assembled == substituted);
  }
}

TEST_CASE("parameter variables ride along through taylor expansion") {
  const auto ctx = VarContext::make({"x"}, {"w"});
  const Polynomial p = var(ctx, 0) * var(ctx, 1);  // w * x
  const auto fam = p.taylor_coefficients(1);
  const auto blocks = fam[0].context();
  CHECK(blocks->state_count() == 2);
  CHECK(blocks->param_count() == 1);
  CHECK(fam[0] == var(blocks, 0) * var(blocks, 2));  // w * x_0
  CHECK(fam[1] == var(blocks, 1) * var(blocks, 2));  // w * x_1
}

TEST_CASE("polynomial text format round-trips bit-exactly") {
  const auto ctx = default_context(3);
  const Polynomial x1 = var(ctx, 0), x2 = var(ctx, 1), x3 = var(ctx, 2);
  const Polynomial p = x1 * x3 - x2 * x2 * Rational(1, 2);
  CHECK(p.str() == "x1*x3 - 1/2*x2^2");
  CHECK(Polynomial::parse(ctx, p.str()) == p);

  CHECK(Polynomial::zero(ctx).str() == "0");
  CHECK(Polynomial::parse(ctx, "0") == Polynomial::zero(ctx));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial q = random_poly(ctx, rng, 6, 3);
    CHECK(Polynomial::parse(ctx, q.str()) == q);
  }

  // Parsing accepts reasonable input forms.
  CHECK(Polynomial::parse(ctx, "-x1 + 2*x2^3") == -x1 + x2 * x2 * x2 * Rational(2));
  CHECK(Polynomial::parse(ctx, "3/2") == Polynomial::constant(ctx, Rational(3, 2)));
  CHECK(Polynomial::parse(ctx, "x1*x1") == x1 * x1);

  CHECK_THROWS_AS(Polynomial::parse(ctx, "y1"), ValidationError);
  CHECK_THROWS_AS(Polynomial::parse(ctx, "x1 +"), ValidationError);
  CHECK_THROWS_AS(Polynomial::parse(ctx, ""), ValidationError);
  CHECK_THROWS_AS(Polynomial::parse(ctx, "x1 x2"), ValidationError);
}

TEST_CASE("printing orders terms by descending graded lex") {
  const auto ctx = default_context(2);
  const Polynomial x1 = var(ctx, 0), x2 = var(ctx, 1);
  const Polynomial p = x2 + x1 * x1 + Polynomial::constant(ctx, Rational(1));
  CHECK(p.str() == "x1^2 + x2 + 1");
}

TEST_CASE("evaluation and monomial quotients") {
  const auto ctx = default_context(2);
  const Polynomial x1 = var(ctx, 0), x2 = var(ctx, 1);
  const Polynomial p = x1 * x2 * Rational(3) - x2 * x2;
  VectorQ pt(2);
  pt << Rational(1, 2), Rational(4);
  CHECK(p.eval(pt) == Rational(3) * Rational(1, 2) * Rational(4) - Rational(16));

  const Polynomial q = (x1 * x1 * x2 + x1 * x2 * x2).exact_monomial_quotient(
      Monomial(std::vector<std::uint32_t>{1, 1}));
  CHECK(q == x1 + x2);
  CHECK_THROWS_AS((x1 + x2).exact_monomial_quotient(Monomial(std::vector<std::uint32_t>{1, 0})),
                  InternalError);
}
