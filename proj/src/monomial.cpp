#include "invkit/monomial.hpp"

#include <numeric>

#include "invkit/error.hpp"

namespace invkit {

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::times(const Monomial& o) const {
  ensure(exps_.size() == o.exps_.size(), "monomial length mismatch");
  std::vector<std::uint32_t> e = exps_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& o) const {
  ensure(exps_.size() == o.exps_.size(), "monomial length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  ensure(divisible_by(o), "monomial division with remainder");
  std::vector<std::uint32_t> e = exps_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::raised(std::size_t var, std::uint32_t delta) const {
  std::vector<std::uint32_t> e = exps_;
  e[var] += delta;
  return Monomial(std::move(e));
}

Monomial Monomial::lowered(std::size_t var) const {
  ensure(exps_[var] > 0, "lowering a zero exponent");
  std::vector<std::uint32_t> e = exps_;
  e[var] -= 1;
  return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: lexicographic, earlier variable heavier.
  for (std::size_t i = 0; i < a.n_vars(); ++i)
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
  return false;
}

std::vector<Monomial> monomial_basis(std::size_t n_vars, std::uint32_t degree) {
  require(n_vars >= 1, "monomial_basis needs at least one variable");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binomial(n_vars + degree - 1, degree)));
  std::vector<std::uint32_t> cur(n_vars, 0);
  // Descending grlex within one degree = descending lex: fill the earliest
  // slot with the largest exponent first.
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t remaining) -> void {
    if (var + 1 == n_vars) {
      cur[var] = remaining;
      out.emplace_back(cur);
      cur[var] = 0;
      return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at every step
  }
  return r;
}

}  // namespace invkit
