#pragma once

#include <cstdint>
#include <vector>

namespace invkit {

/// Exponent vector of fixed length (one slot per ambient variable).
/// Total degree is the sum of the slots.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : exps_(n_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t n_vars() const { return exps_.size(); }
  std::uint32_t exp(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }

  std::uint32_t degree() const;
  bool is_constant() const { return degree() == 0; }

  Monomial times(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;

  /// Raises one slot by `delta` (used when multiplying by a single variable).
  Monomial raised(std::size_t var, std::uint32_t delta = 1) const;
  /// Lowers one slot by one; the slot must be positive.
  Monomial lowered(std::size_t var) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order with the declared variable order: higher total
/// degree wins; ties break lexicographically with earlier variables heavier.
bool grlex_less(const Monomial& a, const Monomial& b);
inline bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_less(b, a); }

/// All monomials in `n_vars` variables of exact total degree `degree`,
/// listed descending in the graded lex order. The count is the stars-and-bars
/// binomial C(n_vars + degree - 1, degree).
std::vector<Monomial> monomial_basis(std::size_t n_vars, std::uint32_t degree);

/// C(n, k) as an unsigned 64-bit count (sizes in scope stay far below 2^64).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace invkit
