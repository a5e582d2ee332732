#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invkit/monomial.hpp"
#include "invkit/rational.hpp"

namespace invkit {

/// Ordered variable list: state variables first, then parameter variables.
/// Parameter variables take part in coefficients but are never flowed or
/// differentiated by a vector field.
class VarContext {
 public:
  static std::shared_ptr<const VarContext> make(std::vector<std::string> state_names,
                                                std::vector<std::string> param_names = {});

  std::size_t state_count() const { return n_state_; }
  std::size_t param_count() const { return names_.size() - n_state_; }
  std::size_t total() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_state(std::size_t i) const { return i < n_state_; }

  /// Index of a variable name, or npos.
  std::size_t index_of(std::string_view name) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.n_state_ == b.n_state_ && a.names_ == b.names_;
  }

 private:
  VarContext(std::vector<std::string> names, std::size_t n_state)
      : names_(std::move(names)), n_state_(n_state) {}
  std::vector<std::string> names_;
  std::size_t n_state_;
};

using VarContextPtr = std::shared_ptr<const VarContext>;

/// Convenience: a context with state variables x1..xn and no parameters.
VarContextPtr default_context(std::size_t n);

/// Sparse multivariate polynomial over Rational on a fixed variable context.
///
/// Terms are kept normalized: no zero coefficients, sorted descending in the
/// graded lex order (the leading term comes first). Values are immutable;
/// every operation returns a fresh polynomial, so sharing across threads is
/// safe.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(VarContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(VarContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(VarContextPtr ctx, Rational c);
  static Polynomial variable(VarContextPtr ctx, std::size_t index);
  static Polynomial from_monomial(VarContextPtr ctx, Monomial m, Rational c);
  /// Builds from an arbitrary term list (normalizes: merges, drops zeros).
  static Polynomial from_terms(VarContextPtr ctx, std::vector<Term> terms);

  const VarContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree (0 for the zero polynomial).
  std::uint32_t degree() const;
  bool is_homogeneous(std::uint32_t d) const;
  /// The sum of all terms of exact total degree d.
  Polynomial homogeneous_component(std::uint32_t d) const;
  /// All degrees that occur, ascending.
  std::vector<std::uint32_t> occurring_degrees() const;

  Rational coeff(const Monomial& m) const;
  /// True if some term has a positive exponent on variable i.
  bool uses_variable(std::size_t i) const;
  bool uses_parameter_vars() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Exact partial derivative with respect to variable `var_index`.
  Polynomial diff(std::size_t var_index) const;

  /// Substitutes variable i by images[i]; all images must share one target
  /// context. The image list covers every variable (state and parameter).
  Polynomial subst(std::span<const Polynomial> images) const;

  /// p(Ax): the linear substitution x_i -> sum_j A(i,j) x_j on the state
  /// variables; A must be square of size state_count. Parameters pass
  /// through unchanged.
  Polynomial pullback(const MatrixQ& a) const;

  /// Coefficients [P_0, ..., P_m] of t^j in p(x_0 + t x_1 + ... + t^m x_m),
  /// truncated after t^m. The result lives on the block context whose state
  /// variables are the m+1 blocks "v_a" of this context's state variables
  /// (block-major), with parameter variables carried over unchanged.
  std::vector<Polynomial> taylor_coefficients(std::uint32_t m) const;

  /// Evaluates at a full point (one value per variable, parameters included).
  Rational eval(const VectorQ& point) const;
  /// Evaluates at a state point; rejects polynomials that use parameters.
  Rational eval_state(const VectorQ& state_point) const;

  /// Divides by a single monomial; every term must be divisible.
  Polynomial exact_monomial_quotient(const Monomial& m) const;

  /// Canonical text form, e.g. "x1*x3 - 1/2*x2^2"; "0" for zero. Parsing the
  /// result with the same context reproduces the polynomial bit-exactly.
  std::string str() const;
  static Polynomial parse(const VarContextPtr& ctx, std::string_view text);

 private:
  VarContextPtr ctx_;
  std::vector<Term> terms_;  // descending grlex, nonzero coefficients
};

/// Throws ValidationError unless both polynomials live on equal contexts.
void require_same_context(const Polynomial& a, const Polynomial& b);
void require_same_context(const VarContextPtr& a, const VarContextPtr& b);

/// Block context used by taylor_coefficients and the Takiff construction:
/// state variables "v_0" ... "v_m" for every state variable v of `base`
/// (block-major: all of block 0, then block 1, ...), parameters carried over.
VarContextPtr block_context(const VarContext& base, std::uint32_t m);

}  // namespace invkit
