#pragma once

#include <string>
#include <vector>

#include "invkit/lie_algebra.hpp"
#include "invkit/polynomial.hpp"

namespace invkit {

/// Polynomial vector field sum_i c_i(x) d/dx_i on the state variables of a
/// context. Coefficients may involve parameter variables; the field never
/// differentiates a parameter.
class VectorField {
 public:
  static VectorField make(VarContextPtr ctx, std::vector<Polynomial> coefficients);
  static VectorField zero(VarContextPtr ctx);

  /// Linear field v -> Av: the i-th coefficient is sum_j A(i,j) x_j.
  static VectorField from_matrix(const MatrixQ& a, VarContextPtr ctx);

  const VarContextPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Degree-preserving: every coefficient is homogeneous of degree 1 in the
  /// state variables and free of parameters (the zero field qualifies).
  bool is_linear() const;

  /// L(p) = sum_i c_i dp/dx_i over the state variables only.
  Polynomial apply(const Polynomial& p) const;

  /// phi * L, coefficient-wise.
  VectorField scaled(const Polynomial& phi) const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend bool operator==(const VectorField& a, const VectorField& b);
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

 private:
  VectorField(VarContextPtr ctx, std::vector<Polynomial> coeffs)
      : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}
  VarContextPtr ctx_;
  std::vector<Polynomial> coeffs_;
};

/// Lie bracket of fields, oriented so that the linear-field map is a
/// homomorphism: commutator(from_matrix(A), from_matrix(B)) equals
/// from_matrix(AB - BA). Coefficient-wise this is M(L_i) - L(M_i); as an
/// operator on functions it acts by M o L - L o M.
VectorField commutator(const VectorField& l, const VectorField& m);

/// One linear field per basis element of the representation's algebra,
/// realized on the representation's space context (or `ctx` if given).
std::vector<VectorField> rep_fields(const Representation& rep);
std::vector<VectorField> rep_fields(const Representation& rep, const VarContextPtr& ctx);

}  // namespace invkit
