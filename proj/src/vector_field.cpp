#include "invkit/vector_field.hpp"

#include "invkit/error.hpp"

namespace invkit {

VectorField VectorField::make(VarContextPtr ctx, std::vector<Polynomial> coefficients) {
  require(coefficients.size() == ctx->state_count(),
          "field needs one coefficient per state variable");
  for (const auto& c : coefficients) require_same_context(c.context(), ctx);
  return VectorField(std::move(ctx), std::move(coefficients));
}

VectorField VectorField::zero(VarContextPtr ctx) {
  std::vector<Polynomial> coeffs(ctx->state_count(), Polynomial::zero(ctx));
  return VectorField(std::move(ctx), std::move(coeffs));
}

VectorField VectorField::from_matrix(const MatrixQ& a, VarContextPtr ctx) {
  const auto n = static_cast<Eigen::Index>(ctx->state_count());
  require(a.rows() == n && a.cols() == n,
          "from_matrix: matrix must be square of the state dimension");
  std::vector<Polynomial> coeffs;
  coeffs.reserve(ctx->state_count());
  for (Eigen::Index i = 0; i < n; ++i) {
    Polynomial c = Polynomial::zero(ctx);
    for (Eigen::Index j = 0; j < n; ++j)
      if (!a(i, j).is_zero())
        c = c + Polynomial::variable(ctx, static_cast<std::size_t>(j)) * a(i, j);
    coeffs.push_back(std::move(c));
  }
  return VectorField(std::move(ctx), std::move(coeffs));
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool VectorField::is_linear() const {
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous(1) || c.uses_parameter_vars()) return false;
  }
  return true;
}

Polynomial VectorField::apply(const Polynomial& p) const {
  require_same_context(p.context(), ctx_);
  Polynomial out = Polynomial::zero(ctx_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    out = out + coeffs_[i] * p.diff(i);
  }
  return out;
}

VectorField VectorField::scaled(const Polynomial& phi) const {
  require_same_context(phi.context(), ctx_);
  std::vector<Polynomial> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(c * phi);
  return VectorField(ctx_, std::move(coeffs));
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_context(a.ctx_, b.ctx_);
  std::vector<Polynomial> coeffs;
  coeffs.reserve(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) coeffs.push_back(a.coeffs_[i] + b.coeffs_[i]);
  return VectorField(a.ctx_, std::move(coeffs));
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  require_same_context(a.ctx_, b.ctx_);
  std::vector<Polynomial> coeffs;
  coeffs.reserve(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) coeffs.push_back(a.coeffs_[i] - b.coeffs_[i]);
  return VectorField(a.ctx_, std::move(coeffs));
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (!(*a.ctx_ == *b.ctx_)) return false;
  return a.coeffs_ == b.coeffs_;
}

VectorField commutator(const VectorField& l, const VectorField& m) {
  require_same_context(l.context(), m.context());
  std::vector<Polynomial> coeffs;
  coeffs.reserve(l.coefficients().size());
  for (std::size_t i = 0; i < l.coefficients().size(); ++i)
    coeffs.push_back(m.apply(l.coefficients()[i]) - l.apply(m.coefficients()[i]));
  return VectorField::make(l.context(), std::move(coeffs));
}

std::vector<VectorField> rep_fields(const Representation& rep) {
  return rep_fields(rep, rep.space_context());
}

std::vector<VectorField> rep_fields(const Representation& rep, const VarContextPtr& ctx) {
  require(ctx->state_count() == rep.space_dim(),
          "context state count must match the representation dimension");
  std::vector<VectorField> fields;
  fields.reserve(rep.matrices().size());
  for (const auto& m : rep.matrices()) fields.push_back(VectorField::from_matrix(m, ctx));
  return fields;
}

}  // namespace invkit
