#include "invkit/takiff_tools.hpp"

#include <algorithm>

#include "invkit/error.hpp"
#include "invkit/vector_field.hpp"

namespace invkit {

TakiffInvariantFamily derived_invariants(const LieAlgebra& g, const Polynomial& p,
                                         std::uint32_t m) {
  require(p.context()->state_count() == g.dim(),
          "derived_invariants: polynomial state count must equal dim g");
  const std::vector<VectorField> base_fields = rep_fields(adjoint_rep(g), p.context());
  for (const auto& f : base_fields)
    require(f.apply(p).is_zero(),
            "derived_invariants: base polynomial is not invariant on g");

  TakiffInvariantFamily fam{p, m, p.taylor_coefficients(m)};

  // The derived polynomials are invariants of the Takiff algebra; verify
  // exactly rather than trusting the construction.
  const VarContextPtr blocks = block_context(*p.context(), m);
  const std::vector<VectorField> takiff_fields = rep_fields(adjoint_rep(takiff(g, m)), blocks);
  for (const auto& pj : fam.derived)
    for (const auto& f : takiff_fields)
      ensure(f.apply(pj).is_zero(), "derived invariant fails annihilation on the Takiff algebra");
  return fam;
}

TakiffVerdict verify_takiff_corollary(const LieAlgebra& g,
                                      const std::vector<Polynomial>& base_invariants,
                                      std::uint32_t m) {
  require(!base_invariants.empty(), "verify_takiff_corollary: no base invariants given");
  for (const auto& p : base_invariants)
    require_same_context(p.context(), base_invariants.front().context());

  std::vector<Polynomial> pooled;
  for (const auto& p : base_invariants) {
    TakiffInvariantFamily fam = derived_invariants(g, p, m);
    for (auto& pj : fam.derived)
      if (!pj.is_zero()) pooled.push_back(std::move(pj));
  }
  require(!pooled.empty(), "verify_takiff_corollary: all derived invariants vanish");

  const VarContextPtr blocks = block_context(*base_invariants.front().context(), m);
  const Representation rep = adjoint_rep(takiff(g, m), blocks);

  TakiffVerdict out;
  out.m = m;
  out.base_count = base_invariants.size();
  out.pooled_count = pooled.size();
  for (const auto& p : pooled) out.max_degree = std::max(out.max_degree, p.degree());
  out.record = characteristic_verdict(rep, pooled, /*generators_complete=*/false);
  return out;
}

Polynomial restrict_top_block(const Polynomial& p_on_blocks, std::size_t base_state_count,
                              std::uint32_t m) {
  require(m >= 1, "restrict_top_block: need m >= 1");
  const VarContextPtr& ctx = p_on_blocks.context();
  require(ctx->state_count() == (m + 1) * base_state_count,
          "restrict_top_block: context does not look like an m-block context");

  // Target: blocks 0..m-1 with the same names, parameters carried over.
  std::vector<std::string> state;
  for (std::size_t i = 0; i < m * base_state_count; ++i) state.push_back(ctx->name(i));
  std::vector<std::string> params;
  for (std::size_t i = ctx->state_count(); i < ctx->total(); ++i) params.push_back(ctx->name(i));
  const VarContextPtr target = VarContext::make(std::move(state), std::move(params));

  std::vector<Polynomial> images;
  images.reserve(ctx->total());
  for (std::size_t i = 0; i < m * base_state_count; ++i)
    images.push_back(Polynomial::variable(target, i));
  for (std::size_t i = 0; i < base_state_count; ++i)
    images.push_back(Polynomial::zero(target));
  for (std::size_t i = 0; i < ctx->param_count(); ++i)
    images.push_back(Polynomial::variable(target, m * base_state_count + i));
  return p_on_blocks.subst(images);
}

}  // namespace invkit
