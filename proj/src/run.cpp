#include "invkit/run.hpp"

#include <ostream>

#include "invkit/catalog.hpp"
#include "invkit/error.hpp"
#include "invkit/invariant_solver.hpp"
#include "invkit/nilpotent_section.hpp"
#include "invkit/report.hpp"
#include "invkit/takiff_tools.hpp"
#include "invkit/vector_field.hpp"

namespace invkit {

namespace {

struct Source {
  Representation rep;
  std::string label;
  std::vector<std::pair<std::string, Polynomial>> distinguished;
};

Source resolve_source(const JobSpec& job) {
  require(!(job.catalog_name && job.input_text),
          "give either a catalog entry or an input document, not both");
  if (job.catalog_name) {
    CatalogEntry entry = catalog_get(*job.catalog_name);
    return {std::move(entry.rep), "catalog:" + *job.catalog_name, std::move(entry.invariants)};
  }
  require(job.input_text.has_value(), "no source: need --catalog or an input document");
  const ParsedInput input = parse_input_document(*job.input_text);
  return {build_representation(input), "input", {}};
}

void emit_header(Report& r, const char* command, const Source& src) {
  r.kv_str("command", command);
  r.kv_str("source", src.label);
  r.kv_list("coordinates", src.rep.space_context()->names());
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.str());
  return out;
}

// Pooled polynomial family for stabilizer / verdict / rank commands: the
// entry's distinguished invariants on request, else graded invariant bases
// up to max_degree.
std::vector<Polynomial> gather_invariants(const JobSpec& job, const Source& src,
                                          Report& r) {
  if (job.distinguished) {
    require(!src.distinguished.empty(),
            "--distinguished needs a catalog entry with a distinguished invariant list");
    std::vector<std::string> names;
    std::vector<Polynomial> polys;
    for (const auto& [name, p] : src.distinguished) {
      names.push_back(name);
      polys.push_back(p);
    }
    r.kv_str("invariant_source", "distinguished");
    r.kv_list("invariant_names", names);
    return polys;
  }
  require(job.max_degree.has_value(), "need --max-degree (or --distinguished)");
  const auto fields = rep_fields(src.rep);
  const GradedInvariantBasis graded = invariant_spaces(fields, *job.max_degree);
  r.kv_str("invariant_source", "graded");
  r.kv_uint("max_degree", *job.max_degree);
  std::vector<Polynomial> polys = graded.pooled();
  require(!polys.empty(), "no invariants found up to degree " +
                              std::to_string(*job.max_degree));
  return polys;
}

std::string run_invariants(const JobSpec& job) {
  const Source src = resolve_source(job);
  Report r;
  emit_header(r, "invariants", src);
  const auto fields = rep_fields(src.rep);
  require(job.degree.has_value() != job.max_degree.has_value(),
          "need exactly one of --degree or --max-degree");
  if (job.degree) {
    const auto basis = invariant_space(fields, *job.degree);
    r.kv_uint("degree", *job.degree);
    r.kv_uint("dimension", basis.size());
    r.kv_list("basis", poly_strings(basis));
  } else {
    const GradedInvariantBasis graded = invariant_spaces(fields, *job.max_degree);
    r.kv_uint("max_degree", *job.max_degree);
    for (const auto& [d, basis] : graded.by_degree) {
      const std::string prefix = "degree_" + std::to_string(d);
      r.kv_uint(prefix + "_dimension", basis.size());
      r.kv_list(prefix + "_basis", poly_strings(basis));
    }
  }
  return r.str();
}

std::string run_stabilizer(const JobSpec& job) {
  const Source src = resolve_source(job);
  Report r;
  emit_header(r, "stabilizer", src);
  const std::vector<Polynomial> polys = gather_invariants(job, src, r);
  r.kv_uint("invariant_count", polys.size());
  const StabilizerAlgebra s = linear_stabilizer(polys);
  r.kv_uint("dimension", s.dim());
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    r.kv_matrix("basis_" + std::to_string(i + 1), s.basis[i]);
  return r.str();
}

std::string run_membership(const JobSpec& job) {
  const Source src = resolve_source(job);
  Report r;
  emit_header(r, "membership", src);
  require(job.bound.has_value(), "need --bound");
  const VarContextPtr& ctx = src.rep.space_context();
  require(job.target_coeffs.size() == ctx->state_count(),
          "--target needs one coefficient polynomial per state variable");
  std::vector<Polynomial> coeffs;
  for (const auto& text : job.target_coeffs) coeffs.push_back(Polynomial::parse(ctx, text));
  const VectorField target = VectorField::make(ctx, std::move(coeffs));
  const auto generators = rep_fields(src.rep);

  r.kv_list("target", job.target_coeffs);
  r.kv_uint("bound", *job.bound);
  const MembershipCertificate cert = module_membership(target, generators, *job.bound);
  r.kv_str("outcome", cert.member ? "YES" : "NO");
  if (cert.member) {
    r.kv_list("coefficients", poly_strings(cert.coefficients));
  } else {
    r.kv_uint("exhausted_bound", cert.degree_bound);
  }
  return r.str();
}

void emit_verdict(Report& r, const VerdictRecord& rec) {
  r.kv_uint("stabilizer_dim", rec.stabilizer_dim);
  r.kv_uint("rep_span_dim", rec.rep_span_dim);
  r.kv_bool("generators_complete", rec.generators_complete);
  r.kv_str("verdict", verdict_name(rec.verdict));
}

std::string run_verdict(const JobSpec& job) {
  const Source src = resolve_source(job);
  Report r;
  emit_header(r, "verdict", src);
  const std::vector<Polynomial> polys = gather_invariants(job, src, r);
  r.kv_uint("invariant_count", polys.size());
  const VerdictRecord rec = characteristic_verdict(src.rep, polys, job.generators_complete);
  emit_verdict(r, rec);
  return r.str();
}

std::string run_takiff(const JobSpec& job) {
  require(job.input_text.has_value(), "takiff needs --algebra <file>");
  require(job.invariant_text.has_value(), "takiff needs --invariant <poly>");
  require(job.m.has_value(), "takiff needs -m");
  const ParsedInput input = parse_input_document(*job.input_text);
  const LieAlgebra& g = input.algebra;
  const VarContextPtr ctx = input.coordinates
                                ? VarContext::make(*input.coordinates, input.parameters)
                                : VarContext::make(g.basis_names(), input.parameters);
  require(ctx->state_count() == g.dim(),
          "coordinates must have one name per basis element");
  const Polynomial p = Polynomial::parse(ctx, *job.invariant_text);

  Report r;
  r.kv_str("command", "takiff");
  r.kv_str("source", "input");
  r.kv_uint("m", *job.m);
  r.kv_str("base_invariant", p.str());
  const TakiffInvariantFamily fam = derived_invariants(g, p, *job.m);
  r.kv_list("block_coordinates", fam.derived.front().context()->names());
  for (std::size_t j = 0; j < fam.derived.size(); ++j)
    r.kv_str("P" + std::to_string(j), fam.derived[j].str());
  const TakiffVerdict tv = verify_takiff_corollary(g, {p}, *job.m);
  r.kv_uint("pooled_count", tv.pooled_count);
  r.kv_uint("evidence_degree", tv.max_degree);
  emit_verdict(r, tv.record);
  return r.str();
}

std::string run_section(const JobSpec& job) {
  require(job.n.has_value(), "section needs -n");
  const SectionInvariants s = section_invariants(*job.n);
  Report r;
  r.kv_str("command", "section");
  r.kv_uint("n", s.n);
  for (std::size_t i = 0; i < s.polys.size(); ++i)
    r.kv_str("P" + std::to_string(i + 1), s.polys[i].str());
  return r.str();
}

std::string run_rank(const JobSpec& job) {
  const Source src = resolve_source(job);
  Report r;
  emit_header(r, "rank", src);
  const std::vector<Polynomial> polys = gather_invariants(job, src, r);
  const VarContextPtr& ctx = src.rep.space_context();
  require(job.point.size() == ctx->state_count(),
          "--point needs one rational per state variable");
  VectorQ point(static_cast<Eigen::Index>(job.point.size()));
  for (std::size_t i = 0; i < job.point.size(); ++i)
    point(static_cast<Eigen::Index>(i)) = Rational::parse(job.point[i]);
  r.kv_list("point", job.point);
  r.kv_uint("invariant_count", polys.size());
  r.kv_uint("rank", jacobian_rank(polys, point));
  return r.str();
}

std::string run_catalog_list() {
  Report r;
  r.kv_str("command", "catalog-list");
  r.kv_list("names", catalog_names());
  return r.str();
}

std::string run_catalog_show(const JobSpec& job) {
  require(job.show_name.has_value(), "catalog show needs a name");
  const CatalogEntry entry = catalog_get(*job.show_name);
  Report r;
  r.kv_str("command", "catalog-show");
  r.kv_str("name", entry.name);
  r.kv_str("provenance", entry.provenance);
  r.kv_uint("algebra_dim", entry.rep.algebra().dim());
  r.kv_list("basis_names", entry.rep.algebra().basis_names());
  r.kv_uint("space_dim", entry.rep.space_dim());
  r.kv_list("coordinates", entry.rep.space_context()->names());
  const auto fields = rep_fields(entry.rep);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::vector<std::string> coeffs;
    for (const auto& c : fields[i].coefficients()) coeffs.push_back(c.str());
    r.kv_list("field_" + entry.rep.algebra().basis_names()[i], coeffs);
  }
  for (const auto& [name, p] : entry.invariants) r.kv_str("invariant_" + name, p.str());
  const ExpectedFacts& facts = entry.expected;
  for (const auto& [d, dim] : facts.invariant_dims)
    r.kv_uint("expected_invariant_dim_degree_" + std::to_string(d), dim);
  if (facts.stabilizer_dim) r.kv_uint("expected_stabilizer_dim", *facts.stabilizer_dim);
  if (facts.rep_span_dim) r.kv_uint("expected_rep_span_dim", *facts.rep_span_dim);
  if (facts.verdict) r.kv_str("expected_verdict", verdict_name(*facts.verdict));
  r.kv_bool("generators_complete", facts.generators_complete);
  return r.str();
}

}  // namespace

std::string run_job(const JobSpec& job) {
  switch (job.command) {
    case Command::kInvariants:
      return run_invariants(job);
    case Command::kStabilizer:
      return run_stabilizer(job);
    case Command::kMembership:
      return run_membership(job);
    case Command::kVerdict:
      return run_verdict(job);
    case Command::kTakiff:
      return run_takiff(job);
    case Command::kSection:
      return run_section(job);
    case Command::kRank:
      return run_rank(job);
    case Command::kCatalogList:
      return run_catalog_list();
    case Command::kCatalogShow:
      return run_catalog_show(job);
  }
  throw ValidationError("unknown command");
}

int run_cli(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    out << run_job(job);
    return 0;
  } catch (const InternalError& e) {
    err << "schema = 1\nerror = \"" << e.what() << "\"\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "schema = 1\nerror = \"" << e.what() << "\"\n";
    return 1;
  }
}

}  // namespace invkit
