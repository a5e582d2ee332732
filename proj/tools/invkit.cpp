// invkit: exact invariant-theory computations for Lie algebra actions.
//
// Everything is computed over arbitrary-precision rationals; results are
// printed as deterministic structured documents (schema = 1).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "invkit/error.hpp"
#include "invkit/run.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invkit::ValidationError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct SourceArgs {
  std::string catalog;
  std::string input;
};

void add_source_options(CLI::App* cmd, SourceArgs& args) {
  cmd->add_option("--catalog", args.catalog, "catalog entry name");
  cmd->add_option("--input", args.input, "declarative input document");
}

void apply_source(const SourceArgs& args, invkit::JobSpec& job) {
  if (!args.catalog.empty()) job.catalog_name = args.catalog;
  if (!args.input.empty()) job.input_text = read_file(args.input);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants, stabilizers, and membership certificates for "
               "Lie algebra actions over the rationals"};
  app.require_subcommand(1);

  invkit::JobSpec job;
  SourceArgs src;
  std::string target_text;
  std::string point_text;
  std::string algebra_path;
  std::string invariant_text;
  std::uint32_t degree = 0, max_degree = 0, bound = 0, m_order = 0;
  std::size_t n_size = 0;

  auto* invariants = app.add_subcommand("invariants", "graded invariant bases");
  add_source_options(invariants, src);
  auto* deg_opt = invariants->add_option("--degree", degree, "single homogeneous degree");
  auto* maxdeg_opt = invariants->add_option("--max-degree", max_degree, "all degrees 1..D");

  auto* stabilizer = app.add_subcommand("stabilizer", "linear stabilizer algebra");
  add_source_options(stabilizer, src);
  auto* stab_maxdeg = stabilizer->add_option("--max-degree", max_degree, "pool degrees 1..D");
  auto* stab_dist = stabilizer->add_flag("--distinguished",
                                         "use the entry's distinguished invariants");

  auto* membership = app.add_subcommand("membership", "polynomial module membership");
  add_source_options(membership, src);
  membership->add_option("--target", target_text,
                         "target field: comma-separated coefficient polynomials")
      ->required();
  membership->add_option("--bound", bound, "coefficient degree bound")->required();

  auto* verdict = app.add_subcommand("verdict", "characteristic verdict");
  add_source_options(verdict, src);
  auto* verd_maxdeg = verdict->add_option("--max-degree", max_degree, "pool degrees 1..D");
  auto* verd_dist = verdict->add_flag("--distinguished",
                                      "use the entry's distinguished invariants");
  verdict->add_flag("--generators-complete", job.generators_complete,
                    "assert the pooled family generates all invariants");

  auto* takiff = app.add_subcommand("takiff", "derived invariants on the Takiff algebra");
  takiff->add_option("--algebra", algebra_path, "algebra document")->required();
  takiff->add_option("--invariant", invariant_text, "base invariant polynomial")->required();
  takiff->add_option("-m", m_order, "truncation order")->required();

  auto* section = app.add_subcommand("section", "rational-section invariants of the shift flow");
  section->add_option("-n", n_size, "space dimension")->required();

  auto* rank = app.add_subcommand("rank", "Jacobian rank of the invariant map at a point");
  add_source_options(rank, src);
  auto* rank_maxdeg = rank->add_option("--max-degree", max_degree, "pool degrees 1..D");
  auto* rank_dist = rank->add_flag("--distinguished",
                                   "use the entry's distinguished invariants");
  rank->add_option("--point", point_text, "comma-separated rational coordinates")->required();

  auto* catalog = app.add_subcommand("catalog", "browse the example catalog");
  auto* cat_list = catalog->add_subcommand("list", "list entry names");
  auto* cat_show = catalog->add_subcommand("show", "show one entry");
  std::string show_name;
  cat_show->add_option("name", show_name, "entry name")->required();
  catalog->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (invariants->parsed()) {
      job.command = invkit::Command::kInvariants;
      apply_source(src, job);
      if (deg_opt->count()) job.degree = degree;
      if (maxdeg_opt->count()) job.max_degree = max_degree;
    } else if (stabilizer->parsed()) {
      job.command = invkit::Command::kStabilizer;
      apply_source(src, job);
      if (stab_maxdeg->count()) job.max_degree = max_degree;
      job.distinguished = stab_dist->count() > 0;
    } else if (membership->parsed()) {
      job.command = invkit::Command::kMembership;
      apply_source(src, job);
      job.target_coeffs = split_commas(target_text);
      job.bound = bound;
    } else if (verdict->parsed()) {
      job.command = invkit::Command::kVerdict;
      apply_source(src, job);
      if (verd_maxdeg->count()) job.max_degree = max_degree;
      job.distinguished = verd_dist->count() > 0;
    } else if (takiff->parsed()) {
      job.command = invkit::Command::kTakiff;
      job.input_text = read_file(algebra_path);
      job.invariant_text = invariant_text;
      job.m = m_order;
    } else if (section->parsed()) {
      job.command = invkit::Command::kSection;
      job.n = n_size;
    } else if (rank->parsed()) {
      job.command = invkit::Command::kRank;
      apply_source(src, job);
      if (rank_maxdeg->count()) job.max_degree = max_degree;
      job.distinguished = rank_dist->count() > 0;
      job.point = split_commas(point_text);
    } else if (catalog->parsed()) {
      if (cat_show->parsed()) {
        job.command = invkit::Command::kCatalogShow;
        job.show_name = show_name;
      } else {
        (void)cat_list;
        job.command = invkit::Command::kCatalogList;
      }
    }
  } catch (const invkit::Error& e) {
    std::cerr << "schema = 1\nerror = \"" << e.what() << "\"\n";
    return 1;
  }

  return invkit::run_cli(job, std::cout, std::cerr);
}
