#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invkit/lie_algebra.hpp"
#include "invkit/polynomial.hpp"

namespace invkit {

enum class Command {
  kInvariants,
  kStabilizer,
  kMembership,
  kVerdict,
  kTakiff,
  kSection,
  kRank,
  kCatalogList,
  kCatalogShow,
};

/// One fully described job: exactly one command, a source (catalog entry or
/// a declarative input document), and the command's numeric options. All
/// rational values travel as exact "p/q" text.
struct JobSpec {
  Command command = Command::kCatalogList;

  std::optional<std::string> catalog_name;  // --catalog NAME
  std::optional<std::string> input_text;    // content of --input / --algebra file

  std::optional<std::uint32_t> degree;      // invariants: single slice
  std::optional<std::uint32_t> max_degree;  // pooled degrees 1..D
  std::optional<std::uint32_t> bound;       // membership coefficient bound
  std::optional<std::uint32_t> m;           // takiff order
  std::optional<std::size_t> n;             // section size
  bool generators_complete = false;         // verdict flag
  bool distinguished = false;               // use the entry's invariant list
  std::vector<std::string> target_coeffs;   // membership target field
  std::optional<std::string> invariant_text;  // takiff base invariant
  std::vector<std::string> point;           // rank point, rational strings
  std::optional<std::string> show_name;     // catalog show NAME
};

/// Declarative input document: an [algebra] section (structure constants,
/// 1-based indices) and an optional [representation] section selecting
/// adjoint, coadjoint, or explicit matrices, plus coordinate names.
struct ParsedInput {
  LieAlgebra algebra;
  enum class RepKind { kAdjoint, kCoadjoint, kMatrices } rep_kind = RepKind::kAdjoint;
  std::vector<MatrixQ> matrices;  // only for kMatrices
  std::optional<std::vector<std::string>> coordinates;
  std::vector<std::string> parameters;
};

/// Parses the document text; errors carry the section/key path and reason.
ParsedInput parse_input_document(const std::string& text);

/// Realizes the representation described by a parsed document.
Representation build_representation(const ParsedInput& input);

}  // namespace invkit
