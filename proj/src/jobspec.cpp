#include "invkit/jobspec.hpp"

#include <cctype>
#include <map>

#include "invkit/error.hpp"

namespace invkit {

namespace {

// --- tiny document value model ---------------------------------------------

struct DocValue {
  enum class Kind { kInt, kStr, kList } kind = Kind::kInt;
  long long num = 0;
  std::string text;
  std::vector<DocValue> items;
};

struct DocParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos && i < s.size(); ++i)
      if (s[i] == '\n') ++line;
    throw ValidationError("input document, line " + std::to_string(line) + ": " + why);
  }

  void skip_ws_and_comments() {
    while (pos < s.size()) {
      const char c = s[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '#') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws_and_comments();
    return pos >= s.size();
  }
  char peek() {
    skip_ws_and_comments();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string read_ident() {
    skip_ws_and_comments();
    const std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '-'))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return std::string(s.substr(start, pos - start));
  }

  DocValue read_value() {
    const char c = peek();
    DocValue v;
    if (c == '"') {
      ++pos;
      v.kind = DocValue::Kind::kStr;
      while (pos < s.size() && s[pos] != '"') {
        if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
        v.text += s[pos++];
      }
      if (pos >= s.size()) fail("unterminated string");
      ++pos;
      return v;
    }
    if (c == '[' || c == '(') {
      const char close = c == '[' ? ']' : ')';
      ++pos;
      v.kind = DocValue::Kind::kList;
      if (!accept(close)) {
        for (;;) {
          v.items.push_back(read_value());
          if (accept(close)) break;
          expect(',');
          if (accept(close)) break;  // trailing comma
        }
      }
      return v;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      skip_ws_and_comments();
      const std::size_t start = pos;
      if (s[pos] == '-') ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start || (s[start] == '-' && pos == start + 1)) fail("malformed integer");
      v.kind = DocValue::Kind::kInt;
      v.num = std::stoll(std::string(s.substr(start, pos - start)));
      return v;
    }
    fail("expected a value");
  }
};

using Section = std::map<std::string, DocValue>;
using Document = std::map<std::string, Section>;

Document parse_document(const std::string& text) {
  DocParser p{text};
  Document doc;
  std::string current;
  while (!p.eof()) {
    if (p.accept('[')) {
      current = p.read_ident();
      p.expect(']');
      if (!doc.emplace(current, Section{}).second)
        p.fail("duplicate section [" + current + "]");
      continue;
    }
    const std::string key = p.read_ident();
    p.expect('=');
    if (current.empty()) p.fail("key '" + key + "' outside any section");
    if (!doc[current].emplace(key, p.read_value()).second)
      p.fail("duplicate key '" + key + "' in section [" + current + "]");
  }
  return doc;
}

// --- typed accessors with path-carrying errors ------------------------------

[[noreturn]] void path_fail(const std::string& path, const std::string& why) {
  throw ValidationError("input document, " + path + ": " + why);
}

const DocValue& get(const Section& sec, const std::string& section_name,
                    const std::string& key) {
  const auto it = sec.find(key);
  if (it == sec.end()) path_fail("[" + section_name + "]", "missing key '" + key + "'");
  return it->second;
}

long long as_int(const DocValue& v, const std::string& path) {
  if (v.kind != DocValue::Kind::kInt) path_fail(path, "expected an integer");
  return v.num;
}

const std::string& as_str(const DocValue& v, const std::string& path) {
  if (v.kind != DocValue::Kind::kStr) path_fail(path, "expected a quoted string");
  return v.text;
}

const std::vector<DocValue>& as_list(const DocValue& v, const std::string& path) {
  if (v.kind != DocValue::Kind::kList) path_fail(path, "expected a list");
  return v.items;
}

std::vector<std::string> as_str_list(const DocValue& v, const std::string& path) {
  std::vector<std::string> out;
  for (const auto& item : as_list(v, path)) out.push_back(as_str(item, path));
  return out;
}

}  // namespace

ParsedInput parse_input_document(const std::string& text) {
  const Document doc = parse_document(text);
  const auto alg_it = doc.find("algebra");
  if (alg_it == doc.end())
    throw ValidationError("input document: missing [algebra] section");
  const Section& alg = alg_it->second;

  const long long dim = as_int(get(alg, "algebra", "dim"), "[algebra].dim");
  if (dim < 1) path_fail("[algebra].dim", "dimension must be positive");
  std::vector<std::string> names;
  if (alg.count("names")) {
    names = as_str_list(alg.at("names"), "[algebra].names");
  } else {
    for (long long i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  }
  if (static_cast<long long>(names.size()) != dim)
    path_fail("[algebra].names", "need exactly dim names");

  std::vector<BracketSpec> brackets;
  if (alg.count("brackets")) {
    const auto& list = as_list(alg.at("brackets"), "[algebra].brackets");
    for (std::size_t b = 0; b < list.size(); ++b) {
      const std::string path = "[algebra].brackets[" + std::to_string(b + 1) + "]";
      const auto& entry = as_list(list[b], path);
      if (entry.size() != 3) path_fail(path, "expected [i, j, [(k, \"p/q\"), ...]]");
      BracketSpec spec;
      const long long i = as_int(entry[0], path + ".i");
      const long long j = as_int(entry[1], path + ".j");
      if (i < 1 || j < 1 || i > dim || j > dim)
        path_fail(path, "indices must lie in 1.." + std::to_string(dim));
      if (i >= j) path_fail(path, "bracket pairs need i < j (1-based)");
      spec.i = static_cast<std::size_t>(i - 1);
      spec.j = static_cast<std::size_t>(j - 1);
      for (const auto& term : as_list(entry[2], path + ".terms")) {
        const auto& kv = as_list(term, path + ".terms");
        if (kv.size() != 2) path_fail(path, "each term is (k, \"p/q\")");
        const long long k = as_int(kv[0], path + ".terms.k");
        if (k < 1 || k > dim)
          path_fail(path, "term index must lie in 1.." + std::to_string(dim));
        spec.terms.emplace_back(static_cast<std::size_t>(k - 1),
                                Rational::parse(as_str(kv[1], path + ".terms.c")));
      }
      brackets.push_back(std::move(spec));
    }
  }

  ParsedInput input{LieAlgebra::make(static_cast<std::size_t>(dim), names, brackets)};

  const auto rep_it = doc.find("representation");
  if (rep_it != doc.end()) {
    const Section& rep = rep_it->second;
    const std::string kind =
        rep.count("type") ? as_str(rep.at("type"), "[representation].type") : "adjoint";
    if (kind == "adjoint") {
      input.rep_kind = ParsedInput::RepKind::kAdjoint;
    } else if (kind == "coadjoint") {
      input.rep_kind = ParsedInput::RepKind::kCoadjoint;
    } else if (kind == "matrices") {
      input.rep_kind = ParsedInput::RepKind::kMatrices;
      const auto& mats = as_list(get(rep, "representation", "matrices"),
                                 "[representation].matrices");
      if (mats.size() != static_cast<std::size_t>(dim))
        path_fail("[representation].matrices", "need one matrix per basis element");
      for (std::size_t k = 0; k < mats.size(); ++k) {
        const std::string path = "[representation].matrices[" + std::to_string(k + 1) + "]";
        const auto& rows = as_list(mats[k], path);
        const std::size_t nrows = rows.size();
        if (nrows == 0) path_fail(path, "empty matrix");
        MatrixQ m(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(nrows));
        for (std::size_t r = 0; r < nrows; ++r) {
          const auto& row = as_list(rows[r], path);
          if (row.size() != nrows) path_fail(path, "matrix must be square");
          for (std::size_t c = 0; c < nrows; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Rational::parse(as_str(row[c], path));
        }
        input.matrices.push_back(std::move(m));
      }
    } else {
      path_fail("[representation].type", "expected adjoint, coadjoint, or matrices");
    }
    if (rep.count("coordinates"))
      input.coordinates = as_str_list(rep.at("coordinates"), "[representation].coordinates");
    if (rep.count("parameters"))
      input.parameters = as_str_list(rep.at("parameters"), "[representation].parameters");
  }
  return input;
}

Representation build_representation(const ParsedInput& input) {
  std::size_t space_dim = input.algebra.dim();
  if (input.rep_kind == ParsedInput::RepKind::kMatrices) {
    require(!input.matrices.empty(), "representation: no matrices given");
    space_dim = static_cast<std::size_t>(input.matrices.front().rows());
  }
  VarContextPtr ctx;
  if (input.coordinates) {
    require(input.coordinates->size() == space_dim,
            "[representation].coordinates: need one name per space dimension");
    ctx = VarContext::make(*input.coordinates, input.parameters);
  } else if (input.rep_kind == ParsedInput::RepKind::kMatrices) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= space_dim; ++i) names.push_back("x" + std::to_string(i));
    ctx = VarContext::make(std::move(names), input.parameters);
  } else {
    ctx = VarContext::make(input.algebra.basis_names(), input.parameters);
  }
  switch (input.rep_kind) {
    case ParsedInput::RepKind::kAdjoint:
      return adjoint_rep(input.algebra, ctx);
    case ParsedInput::RepKind::kCoadjoint:
      return coadjoint_rep(input.algebra, ctx);
    case ParsedInput::RepKind::kMatrices:
      return Representation::make(input.algebra, input.matrices, ctx);
  }
  throw ValidationError("representation: unknown kind");
}

}  // namespace invkit
