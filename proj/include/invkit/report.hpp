#pragma once

#include <string>
#include <vector>

#include "invkit/rational.hpp"

namespace invkit {

/// Writer for the structured result documents printed by the CLI. Keys are
/// emitted in call order, values are exact-rational or quoted text; the same
/// sequence of calls always yields byte-identical output.
class Report {
 public:
  Report() { kv_int("schema", 1); }

  void kv_int(const std::string& key, long long value);
  void kv_uint(const std::string& key, std::uint64_t value);
  void kv_bool(const std::string& key, bool value);
  void kv_str(const std::string& key, const std::string& value);  // quoted
  void kv_list(const std::string& key, const std::vector<std::string>& values);  // quoted items
  /// List of lists of quoted items (a matrix of rational strings).
  void kv_matrix(const std::string& key, const MatrixQ& m);
  void blank();

  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

/// Rows of a matrix as rational strings, row-major.
std::vector<std::string> matrix_row_strings(const MatrixQ& m, Eigen::Index row);

}  // namespace invkit
