#include "invkit/report.hpp"

namespace invkit {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void Report::kv_int(const std::string& key, long long value) {
  out_ += key + " = " + std::to_string(value) + "\n";
}

void Report::kv_uint(const std::string& key, std::uint64_t value) {
  out_ += key + " = " + std::to_string(value) + "\n";
}

void Report::kv_bool(const std::string& key, bool value) {
  out_ += key + " = " + (value ? std::string("true") : std::string("false")) + "\n";
}

void Report::kv_str(const std::string& key, const std::string& value) {
  out_ += key + " = " + quoted(value) + "\n";
}

void Report::kv_list(const std::string& key, const std::vector<std::string>& values) {
  out_ += key + " = [";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ += ", ";
    out_ += quoted(values[i]);
  }
  out_ += "]\n";
}

void Report::kv_matrix(const std::string& key, const MatrixQ& m) {
  out_ += key + " = [";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out_ += ", ";
    out_ += "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out_ += ", ";
      out_ += quoted(m(i, j).str());
    }
    out_ += "]";
  }
  out_ += "]\n";
}

void Report::blank() { out_ += "\n"; }

std::vector<std::string> matrix_row_strings(const MatrixQ& m, Eigen::Index row) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(row, j).str());
  return out;
}

}  // namespace invkit
