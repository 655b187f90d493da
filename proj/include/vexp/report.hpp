#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vexp {

/// Floats at 12 significant digits, infinity as the literal "inf". Fixed
/// formatting keeps reports byte-identical across runs.
inline std::string fmt12(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf);
}

// A fixed-header table writable as CSV or JSON. Rows are appended in case
// order; the writer never reorders them.
class Report {
 public:
  explicit Report(std::vector<std::string> header)
      : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
      throw std::invalid_argument("Report: row width mismatch");
    rows_.push_back(std::move(row));
  }

  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < header_.size(); ++i)
      os << csv_field(header_[i]) << (i + 1 < header_.size() ? "," : "\n");
    for (const auto& row : rows_)
      for (std::size_t i = 0; i < row.size(); ++i)
        os << csv_field(row[i]) << (i + 1 < row.size() ? "," : "\n");
  }

  void write_json(std::ostream& os) const {
    os << "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      os << (r ? ",\n " : "\n ") << "{";
      for (std::size_t i = 0; i < header_.size(); ++i)
        os << (i ? "," : "") << "\"" << json_string(header_[i])
           << "\":\"" << json_string(rows_[r][i]) << "\"";
      os << "}";
    }
    os << "\n]\n";
  }

 private:
  static std::string json_string(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      if (c == '\n') {
        out += "\\n";
        continue;
      }
      out += c;
    }
    return out;
  }

  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
    return out;
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace vexp
