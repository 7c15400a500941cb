#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"

namespace sievekernel {

inline std::string format_fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Table-2 style display: ceil to integer above 0.1, decade ceiling below.
inline std::string format_band(double v) {
  if (v <= 0.0) return "0";
  if (v > 0.1) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld",
                  static_cast<long long>(std::ceil(v - 1e-9)));
    return buf;
  }
  const int k = static_cast<int>(std::ceil(std::log10(v) - 1e-12));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "1e%d", k);
  return buf;
}

struct TableArtifact {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> provenance;

  void add_provenance(const RunConfig& cfg) {
    provenance.emplace_back("tool", "sievekernel 1.0.0");
    provenance.emplace_back("kind", kind);
    std::istringstream in(cfg.emit());
    std::string line;
    while (std::getline(in, line)) {
      const auto eq = line.find(" = ");
      provenance.emplace_back(line.substr(0, eq), line.substr(eq + 3));
    }
  }

  std::string to_csv() const {
    std::ostringstream out;
    for (const auto& [k, v] : provenance) out << "# " << k << " = " << v << "\n";
    for (size_t i = 0; i < columns.size(); ++i)
      out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
    return out.str();
  }

  std::string to_markdown() const {
    std::ostringstream out;
    out << "|";
    for (const auto& c : columns) out << " " << c << " |";
    out << "\n|";
    for (size_t i = 0; i < columns.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& row : rows) {
      out << "|";
      for (const auto& cell : row) out << " " << cell << " |";
      out << "\n";
    }
    out << "\n";
    for (const auto& [k, v] : provenance) out << "> " << k << " = " << v << "\n";
    return out.str();
  }

  std::string render(OutputFormat f) const {
    return f == OutputFormat::csv ? to_csv() : to_markdown();
  }
};

}  // namespace sievekernel
