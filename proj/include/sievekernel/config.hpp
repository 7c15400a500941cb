#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rational.hpp"

namespace sievekernel {

enum class OutputFormat { csv, markdown };

inline std::string to_string(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "markdown";
}
inline OutputFormat output_format_from(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "markdown") return OutputFormat::markdown;
  throw std::invalid_argument("output_format: expected csv or markdown");
}

inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct RunConfig {
  int m = 1000;
  double inflation = 1.0 + 1e-9;
  int taylor_order = 30;
  int n_max = 450;
  Rational eps{1, 200};
  double oracle_tol = 1e-9;
  OutputFormat output_format = OutputFormat::csv;

  void validate() const {
    if (m < 100 || m % 2 != 0)
      throw std::invalid_argument("config: m must be even and >= 100");
    if (n_max < 2) throw std::invalid_argument("config: n_max must be >= 2");
    if (taylor_order < 4)
      throw std::invalid_argument("config: taylor_order must be >= 4");
    if (!(eps.value() > 0.0) || !(eps.value() < 1.0))
      throw std::invalid_argument("config: eps must be in (0, 1)");
    if (!(inflation >= 1.0))
      throw std::invalid_argument("config: inflation must be >= 1");
    if (!(oracle_tol > 0.0))
      throw std::invalid_argument("config: oracle_tol must be > 0");
  }

  std::string emit() const {
    std::ostringstream out;
    out << "m = " << m << "\n";
    out << "inflation = " << format_full(inflation) << "\n";
    out << "taylor_order = " << taylor_order << "\n";
    out << "n_max = " << n_max << "\n";
    out << "eps = " << eps.str() << "\n";
    out << "oracle_tol = " << format_full(oracle_tol) << "\n";
    out << "output_format = " << to_string(output_format) << "\n";
    return out.str();
  }

  void set(std::string_view key, std::string_view value) {
    const std::string v(value);
    if (key == "m") m = std::stoi(v);
    else if (key == "inflation") inflation = std::stod(v);
    else if (key == "taylor_order") taylor_order = std::stoi(v);
    else if (key == "n_max") n_max = std::stoi(v);
    else if (key == "eps") eps = Rational::parse(v);
    else if (key == "oracle_tol") oracle_tol = std::stod(v);
    else if (key == "output_format") output_format = output_format_from(v);
    else throw std::invalid_argument("config: unknown key '" + std::string(key) + "'");
  }

  // flat "key = value" lines; '#' starts a comment
  static RunConfig parse(std::string_view text) {
    RunConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("config: expected 'key = value': " + t);
      cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
  }
};

}  // namespace sievekernel
