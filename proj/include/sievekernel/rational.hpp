#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sievekernel {

// Small exact rational, enough for sieve parameters like eps = 1/200 and the
// published constants 164/200, 162/200.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long p, long long q) : num(p), den(q) {
    if (q == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend Rational operator*(const Rational& a, long long k) {
    return Rational(a.num * k, a.den);
  }

  // "p/q" or a bare integer "p"
  static Rational parse(std::string_view txt) {
    const auto slash = txt.find('/');
    try {
      if (slash == std::string_view::npos)
        return Rational(std::stoll(std::string(txt)), 1);
      return Rational(std::stoll(std::string(txt.substr(0, slash))),
                      std::stoll(std::string(txt.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational::parse: bad rational '" +
                                  std::string(txt) + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("Rational::parse: rational out of range '" +
                                  std::string(txt) + "'");
    }
  }
};

}  // namespace sievekernel
