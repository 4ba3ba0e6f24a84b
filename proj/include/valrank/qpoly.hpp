#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "valrank/fields.hpp"

namespace valrank {

/// Polynomial in t with rational coefficients, stored little-endian and
/// trimmed so that the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t ord() const;  // exponent of the lowest nonzero term; zero polynomial -> 0
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rational& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly shift_down(std::size_t k) const;  // divide by t^k; requires ord() >= k
  QPoly shift_up(std::size_t k) const;    // multiply by t^k
  QPoly truncated(std::size_t m) const;   // reduce modulo t^m

  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  static QPoly gcd(QPoly a, QPoly b);  // monic, or zero

  /// Canonical sparse string: increasing degree, e.g. "2+t", "1-t", "-3/2*t^2".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Power-series quotient num/den modulo t^m; requires den(0) != 0.
QPoly series_quotient(const QPoly& num, const QPoly& den, std::size_t m);

}  // namespace valrank
