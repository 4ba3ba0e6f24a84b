#pragma once

// Exact discretely valued fields: Q with the p-adic valuation and Q(t) with the
// t-adic valuation. Both types expose the same interface so that the lattice
// and Mustafin code can be written once as templates.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "valrank/fields.hpp"
#include "valrank/matrix.hpp"
#include "valrank/qpoly.hpp"
#include "valrank/valuation.hpp"

namespace valrank {

class PAdicRational {
 public:
  using residue_type = Fp;

  PAdicRational(Rational value, std::int64_t prime);
  /// Same as the constructor but rejects a non-prime modulus.
  static PAdicRational checked(Rational value, std::int64_t prime);

  const Rational& value() const { return value_; }
  std::int64_t prime() const { return p_; }

  Valuation valuation() const;
  Fp residue() const;
  PAdicRational pi_power(std::int64_t e) const;
  PAdicRational exact_quotient(const PAdicRational& d) const { return *this / d; }
  /// Canonical representative of this element modulo p^a Z_(p):
  /// p^v times an integer in [0, p^(a-v)), where v is the valuation.
  PAdicRational residue_representative(std::int64_t a) const;
  PAdicRational lift_residue(const Fp& r) const { return PAdicRational(Rational(r.value()), p_); }

  PAdicRational operator+(const PAdicRational& o) const;
  PAdicRational operator-(const PAdicRational& o) const;
  PAdicRational operator-() const { return PAdicRational(-value_, p_); }
  PAdicRational operator*(const PAdicRational& o) const;
  PAdicRational operator/(const PAdicRational& o) const;
  bool operator==(const PAdicRational& o) const { return p_ == o.p_ && value_ == o.value_; }

  bool same_backend(const PAdicRational& o) const { return p_ == o.p_; }
  static int compare(const PAdicRational& a, const PAdicRational& b) { return cmp(a.value_, b.value_); }
  std::string to_string() const { return value_.get_str(); }

 private:
  void check(const PAdicRational& o) const;
  Rational value_;
  std::int64_t p_;
};

class TAdicFunction {
 public:
  using residue_type = Rational;

  TAdicFunction();
  TAdicFunction(QPoly numerator, QPoly denominator);
  explicit TAdicFunction(const Rational& c);

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  Valuation valuation() const;
  Rational residue() const;
  TAdicFunction pi_power(std::int64_t e) const;
  TAdicFunction exact_quotient(const TAdicFunction& d) const { return *this / d; }
  /// Canonical representative modulo t^a O: the Laurent expansion truncated
  /// below degree a.
  TAdicFunction residue_representative(std::int64_t a) const;
  TAdicFunction lift_residue(const Rational& r) const { return TAdicFunction(r); }

  TAdicFunction operator+(const TAdicFunction& o) const;
  TAdicFunction operator-(const TAdicFunction& o) const;
  TAdicFunction operator-() const;
  TAdicFunction operator*(const TAdicFunction& o) const;
  TAdicFunction operator/(const TAdicFunction& o) const;
  bool operator==(const TAdicFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  bool same_backend(const TAdicFunction&) const { return true; }
  static int compare(const TAdicFunction& a, const TAdicFunction& b);
  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const PAdicRational& x) { return sgn(x.value()) == 0; }
inline PAdicRational zero_like(const PAdicRational& x) { return PAdicRational(Rational(0), x.prime()); }
inline PAdicRational one_like(const PAdicRational& x) { return PAdicRational(Rational(1), x.prime()); }
inline std::string to_string(const PAdicRational& x) { return x.to_string(); }

inline bool is_zero(const TAdicFunction& x) { return x.numerator().is_zero(); }
inline TAdicFunction zero_like(const TAdicFunction&) { return TAdicFunction(); }
inline TAdicFunction one_like(const TAdicFunction&) { return TAdicFunction(Rational(1)); }
inline std::string to_string(const TAdicFunction& x) { return x.to_string(); }

template <class T>
using ValuedMatrix = Matrix<T>;

/// Minimum entry valuation of a matrix (+inf for the zero matrix).
template <class T>
Valuation min_valuation(const Matrix<T>& m) {
  Valuation best = Valuation::infinity();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::min(best, m(i, j).valuation());
  return best;
}

template <class T>
Matrix<T> scale(const Matrix<T>& m, const T& s) {
  return m.map([&](const T& x) { return x * s; });
}

/// Returns (s, pi^(-s) M) where s is the minimal entry valuation.
template <class T>
std::pair<std::int64_t, Matrix<T>> saturate_matrix(const Matrix<T>& m) {
  const Valuation v = min_valuation(m);
  if (v.is_infinite()) fail(ErrorCode::ZeroMatrix, "cannot saturate the zero matrix");
  const std::int64_t s = v.value();
  return {s, scale(m, m.zero().pi_power(-s))};
}

/// Entrywise reduction to the residue field; every entry must be integral.
template <class T>
Matrix<typename T::residue_type> reduce_residue(const Matrix<T>& m) {
  return m.map([](const T& x) { return x.residue(); });
}

template <class T>
bool is_integral(const Matrix<T>& m) {
  return min_valuation(m) >= Valuation(0);
}

}  // namespace valrank
