#include "valrank/qpoly.hpp"

#include <algorithm>

#include "valrank/error.hpp"

namespace valrank {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::size_t QPoly::ord() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return i;
  return 0;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rational& s) const {
  QPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

QPoly QPoly::shift_down(std::size_t k) const {
  if (is_zero()) return QPoly();
  if (ord() < k) fail(ErrorCode::InvalidArgument, "polynomial not divisible by t^k");
  return QPoly(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

QPoly QPoly::shift_up(std::size_t k) const {
  if (is_zero()) return QPoly();
  std::vector<Rational> r(k, Rational(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return QPoly(std::move(r));
}

QPoly QPoly::truncated(std::size_t m) const {
  if (c_.size() <= m) return *this;
  return QPoly(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(m)));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    const Rational coef = rem[static_cast<std::size_t>(i)] / b.leading();
    if (sgn(coef) == 0) continue;
    q[static_cast<std::size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= coef * b.c_[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

std::string QPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

QPoly series_quotient(const QPoly& num, const QPoly& den, std::size_t m) {
  if (sgn(den.coeff(0)) == 0) fail(ErrorCode::InvalidArgument, "series denominator vanishes at t=0");
  const Rational inv0 = Rational(1) / den.coeff(0);
  std::vector<Rational> q(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rational acc = num.coeff(i);
    for (std::size_t j = 1; j <= i; ++j) acc -= den.coeff(j) * q[i - j];
    q[i] = acc * inv0;
  }
  return QPoly(std::move(q));
}

}  // namespace valrank
