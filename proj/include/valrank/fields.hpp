#pragma once

// Residue-field scalars (F_p and Q) and the small set of free functions that
// generic algorithms use to obtain zeros and ones from an existing element.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace valrank {

using Rational = mpq_class;

std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
std::int64_t ipow(std::int64_t base, unsigned exponent);
bool is_prime(std::int64_t p);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
std::string to_string(const Rational& x);

/// Element of the prime field F_p.
class Fp {
 public:
  Fp(std::int64_t value, std::int64_t p) : v_(mod_floor(value, p)), p_(p) {}

  std::int64_t value() const { return v_; }
  std::int64_t prime() const { return p_; }

  Fp operator+(const Fp& o) const { return Fp(v_ + o.v_, p_); }
  Fp operator-(const Fp& o) const { return Fp(v_ - o.v_, p_); }
  Fp operator-() const { return Fp(-v_, p_); }
  Fp operator*(const Fp& o) const { return Fp((v_ * o.v_) % p_, p_); }
  Fp operator/(const Fp& o) const;
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

 private:
  std::int64_t v_;
  std::int64_t p_;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp zero_like(const Fp& x) { return Fp(0, x.prime()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.prime()); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

}  // namespace valrank
