#include "valrank/fields.hpp"

#include "valrank/error.hpp"
#include "valrank/valuation.hpp"

namespace valrank {

std::int64_t Valuation::value() const {
  if (infinite_) fail(ErrorCode::InvalidArgument, "infinite valuation has no integer value");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = mod_floor(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) fail(ErrorCode::InvalidArgument, "element is not invertible modulo " + std::to_string(m));
  return mod_floor(s0, m);
}

std::int64_t ipow(std::int64_t base, unsigned exponent) {
  std::int64_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Fp Fp::operator/(const Fp& o) const {
  if (o.v_ == 0) fail(ErrorCode::InvalidArgument, "division by zero in F_p");
  return Fp(v_ * mod_inverse(o.v_, p_) % p_, p_);
}

}  // namespace valrank
