#include "valrank/valued.hpp"

#include "valrank/error.hpp"

namespace valrank {
namespace {

// Exponent of p in a nonzero integer.
std::int64_t multiplicity(const mpz_class& n, std::int64_t p) {
  mpz_class rest = n;
  const mpz_class pp(static_cast<long>(p));
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pp.get_mpz_t()));
}

mpz_class power(std::int64_t p, std::int64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

Rational rational_pi_power(std::int64_t p, std::int64_t e) {
  if (e >= 0) return Rational(power(p, e));
  return Rational(mpz_class(1), power(p, -e));
}

int compare_polys(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------- p-adic

PAdicRational::PAdicRational(Rational value, std::int64_t prime) : value_(std::move(value)), p_(prime) {
  value_.canonicalize();
}

PAdicRational PAdicRational::checked(Rational value, std::int64_t prime) {
  if (!is_prime(prime)) fail(ErrorCode::NotPrime, std::to_string(prime) + " is not prime");
  return PAdicRational(std::move(value), prime);
}

void PAdicRational::check(const PAdicRational& o) const {
  if (p_ != o.p_) fail(ErrorCode::BackendMismatch, "p-adic scalars with different primes");
}

Valuation PAdicRational::valuation() const {
  if (sgn(value_) == 0) return Valuation::infinity();
  return Valuation(multiplicity(value_.get_num(), p_) - multiplicity(value_.get_den(), p_));
}

Fp PAdicRational::residue() const {
  const Valuation v = valuation();
  if (v < Valuation(0)) fail(ErrorCode::NegativeValuation, "residue of " + to_string() + " is undefined");
  if (v > Valuation(0)) return Fp(0, p_);
  const mpz_class pz(static_cast<long>(p_));
  mpz_class num = value_.get_num() % pz;
  mpz_class den = value_.get_den() % pz;
  const std::int64_t n = mod_floor(num.get_si(), p_);
  const std::int64_t d = mod_floor(den.get_si(), p_);
  return Fp(n, p_) / Fp(d, p_);
}

PAdicRational PAdicRational::pi_power(std::int64_t e) const { return PAdicRational(rational_pi_power(p_, e), p_); }

PAdicRational PAdicRational::residue_representative(std::int64_t a) const {
  const Valuation v = valuation();
  if (v >= Valuation(a)) return zero_like(*this);
  const std::int64_t vv = v.value();
  const Rational unit = value_ * rational_pi_power(p_, -vv);
  const mpz_class modulus = power(p_, a - vv);
  mpz_class inv;
  mpz_class den = unit.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  mpz_class r = (unit.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return PAdicRational(Rational(r) * rational_pi_power(p_, vv), p_);
}

PAdicRational PAdicRational::operator+(const PAdicRational& o) const {
  check(o);
  return PAdicRational(value_ + o.value_, p_);
}
PAdicRational PAdicRational::operator-(const PAdicRational& o) const {
  check(o);
  return PAdicRational(value_ - o.value_, p_);
}
PAdicRational PAdicRational::operator*(const PAdicRational& o) const {
  check(o);
  return PAdicRational(value_ * o.value_, p_);
}
PAdicRational PAdicRational::operator/(const PAdicRational& o) const {
  check(o);
  if (sgn(o.value_) == 0) fail(ErrorCode::InvalidArgument, "division by zero");
  return PAdicRational(value_ / o.value_, p_);
}

// ---------------------------------------------------------------- t-adic

TAdicFunction::TAdicFunction() : num_(), den_(QPoly::constant(Rational(1))) {}

TAdicFunction::TAdicFunction(QPoly numerator, QPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) fail(ErrorCode::InvalidArgument, "rational function with zero denominator");
  normalize();
}

TAdicFunction::TAdicFunction(const Rational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}

// Lowest terms, with the lowest nonzero coefficient of the denominator equal to 1.
void TAdicFunction::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(Rational(1));
    return;
  }
  const QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = QPoly::divmod(num_, g).first;
    den_ = QPoly::divmod(den_, g).first;
  }
  const Rational lead = den_.coeff(den_.ord());
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Valuation TAdicFunction::valuation() const {
  if (num_.is_zero()) return Valuation::infinity();
  return Valuation(static_cast<std::int64_t>(num_.ord()) - static_cast<std::int64_t>(den_.ord()));
}

Rational TAdicFunction::residue() const {
  const Valuation v = valuation();
  if (v < Valuation(0)) fail(ErrorCode::NegativeValuation, "residue of " + to_string() + " is undefined");
  if (v > Valuation(0)) return Rational(0);
  return num_.coeff(num_.ord()) / den_.coeff(den_.ord());
}

TAdicFunction TAdicFunction::pi_power(std::int64_t e) const {
  if (e >= 0) return TAdicFunction(QPoly::monomial(Rational(1), static_cast<std::size_t>(e)), QPoly::constant(Rational(1)));
  return TAdicFunction(QPoly::constant(Rational(1)), QPoly::monomial(Rational(1), static_cast<std::size_t>(-e)));
}

TAdicFunction TAdicFunction::residue_representative(std::int64_t a) const {
  const Valuation v = valuation();
  if (v >= Valuation(a)) return TAdicFunction();
  const std::int64_t vv = v.value();
  const QPoly n = num_.shift_down(num_.ord());
  const QPoly d = den_.shift_down(den_.ord());
  const QPoly series = series_quotient(n, d, static_cast<std::size_t>(a - vv));
  if (vv >= 0) return TAdicFunction(series.shift_up(static_cast<std::size_t>(vv)), QPoly::constant(Rational(1)));
  return TAdicFunction(series, QPoly::monomial(Rational(1), static_cast<std::size_t>(-vv)));
}

TAdicFunction TAdicFunction::operator+(const TAdicFunction& o) const {
  if (den_ == o.den_) return TAdicFunction(num_ + o.num_, den_);
  return TAdicFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
TAdicFunction TAdicFunction::operator-(const TAdicFunction& o) const { return *this + (-o); }
TAdicFunction TAdicFunction::operator-() const {
  TAdicFunction r = *this;
  r.num_ = -r.num_;
  return r;
}
TAdicFunction TAdicFunction::operator*(const TAdicFunction& o) const {
  if (num_.is_zero() || o.num_.is_zero()) return TAdicFunction();
  return TAdicFunction(num_ * o.num_, den_ * o.den_);
}
TAdicFunction TAdicFunction::operator/(const TAdicFunction& o) const {
  if (o.num_.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  return TAdicFunction(num_ * o.den_, den_ * o.num_);
}

int TAdicFunction::compare(const TAdicFunction& a, const TAdicFunction& b) {
  const int c = compare_polys(a.num_, b.num_);
  return c != 0 ? c : compare_polys(a.den_, b.den_);
}

std::string TAdicFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace valrank
