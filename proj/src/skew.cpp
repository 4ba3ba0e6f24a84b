#include "valrank/skew.hpp"

#include "valrank/error.hpp"
#include "valrank/local_linalg.hpp"

namespace valrank {

SigmaPoly::SigmaPoly(RingPtr ring) : ring_(std::move(ring)) {
  c_.assign(static_cast<std::size_t>(ring_->degree()), GRElement::from_integer(ring_, 0));
}

SigmaPoly::SigmaPoly(RingPtr ring, std::vector<GRElement> coeffs) : SigmaPoly(std::move(ring)) {
  if (coeffs.size() > c_.size()) fail(ErrorCode::InvalidArgument, "more than n sigma-coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    require_same_ring(ring_, coeffs[i].ring());
    c_[i] = coeffs[i];
  }
}

SigmaPoly SigmaPoly::monomial(const GRElement& c, std::int64_t power) {
  SigmaPoly f(c.ring());
  f.c_[static_cast<std::size_t>(mod_floor(power, c.ring()->degree()))] = c;
  return f;
}

SigmaPoly SigmaPoly::identity(const RingPtr& ring) { return monomial(GRElement::from_integer(ring, 1), 0); }
SigmaPoly SigmaPoly::sigma(const RingPtr& ring) { return monomial(GRElement::from_integer(ring, 1), 1); }

int SigmaPoly::degree() const {
  for (std::size_t i = c_.size(); i-- > 0;)
    if (!valrank::is_zero(c_[i])) return static_cast<int>(i);
  return -1;
}

bool SigmaPoly::is_monic() const {
  const int d = degree();
  return d >= 0 && c_[static_cast<std::size_t>(d)] == GRElement::from_integer(ring_, 1);
}

Valuation SigmaPoly::valuation() const {
  Valuation v = Valuation::infinity();
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

SigmaPoly SigmaPoly::operator+(const SigmaPoly& o) const {
  require_same_ring(ring_, o.ring_);
  SigmaPoly r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

SigmaPoly SigmaPoly::operator-(const SigmaPoly& o) const {
  require_same_ring(ring_, o.ring_);
  SigmaPoly r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

// (a sigma^i)(b sigma^j) = a sigma^i(b) sigma^(i+j mod n)
SigmaPoly SigmaPoly::operator*(const SigmaPoly& o) const {
  require_same_ring(ring_, o.ring_);
  const std::size_t n = c_.size();
  SigmaPoly r(ring_);
  for (std::size_t i = 0; i < n; ++i) {
    if (valrank::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (valrank::is_zero(o.c_[j])) continue;
      r.c_[(i + j) % n] = r.c_[(i + j) % n] + c_[i] * frobenius(o.c_[j], static_cast<std::int64_t>(i));
    }
  }
  return r;
}

bool SigmaPoly::operator==(const SigmaPoly& o) const {
  return (ring_ == o.ring_ || ring_->same_as(*o.ring_)) && c_ == o.c_;
}

std::string SigmaPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (valrank::is_zero(c_[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].to_string() + ")";
    out += i == 0 ? "*id" : i == 1 ? "*s" : "*s^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

SigmaPoly operator*(const GRElement& a, const SigmaPoly& f) { return SigmaPoly::monomial(a, 0) * f; }

SigmaPoly skew_arith(const SigmaPoly& f, const SigmaPoly& g, SkewOp op) {
  return op == SkewOp::Add ? f + g : f * g;
}

GRElement evaluate(const SigmaPoly& f, const GRElement& x) {
  require_same_ring(f.ring(), x.ring());
  GRElement acc = zero_like(x);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (is_zero(f.coeff(i))) continue;
    acc = acc + f.coeff(i) * frobenius(x, static_cast<std::int64_t>(i));
  }
  return acc;
}

Matrix<Zpk> matrix_rep(const SigmaPoly& f, const BasisWithDual& basis) {
  const RingPtr& ring = f.ring();
  const std::size_t n = basis.alpha.size();
  Matrix<Zpk> m(n, n, Zpk(0, ring->prime(), ring->depth(), ring->modulus()));
  for (std::size_t j = 0; j < n; ++j) {
    const GRElement y = evaluate(f, basis.alpha[j]);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = trace_norm(y * basis.alpha_star[i]).trace.to_base();
  }
  return m;
}

Matrix<Zpk> matrix_rep(const SigmaPoly& f, const std::vector<GRElement>& alpha) {
  if (!integral_basis_test(alpha)) fail(ErrorCode::NotIntegralBasis, "alpha is not an integral basis");
  return matrix_rep(f, dual_basis(alpha));
}

Matrix<Zpk> matrix_rep_power(const SigmaPoly& f) {
  const RingPtr& ring = f.ring();
  const std::size_t n = static_cast<std::size_t>(ring->degree());
  Matrix<Zpk> m(n, n, Zpk(0, ring->prime(), ring->depth(), ring->modulus()));
  std::vector<std::int64_t> e(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), 0);
    e[j] = 1;
    const GRElement y = evaluate(f, GRElement(ring, e));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = Zpk(y.coeffs()[i], ring->prime(), ring->depth(), ring->modulus());
  }
  return m;
}

SigmaPoly reduce_mod(const SigmaPoly& f, const RingPtr& target) {
  std::vector<GRElement> c;
  for (const auto& x : f.coeffs()) c.push_back(reduce_element(x, target));
  return SigmaPoly(target, c);
}

SigmaPoly reduce_mod(const SigmaPoly& f, int depth) { return reduce_mod(f, f.ring()->reduced(depth)); }

SigmaPoly truncate(const SigmaPoly& f, int k) {
  if (k < 0 || k >= f.ring()->depth())
    fail(ErrorCode::DepthExceeded, "truncation index must lie below the ring depth");
  std::vector<GRElement> c;
  for (const auto& x : f.coeffs()) {
    std::vector<GRElement> digits = pi_digits(x);
    digits.resize(static_cast<std::size_t>(k) + 1, zero_like(x));
    c.push_back(assemble_digits(digits));
  }
  return SigmaPoly(f.ring(), c);
}

Division right_divide(const SigmaPoly& f, const SigmaPoly& g) {
  require_same_ring(f.ring(), g.ring());
  if (!g.is_monic()) fail(ErrorCode::NotMonic, "divisor must be monic");
  const int dg = g.degree();
  SigmaPoly q(f.ring());
  SigmaPoly r = f;
  for (int d = r.degree(); d >= dg; d = r.degree()) {
    const SigmaPoly term = SigmaPoly::monomial(r.coeff(static_cast<std::size_t>(d)), d - dg);
    q = q + term;
    r = r - term * g;
  }
  return {q, r};
}

SigmaPoly annihilator_recursive(const RingPtr& ring, const std::vector<GRElement>& beta) {
  if (beta.size() >= static_cast<std::size_t>(ring->degree()))
    fail(ErrorCode::InvalidArgument, "annihilator needs fewer than n generators");
  SigmaPoly f = SigmaPoly::identity(ring);
  for (const auto& b : beta) {
    const GRElement y = evaluate(f, b);
    if (!y.is_unit()) fail(ErrorCode::DependentReduction, "reductions of beta are linearly dependent");
    const GRElement c = frobenius(y, 1) * y.inverse();
    f = (SigmaPoly::sigma(ring) - SigmaPoly::monomial(c, 0)) * f;
  }
  return f;
}

SigmaPoly annihilator_determinant(const RingPtr& ring, const std::vector<GRElement>& beta) {
  const std::size_t r = beta.size();
  if (r >= static_cast<std::size_t>(ring->degree()))
    fail(ErrorCode::InvalidArgument, "annihilator needs fewer than n generators");
  if (r == 0) return SigmaPoly::identity(ring);
  const Matrix<GRElement> m = moore_matrix(beta, static_cast<int>(r) + 1);
  std::vector<GRElement> h;
  for (std::size_t skip = 0; skip <= r; ++skip) {
    Matrix<GRElement> minor(r, r, m.zero());
    for (std::size_t i = 0, row = 0; i <= r; ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0; j < r; ++j) minor(row, j) = m(i, j);
      ++row;
    }
    h.push_back(local_determinant(minor));
  }
  if (!h[r].is_unit()) fail(ErrorCode::SingularTruncatedMoore, "truncated Moore matrix is singular");
  const GRElement inv = h[r].inverse();
  std::vector<GRElement> c;
  for (std::size_t i = 0; i <= r; ++i) {
    const GRElement t = inv * h[i];
    c.push_back((r - i) % 2 == 0 ? t : -t);
  }
  return SigmaPoly(ring, c);
}

MooreFactorization moore_factorization(const RingPtr& ring, const std::vector<GRElement>& alpha) {
  const std::size_t r = alpha.size();
  if (r == 0 || r > static_cast<std::size_t>(ring->degree()))
    fail(ErrorCode::InvalidArgument, "factorization needs 1 <= r <= n vectors");
  const Matrix<Zpk> c = coordinate_matrix(ring, alpha);
  const SmithDecomposition<Zpk> s = smith_form(c);
  const Matrix<Zpk> linv = invert(s.left, false);
  MooreFactorization out{s.right, {}, s.divisor_valuations, {}};
  const Zpk one = one_like(c.zero());
  for (std::size_t j = 0; j < r; ++j) {
    out.beta.push_back(element_from_coordinates(ring, linv.column(j)));
    const Valuation v = s.divisor_valuations[j];
    out.divisors.push_back(v.is_infinite() ? c.zero() : one.pi_power(v.value()));
  }
  return out;
}

NormCheck norm_condition_check(const SigmaPoly& f, int ell) {
  if (ell < 0 || ell >= f.ring()->degree() || f.degree() != ell)
    fail(ErrorCode::InvalidArgument, "norm check needs deg f = ell < n");
  const GRElement& f0 = f.coeff(0);
  const GRElement& fl = f.coeff(static_cast<std::size_t>(ell));
  if (!f0.is_unit() || !fl.is_unit())
    fail(ErrorCode::NonUnitCoefficient, "norm check needs unit f_0 and f_ell");
  const Zpk norm = trace_norm(f0 * fl.inverse()).norm.to_base();
  const std::int64_t sign = (static_cast<std::int64_t>(ell) * f.ring()->degree()) % 2 == 0 ? 1 : -1;
  const Zpk expected(sign, f.ring()->prime(), f.ring()->depth(), f.ring()->modulus());
  return NormCheck{norm == expected, norm, expected};
}

}  // namespace valrank
