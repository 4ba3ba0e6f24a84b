#include "valrank/chain_rings.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "valrank/error.hpp"
#include "valrank/local_linalg.hpp"

namespace valrank {

using Coeffs = std::vector<std::int64_t>;

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b modulo (q, h) with h monic of degree n; inputs have length <= n.
Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& h, std::int64_t q) {
  const std::size_t n = h.size() - 1;
  Coeffs r(a.size() + b.size() > 0 ? a.size() + b.size() - 1 : 0, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], q)) % q;
  }
  for (std::size_t d = r.size(); d-- > n;) {
    const std::int64_t c = r[d];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n; ++j) r[d - n + j] = mod_floor(r[d - n + j] - mulmod(c, h[j], q), q);
    r[d] = 0;
  }
  r.resize(n, 0);
  return r;
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& h, std::int64_t q) {
  Coeffs r(h.size() - 1, 0);
  r[0] = 1 % q;
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, h, q);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, h, q);
  }
  return r;
}

// ---- F_p[x] helpers for the irreducibility test

Coeffs fp_mod(Coeffs a, const Coeffs& f, std::int64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::int64_t inv = mod_inverse(f.back(), p);
  while (a.size() > df) {
    const std::int64_t c = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = mod_floor(a[shift + j] - mulmod(c, f[j], p), p);
    trim(a);
  }
  return a;
}

Coeffs fp_gcd(Coeffs a, Coeffs b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool fp_irreducible(const Coeffs& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return n == 1;
  Coeffs x = {0, 1};
  Coeffs xp = x;
  for (int i = 1; i <= n / 2; ++i) {
    xp = poly_powmod(xp, static_cast<std::uint64_t>(p), f, p);
    Coeffs diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = mod_floor(diff[1] - 1, p);
    Coeffs g = fp_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// Lexicographically least monic irreducible of degree n, comparing the
// coefficient vectors from x^(n-1) down to the constant term.
Coeffs least_irreducible(std::int64_t p, int n) {
  const std::int64_t count = ipow(p, static_cast<unsigned>(n));
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Coeffs f(static_cast<std::size_t>(n) + 1, 0);
    std::int64_t rest = idx;
    for (int j = 0; j < n; ++j) {
      f[static_cast<std::size_t>(j)] = rest % p;
      rest /= p;
    }
    f[static_cast<std::size_t>(n)] = 1;
    if (fp_irreducible(f, p)) return f;
  }
  fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

// Hensel lift of an irreducible hbar to the monic divisor of x^(p^n-1)-1 over
// Z/p^k: take the Teichmueller lift zeta of x in (Z/p^k)[x]/(hbar) and form
// prod_i (X - zeta^(p^i)).
Coeffs hensel_lift(const Coeffs& hbar, std::int64_t p, int k) {
  const std::int64_t q = ipow(p, static_cast<unsigned>(k));
  const std::size_t n = hbar.size() - 1;
  const std::uint64_t pn = static_cast<std::uint64_t>(ipow(p, static_cast<unsigned>(n)));
  Coeffs zeta(n, 0);
  zeta[1 % n] = 1;
  for (int it = 0; it < k; ++it) zeta = poly_powmod(zeta, pn, hbar, q);
  // prod over conjugates, with coefficients in (Z/p^k)[x]/(hbar)
  std::vector<Coeffs> prod = {Coeffs(n, 0)};
  prod[0][0] = 1;
  Coeffs conj = zeta;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Coeffs> next(prod.size() + 1, Coeffs(n, 0));
    for (std::size_t d = 0; d < prod.size(); ++d) {
      for (std::size_t c = 0; c < n; ++c) next[d + 1][c] = (next[d + 1][c] + prod[d][c]) % q;
      const Coeffs t = poly_mulmod(prod[d], conj, hbar, q);
      for (std::size_t c = 0; c < n; ++c) next[d][c] = mod_floor(next[d][c] - t[c], q);
    }
    prod = std::move(next);
    conj = poly_powmod(conj, static_cast<std::uint64_t>(p), hbar, q);
  }
  Coeffs h(n + 1, 0);
  for (std::size_t d = 0; d <= n; ++d) {
    for (std::size_t c = 1; c < n; ++c)
      if (prod[d][c] != 0) fail(ErrorCode::InvalidArgument, "Hensel lift left the base ring");
    h[d] = prod[d][0];
  }
  return h;
}

std::mutex registry_mutex;
std::map<std::tuple<std::int64_t, int, int>, RingPtr>& registry() {
  static std::map<std::tuple<std::int64_t, int, int>, RingPtr> r;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Zpk

Zpk::Zpk(std::int64_t value, std::int64_t p, int k) : Zpk(value, p, k, ipow(p, static_cast<unsigned>(k))) {}

Zpk::Zpk(std::int64_t value, std::int64_t p, int k, std::int64_t modulus)
    : v_(mod_floor(value, modulus)), p_(p), q_(modulus), k_(k) {}

void Zpk::check(const Zpk& o) const {
  if (q_ != o.q_) fail(ErrorCode::RingMismatch, "Z/p^k scalars with different moduli");
}

Valuation Zpk::valuation() const {
  if (v_ == 0) return Valuation::infinity();
  std::int64_t v = 0, x = v_;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return Valuation(v);
}

Zpk Zpk::exact_quotient(const Zpk& d) const {
  check(d);
  const Valuation vd = d.valuation();
  if (vd.is_infinite()) fail(ErrorCode::InvalidArgument, "division by zero in Z/p^k");
  if (valuation() < vd) fail(ErrorCode::InvalidArgument, "inexact division in Z/p^k");
  const std::int64_t pv = ipow(p_, static_cast<unsigned>(vd.value()));
  return Zpk(mulmod(v_ / pv, mod_inverse(d.v_ / pv, q_), q_), p_, k_, q_);
}

Zpk Zpk::inverse() const {
  if (!is_unit()) fail(ErrorCode::InvalidArgument, "non-unit has no inverse");
  return Zpk(mod_inverse(v_, q_), p_, k_, q_);
}

Zpk Zpk::pi_power(std::int64_t e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative power of p in Z/p^k");
  if (e >= k_) return zero_like(*this);
  return Zpk(ipow(p_, static_cast<unsigned>(e)), p_, k_, q_);
}

Zpk Zpk::operator+(const Zpk& o) const {
  check(o);
  return Zpk(v_ + o.v_, p_, k_, q_);
}
Zpk Zpk::operator-(const Zpk& o) const {
  check(o);
  return Zpk(v_ - o.v_, p_, k_, q_);
}
Zpk Zpk::operator*(const Zpk& o) const {
  check(o);
  return Zpk(mulmod(v_, o.v_, q_), p_, k_, q_);
}

// ---------------------------------------------------------------- GaloisRing

GaloisRing::GaloisRing(std::int64_t p, int k, std::vector<std::int64_t> h)
    : p_(p), q_(ipow(p, static_cast<unsigned>(k))), k_(k), n_(static_cast<int>(h.size()) - 1), h_(std::move(h)) {
  const std::size_t n = static_cast<std::size_t>(n_);
  const std::int64_t order = residue_field_size() - 1;
  Coeffs xi(n, 0);
  if (n_ == 1) {
    xi[0] = 1 % q_;
  } else {
    xi[1] = 1;
  }
  frob_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t pj = ipow(p_, static_cast<unsigned>(j));
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t e = static_cast<std::uint64_t>(mulmod(static_cast<std::int64_t>(i), pj, order == 0 ? 1 : order));
      frob_[j].push_back(poly_powmod(xi, n_ == 1 ? 0 : e, h_, q_));
    }
  }
}

RingPtr GaloisRing::build(std::int64_t p, int k, int n) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1 || n < 1) fail(ErrorCode::InvalidArgument, "depth and degree must be positive");
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry().find({p, k, n});
    if (it != registry().end()) return it->second;
  }
  const std::int64_t q = ipow(p, static_cast<unsigned>(k));
  Coeffs h;
  if (n == 1) {
    h = {q - 1, 1};
  } else {
    h = least_irreducible(p, n);
    if (k > 1) h = hensel_lift(h, p, k);
  }
  RingPtr ring(new GaloisRing(p, k, h));
  std::lock_guard<std::mutex> lock(registry_mutex);
  return registry().emplace(std::make_tuple(p, k, n), ring).first->second;
}

RingPtr GaloisRing::with_modulus(std::int64_t p, int k, const std::vector<std::int64_t>& h) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1 || h.size() < 2) fail(ErrorCode::InvalidArgument, "modulus must have degree at least 1");
  const std::int64_t q = ipow(p, static_cast<unsigned>(k));
  Coeffs hh;
  for (auto c : h) hh.push_back(mod_floor(c, q));
  if (hh.back() != 1) fail(ErrorCode::InvalidArgument, "modulus must be monic");
  const int n = static_cast<int>(hh.size()) - 1;
  RingPtr canonical = build(p, k, n);
  if (canonical->h_ == hh) return canonical;
  Coeffs hbar;
  for (auto c : hh) hbar.push_back(c % p);
  if (!fp_irreducible(hbar, p)) fail(ErrorCode::InvalidArgument, "modulus is not irreducible mod p");
  // x^(p^n - 1) must be 1 modulo h for xi to be a Teichmueller element.
  Coeffs x(static_cast<std::size_t>(n), 0);
  x[n == 1 ? 0 : 1] = n == 1 ? mod_floor(-hh[0], q) : 1;
  const Coeffs one_check = poly_powmod(x, static_cast<std::uint64_t>(ipow(p, static_cast<unsigned>(n)) - 1), hh, q);
  Coeffs one(static_cast<std::size_t>(n), 0);
  one[0] = 1 % q;
  if (one_check != one) fail(ErrorCode::InvalidArgument, "modulus does not divide x^(p^n-1) - 1");
  return RingPtr(new GaloisRing(p, k, hh));
}

std::int64_t GaloisRing::unit_count() const {
  return ipow(p_, static_cast<unsigned>((k_ - 1) * n_)) * (residue_field_size() - 1);
}

RingPtr GaloisRing::reduced(int depth) const {
  if (depth < 1 || depth > k_) fail(ErrorCode::DepthMismatch, "cannot reduce depth " + std::to_string(k_) + " to " + std::to_string(depth));
  const std::int64_t qi = ipow(p_, static_cast<unsigned>(depth));
  Coeffs hi;
  for (auto c : h_) hi.push_back(c % qi);
  return with_modulus(p_, depth, hi);
}

bool GaloisRing::compatible_with(const GaloisRing& o) const {
  if (p_ != o.p_ || n_ != o.n_) return false;
  const std::int64_t qm = ipow(p_, static_cast<unsigned>(std::min(k_, o.k_)));
  for (std::size_t i = 0; i < h_.size(); ++i)
    if (h_[i] % qm != o.h_[i] % qm) return false;
  return true;
}

std::vector<std::int64_t> GaloisRing::multiply(const Coeffs& a, const Coeffs& b) const {
  return poly_mulmod(a, b, h_, q_);
}

std::vector<std::int64_t> GaloisRing::frobenius(const Coeffs& a, std::int64_t j) const {
  const std::size_t jj = static_cast<std::size_t>(mod_floor(j, n_));
  if (jj == 0) return a;
  Coeffs r(static_cast<std::size_t>(n_), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const Coeffs& img = frob_[jj][i];
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = (r[c] + mulmod(a[i], img[c], q_)) % q_;
  }
  return r;
}

std::string GaloisRing::describe() const {
  std::string s = "GR(" + std::to_string(p_) + "^" + std::to_string(k_) + "," + std::to_string(n_) + ") h=[";
  for (std::size_t i = 0; i < h_.size(); ++i) s += (i ? "," : "") + std::to_string(h_[i]);
  return s + "]";
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) fail(ErrorCode::RingMismatch, "elements of different Galois rings");
}

RingPtr build_galois_ring(std::int64_t p, int k, int n) { return GaloisRing::build(p, k, n); }

// ---------------------------------------------------------------- elements

GaloisRingElement::GaloisRingElement(RingPtr ring, std::vector<std::int64_t> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
  const std::size_t n = static_cast<std::size_t>(ring_->degree());
  if (c_.size() > n) fail(ErrorCode::InvalidArgument, "too many coefficients for this ring");
  c_.resize(n, 0);
  for (auto& c : c_) c = mod_floor(c, ring_->modulus());
}

GaloisRingElement GaloisRingElement::from_integer(RingPtr ring, std::int64_t c) {
  return GaloisRingElement(std::move(ring), Coeffs{c});
}

GaloisRingElement GaloisRingElement::generator(RingPtr ring) {
  if (ring->degree() == 1) return from_integer(ring, 1);
  return GaloisRingElement(ring, Coeffs{0, 1});
}

void GaloisRingElement::check(const GaloisRingElement& o) const { require_same_ring(ring_, o.ring_); }

bool is_zero(const GRElement& x) {
  for (auto c : x.coeffs())
    if (c != 0) return false;
  return true;
}

Valuation GaloisRingElement::valuation() const {
  Valuation best = Valuation::infinity();
  for (auto c : c_)
    if (c != 0) best = std::min(best, Zpk(c, ring_->prime(), ring_->depth(), ring_->modulus()).valuation());
  return best;
}

bool GaloisRingElement::is_unit() const {
  for (auto c : c_)
    if (c % ring_->prime() != 0) return true;
  return false;
}

bool GaloisRingElement::in_base_ring() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Zpk GaloisRingElement::to_base() const {
  if (!in_base_ring()) fail(ErrorCode::InvalidArgument, "element " + to_string() + " is not in Z/p^k");
  return Zpk(c_[0], ring_->prime(), ring_->depth(), ring_->modulus());
}

std::vector<std::int64_t> GaloisRingElement::residue() const {
  Coeffs r = c_;
  for (auto& c : r) c %= ring_->prime();
  return r;
}

GaloisRingElement GaloisRingElement::pow(std::uint64_t e) const {
  return GaloisRingElement(ring_, poly_powmod(c_, e, ring_->basic_irreducible(), ring_->modulus()));
}

GaloisRingElement GaloisRingElement::inverse() const {
  if (!is_unit()) fail(ErrorCode::InvalidArgument, "non-unit " + to_string() + " has no inverse");
  return pow(static_cast<std::uint64_t>(ring_->unit_count() - 1));
}

GaloisRingElement GaloisRingElement::exact_quotient(const GaloisRingElement& d) const {
  check(d);
  const Valuation vd = d.valuation();
  if (vd.is_infinite()) fail(ErrorCode::InvalidArgument, "division by zero in a Galois ring");
  if (valuation() < vd) fail(ErrorCode::InvalidArgument, "inexact division in a Galois ring");
  const std::int64_t pv = ipow(ring_->prime(), static_cast<unsigned>(vd.value()));
  Coeffs a = c_, b = d.c_;
  for (auto& c : a) c /= pv;
  for (auto& c : b) c /= pv;
  return GaloisRingElement(ring_, a) * GaloisRingElement(ring_, b).inverse();
}

GaloisRingElement GaloisRingElement::pi_power(std::int64_t e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative power of p in a Galois ring");
  if (e >= ring_->depth()) return from_integer(ring_, 0);
  return from_integer(ring_, ipow(ring_->prime(), static_cast<unsigned>(e)));
}

GaloisRingElement GaloisRingElement::operator+(const GaloisRingElement& o) const {
  check(o);
  Coeffs r = c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + o.c_[i]) % ring_->modulus();
  return GaloisRingElement(ring_, std::move(r));
}

GaloisRingElement GaloisRingElement::operator-(const GaloisRingElement& o) const {
  check(o);
  Coeffs r = c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - o.c_[i];
  return GaloisRingElement(ring_, std::move(r));
}

GaloisRingElement GaloisRingElement::operator-() const {
  Coeffs r = c_;
  for (auto& c : r) c = -c;
  return GaloisRingElement(ring_, std::move(r));
}

GaloisRingElement GaloisRingElement::operator*(const GaloisRingElement& o) const {
  check(o);
  return GaloisRingElement(ring_, ring_->multiply(c_, o.c_));
}

GaloisRingElement GaloisRingElement::operator*(std::int64_t s) const {
  Coeffs r = c_;
  const std::int64_t ss = mod_floor(s, ring_->modulus());
  for (auto& c : r) c = mulmod(c, ss, ring_->modulus());
  return GaloisRingElement(ring_, std::move(r));
}

bool GaloisRingElement::operator==(const GaloisRingElement& o) const {
  return c_ == o.c_ && (ring_ == o.ring_ || ring_->same_as(*o.ring_));
}

std::string GaloisRingElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c_[i]);
      continue;
    }
    if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
    out += "xi";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- operations

GRElement frobenius(const GRElement& x, std::int64_t j) {
  return GRElement(x.ring(), x.ring()->frobenius(x.coeffs(), j));
}

TraceNorm trace_norm(const GRElement& x) {
  GRElement tr = zero_like(x), nm = one_like(x);
  for (int i = 0; i < x.ring()->degree(); ++i) {
    const GRElement c = frobenius(x, i);
    tr = tr + c;
    nm = nm * c;
  }
  return {tr, nm};
}

GRElement teichmuller_lift(const GRElement& x) {
  const auto& ring = x.ring();
  const std::uint64_t pn = static_cast<std::uint64_t>(ring->residue_field_size());
  GRElement y = x;
  for (int i = 0; i < ring->depth(); ++i) y = y.pow(pn);
  return y;
}

GRElement teichmuller_lift(const RingPtr& ring, const std::vector<std::int64_t>& residue) {
  Coeffs c = residue;
  for (auto& v : c) v = mod_floor(v, ring->prime());
  return teichmuller_lift(GRElement(ring, c));
}

std::vector<GRElement> pi_digits(const GRElement& x) {
  const auto& ring = x.ring();
  std::vector<GRElement> digits;
  GRElement cur = x;
  for (int i = 0; i < ring->depth(); ++i) {
    const GRElement d = teichmuller_lift(cur);
    digits.push_back(d);
    Coeffs next = (cur - d).coeffs();
    for (auto& c : next) c /= ring->prime();
    cur = GRElement(ring, next);
  }
  return digits;
}

GRElement assemble_digits(const std::vector<GRElement>& digits) {
  if (digits.empty()) fail(ErrorCode::InvalidArgument, "empty digit list");
  GRElement acc = zero_like(digits.front());
  std::int64_t pw = 1;
  for (const auto& d : digits) {
    acc = acc + d * pw;
    pw *= d.ring()->prime();
  }
  return acc;
}

Matrix<GRElement> moore_matrix(const std::vector<GRElement>& alpha, int s) {
  if (alpha.empty()) fail(ErrorCode::InvalidArgument, "Moore matrix of an empty family");
  const int n = alpha.front().ring()->degree();
  if (s < 1 || s > n) fail(ErrorCode::InvalidArgument, "Moore matrix needs 1 <= s <= n");
  Matrix<GRElement> m(static_cast<std::size_t>(s), alpha.size(), zero_like(alpha.front()));
  for (int i = 0; i < s; ++i)
    for (std::size_t j = 0; j < alpha.size(); ++j) m(static_cast<std::size_t>(i), j) = frobenius(alpha[j], i);
  return m;
}

BasisWithDual dual_basis(const std::vector<GRElement>& alpha) {
  if (alpha.empty() || alpha.size() != static_cast<std::size_t>(alpha.front().ring()->degree()))
    fail(ErrorCode::InvalidArgument, "a basis must have n elements");
  Matrix<GRElement> inv = moore_matrix(alpha, static_cast<int>(alpha.size()));
  try {
    inv = invert(inv, false);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    fail(ErrorCode::SingularMooreMatrix, "Moore matrix has a non-unit determinant");
  }
  BasisWithDual b{alpha, {}};
  for (std::size_t j = 0; j < alpha.size(); ++j) b.alpha_star.push_back(inv(j, 0));
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      const GRElement t = trace_norm(alpha[i] * b.alpha_star[j]).trace;
      if (!(t == GRElement::from_integer(t.ring(), i == j ? 1 : 0)))
        fail(ErrorCode::SingularMooreMatrix, "dual basis verification failed");
    }
  return b;
}

BasisWithDual power_basis(const RingPtr& ring) {
  std::vector<GRElement> alpha;
  for (int i = 0; i < ring->degree(); ++i) {
    Coeffs c(static_cast<std::size_t>(ring->degree()), 0);
    c[static_cast<std::size_t>(i)] = 1;
    alpha.emplace_back(ring, c);
  }
  return dual_basis(alpha);
}

bool integral_basis_test(const std::vector<GRElement>& alpha) {
  if (alpha.empty() || alpha.size() != static_cast<std::size_t>(alpha.front().ring()->degree())) return false;
  return local_determinant(moore_matrix(alpha, static_cast<int>(alpha.size()))).is_unit();
}

Matrix<Zpk> coordinate_matrix(const RingPtr& ring, const std::vector<GRElement>& alpha) {
  const Zpk zero(0, ring->prime(), ring->depth(), ring->modulus());
  Matrix<Zpk> m(static_cast<std::size_t>(ring->degree()), alpha.size(), zero);
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    require_same_ring(ring, alpha[j].ring());
    for (std::size_t i = 0; i < m.rows(); ++i)
      m(i, j) = Zpk(alpha[j].coeffs()[i], ring->prime(), ring->depth(), ring->modulus());
  }
  return m;
}

GRElement element_from_coordinates(const RingPtr& ring, const std::vector<Zpk>& coords) {
  Coeffs c;
  for (const auto& z : coords) c.push_back(z.value());
  return GRElement(ring, c);
}

GRElement reduce_element(const GRElement& x, const RingPtr& target) {
  if (!x.ring()->compatible_with(*target) || target->depth() > x.ring()->depth())
    fail(ErrorCode::DepthMismatch, "incompatible reduction target " + target->describe());
  return GRElement(target, x.coeffs());
}

}  // namespace valrank
