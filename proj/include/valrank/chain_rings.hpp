#pragma once

// Z/p^k and the Galois rings GR(p^k, n) = (Z/p^k)[x]/(h), where h is a basic
// irreducible polynomial whose root xi is a Teichmueller element. sigma is the
// automorphism xi -> xi^p.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "valrank/fields.hpp"
#include "valrank/matrix.hpp"
#include "valrank/valuation.hpp"

namespace valrank {

/// Element of the finite chain ring Z/p^k.
class Zpk {
 public:
  Zpk(std::int64_t value, std::int64_t p, int k);
  Zpk(std::int64_t value, std::int64_t p, int k, std::int64_t modulus);

  std::int64_t value() const { return v_; }
  std::int64_t prime() const { return p_; }
  int depth() const { return k_; }
  std::int64_t modulus() const { return q_; }

  Valuation valuation() const;
  bool is_unit() const { return v_ % p_ != 0; }
  Zpk exact_quotient(const Zpk& d) const;
  Zpk inverse() const;
  Zpk pi_power(std::int64_t e) const;

  Zpk operator+(const Zpk& o) const;
  Zpk operator-(const Zpk& o) const;
  Zpk operator-() const { return Zpk(q_ - v_, p_, k_, q_); }
  Zpk operator*(const Zpk& o) const;
  bool operator==(const Zpk& o) const { return v_ == o.v_ && q_ == o.q_; }

 private:
  void check(const Zpk& o) const;
  std::int64_t v_, p_, q_;
  int k_;
};

inline bool is_zero(const Zpk& x) { return x.value() == 0; }
inline Zpk zero_like(const Zpk& x) { return Zpk(0, x.prime(), x.depth(), x.modulus()); }
inline Zpk one_like(const Zpk& x) { return Zpk(1, x.prime(), x.depth(), x.modulus()); }
inline std::string to_string(const Zpk& x) { return std::to_string(x.value()); }

class GaloisRing;
using RingPtr = std::shared_ptr<const GaloisRing>;

/// Immutable descriptor of GR(p^k, n).
class GaloisRing {
 public:
  /// Deterministic construction: the lexicographically least monic
  /// irreducible of degree n over F_p (coefficients compared from the top
  /// degree down), Hensel-lifted to the divisor of x^(p^n-1) - 1. For n = 1
  /// the modulus is x - 1.
  static RingPtr build(std::int64_t p, int k, int n);
  /// Descriptor for an explicit modulus h (constant term first, monic).
  static RingPtr with_modulus(std::int64_t p, int k, const std::vector<std::int64_t>& h);

  std::int64_t prime() const { return p_; }
  int depth() const { return k_; }
  int degree() const { return n_; }
  std::int64_t modulus() const { return q_; }
  const std::vector<std::int64_t>& basic_irreducible() const { return h_; }
  std::int64_t residue_field_size() const { return ipow(p_, static_cast<unsigned>(n_)); }
  /// Order of the unit group, p^((k-1)n) (p^n - 1).
  std::int64_t unit_count() const;
  /// |S| = p^(kn).
  std::int64_t element_count() const { return ipow(q_, static_cast<unsigned>(n_)); }

  /// The same extension at depth i <= k (modulus reduced mod p^i).
  RingPtr reduced(int depth) const;
  /// Same p and n, and moduli congruent modulo p^min(k, k').
  bool compatible_with(const GaloisRing& o) const;
  bool same_as(const GaloisRing& o) const { return p_ == o.p_ && k_ == o.k_ && h_ == o.h_; }

  std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const;
  std::vector<std::int64_t> frobenius(const std::vector<std::int64_t>& a, std::int64_t j) const;

  std::string describe() const;

 private:
  GaloisRing(std::int64_t p, int k, std::vector<std::int64_t> h);
  std::int64_t p_, q_;
  int k_, n_;
  std::vector<std::int64_t> h_;
  std::vector<std::vector<std::int64_t>> high_powers_;          // x^(n+t) mod h
  std::vector<std::vector<std::vector<std::int64_t>>> frob_;    // frob_[j][i] = sigma^j(xi^i)
};

class GaloisRingElement {
 public:
  GaloisRingElement(RingPtr ring, std::vector<std::int64_t> coeffs);
  static GaloisRingElement from_integer(RingPtr ring, std::int64_t c);
  static GaloisRingElement generator(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  Valuation valuation() const;
  bool is_unit() const;
  bool in_base_ring() const;
  Zpk to_base() const;  // requires in_base_ring()
  /// Coefficients reduced mod p, i.e. the image in F_(p^n).
  std::vector<std::int64_t> residue() const;

  GaloisRingElement exact_quotient(const GaloisRingElement& d) const;
  GaloisRingElement inverse() const;
  GaloisRingElement pow(std::uint64_t e) const;
  GaloisRingElement pi_power(std::int64_t e) const;

  GaloisRingElement operator+(const GaloisRingElement& o) const;
  GaloisRingElement operator-(const GaloisRingElement& o) const;
  GaloisRingElement operator-() const;
  GaloisRingElement operator*(const GaloisRingElement& o) const;
  GaloisRingElement operator*(std::int64_t s) const;
  bool operator==(const GaloisRingElement& o) const;

  std::string to_string() const;  // sparse polynomial in "xi"

 private:
  void check(const GaloisRingElement& o) const;
  RingPtr ring_;
  std::vector<std::int64_t> c_;
};

using GRElement = GaloisRingElement;

bool is_zero(const GRElement& x);
inline GRElement zero_like(const GRElement& x) { return GRElement::from_integer(x.ring(), 0); }
inline GRElement one_like(const GRElement& x) { return GRElement::from_integer(x.ring(), 1); }
inline std::string to_string(const GRElement& x) { return x.to_string(); }

void require_same_ring(const RingPtr& a, const RingPtr& b);

// ------------------------------------------------------------ operations

RingPtr build_galois_ring(std::int64_t p, int k, int n);

GRElement frobenius(const GRElement& x, std::int64_t j);

struct TraceNorm {
  GRElement trace;
  GRElement norm;
};
TraceNorm trace_norm(const GRElement& x);

/// Unique y with y^(p^n) = y and y = x mod p.
GRElement teichmuller_lift(const GRElement& x);
GRElement teichmuller_lift(const RingPtr& ring, const std::vector<std::int64_t>& residue);

/// Teichmueller digits d_0..d_(k-1) with x = sum d_i p^i.
std::vector<GRElement> pi_digits(const GRElement& x);
GRElement assemble_digits(const std::vector<GRElement>& digits);

Matrix<GRElement> moore_matrix(const std::vector<GRElement>& alpha, int s);

struct BasisWithDual {
  std::vector<GRElement> alpha;
  std::vector<GRElement> alpha_star;
};
BasisWithDual dual_basis(const std::vector<GRElement>& alpha);
BasisWithDual power_basis(const RingPtr& ring);
bool integral_basis_test(const std::vector<GRElement>& alpha);

/// n x r matrix over Z/p^k whose column j is the power-basis coordinate vector of alpha_j.
Matrix<Zpk> coordinate_matrix(const RingPtr& ring, const std::vector<GRElement>& alpha);
GRElement element_from_coordinates(const RingPtr& ring, const std::vector<Zpk>& coords);

/// Reduction of x into a compatible ring of smaller or equal depth.
GRElement reduce_element(const GRElement& x, const RingPtr& target);

}  // namespace valrank
