#pragma once

// The skew group algebra S[G] for S = GR(p^k, n) and G = <sigma> of order n.
// Exponents are kept modulo n, so sigma^n = id.

#include <string>
#include <vector>

#include "valrank/chain_rings.hpp"
#include "valrank/matrix.hpp"

namespace valrank {

class SigmaPoly {
 public:
  explicit SigmaPoly(RingPtr ring);
  SigmaPoly(RingPtr ring, std::vector<GRElement> coeffs);
  static SigmaPoly monomial(const GRElement& c, std::int64_t power);
  static SigmaPoly identity(const RingPtr& ring);
  static SigmaPoly sigma(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<GRElement>& coeffs() const { return c_; }
  const GRElement& coeff(std::size_t i) const { return c_.at(i); }

  /// Largest i with a nonzero coefficient; -1 stands for the degree of zero.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  bool is_monic() const;
  Valuation valuation() const;

  SigmaPoly operator+(const SigmaPoly& o) const;
  SigmaPoly operator-(const SigmaPoly& o) const;
  SigmaPoly operator*(const SigmaPoly& o) const;
  bool operator==(const SigmaPoly& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<GRElement> c_;
};

SigmaPoly operator*(const GRElement& a, const SigmaPoly& f);

enum class SkewOp { Add, Mul };
SigmaPoly skew_arith(const SigmaPoly& f, const SigmaPoly& g, SkewOp op);

GRElement evaluate(const SigmaPoly& f, const GRElement& x);

/// Column j is the alpha-coordinate vector of f(alpha_j), read off through the
/// trace-dual basis.
Matrix<Zpk> matrix_rep(const SigmaPoly& f, const BasisWithDual& basis);
Matrix<Zpk> matrix_rep(const SigmaPoly& f, const std::vector<GRElement>& alpha);
/// Same as matrix_rep with the power basis, whose coordinates are the coefficients.
Matrix<Zpk> matrix_rep_power(const SigmaPoly& f);

SigmaPoly reduce_mod(const SigmaPoly& f, int depth);
SigmaPoly reduce_mod(const SigmaPoly& f, const RingPtr& target);
SigmaPoly truncate(const SigmaPoly& f, int k);

struct Division {
  SigmaPoly quotient;
  SigmaPoly remainder;
};
/// f = q g + r with r = 0 or deg r < deg g; g must be monic.
Division right_divide(const SigmaPoly& f, const SigmaPoly& g);

SigmaPoly annihilator_recursive(const RingPtr& ring, const std::vector<GRElement>& beta);
SigmaPoly annihilator_determinant(const RingPtr& ring, const std::vector<GRElement>& beta);

struct MooreFactorization {
  Matrix<Zpk> transform;            // A, invertible over Z/p^k
  std::vector<GRElement> beta;      // truncated Moore matrix of beta is invertible
  std::vector<Valuation> divisor_valuations;
  std::vector<Zpk> divisors;        // e_i = p^v_i (0 for infinite valuation)
};
/// M_r(alpha) A = M_r(beta) diag(e).
MooreFactorization moore_factorization(const RingPtr& ring, const std::vector<GRElement>& alpha);

struct NormCheck {
  bool holds = false;
  Zpk norm_value;
  Zpk expected;
};
/// Compares Norm(f_0 / f_ell) with (-1)^(ell n); f_0 and f_ell must be units.
NormCheck norm_condition_check(const SigmaPoly& f, int ell);

}  // namespace valrank
