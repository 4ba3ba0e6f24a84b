#include "valrank/rank_codes.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "valrank/error.hpp"
#include "valrank/local_linalg.hpp"

namespace valrank {
namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

void check_depth(const CodeSpec& spec, int depth) {
  if (depth < 1 || depth > spec.ring->depth())
    fail(ErrorCode::DepthExceeded, "depth " + std::to_string(depth) + " outside 1.." + std::to_string(spec.ring->depth()));
}

SigmaPoly from_coordinates(const RingPtr& ring, const std::vector<std::int64_t>& coords) {
  const std::size_t n = static_cast<std::size_t>(ring->degree());
  std::vector<GRElement> c;
  for (std::size_t b = 0; b < n; ++b)
    c.emplace_back(ring, std::vector<std::int64_t>(coords.begin() + static_cast<std::ptrdiff_t>(b * n),
                                                   coords.begin() + static_cast<std::ptrdiff_t>((b + 1) * n)));
  return SigmaPoly(ring, c);
}

struct CustomBasis {
  std::vector<std::vector<std::int64_t>> columns;  // coordinates of e_j * b_j
  std::vector<std::int64_t> ranges;                // coefficient c_j ranges over [0, ranges[j])
};

CustomBasis custom_basis(const CodeSpec& spec, const RingPtr& ring) {
  std::vector<SigmaPoly> gens;
  for (const auto& g : spec.generators) gens.push_back(reduce_mod(g, ring));
  const Matrix<Zpk> c = generator_coordinates(ring, gens);
  const SmithDecomposition<Zpk> s = smith_form(c);
  const Matrix<Zpk> cr = c * s.right;
  CustomBasis out;
  for (std::size_t j = 0; j < s.divisor_valuations.size(); ++j) {
    const Valuation v = s.divisor_valuations[j];
    if (v.is_infinite()) continue;
    std::vector<std::int64_t> col;
    for (std::size_t i = 0; i < cr.rows(); ++i) col.push_back(cr(i, j).value());
    out.columns.push_back(std::move(col));
    out.ranges.push_back(ipow(ring->prime(), static_cast<unsigned>(ring->depth() - v.value())));
  }
  return out;
}

// Visits codewords until the callback returns false.
void enumerate_impl(const CodeSpec& spec, int depth, const std::function<bool(const SigmaPoly&)>& visit,
                    std::uint64_t budget) {
  check_depth(spec, depth);
  const std::uint64_t count = codeword_count(spec, depth);
  if (count > budget)
    fail(ErrorCode::BudgetExceeded, "enumeration of " + std::to_string(count) + " codewords exceeds budget " +
                                        std::to_string(budget));
  const RingPtr ring = spec.ring->reduced(depth);
  const std::size_t n = static_cast<std::size_t>(ring->degree());
  const std::int64_t q = ring->modulus();

  if (spec.kind == CodeKind::Custom) {
    const CustomBasis basis = custom_basis(spec, ring);
    std::vector<std::int64_t> digit(basis.ranges.size(), 0);
    while (true) {
      std::vector<std::int64_t> coords(n * n, 0);
      for (std::size_t j = 0; j < digit.size(); ++j)
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = (coords[i] + digit[j] * basis.columns[j][i]) % q;
      if (!visit(from_coordinates(ring, coords))) return;
      std::size_t pos = 0;
      while (pos < digit.size() && ++digit[pos] == basis.ranges[pos]) digit[pos++] = 0;
      if (pos == digit.size()) return;
    }
  }

  const std::size_t ell = static_cast<std::size_t>(spec.ell);
  std::optional<GRElement> eta;
  if (spec.kind == CodeKind::Twisted) eta = reduce_element(*spec.eta, ring);
  std::vector<std::int64_t> digit(ell * n, 0);
  while (true) {
    std::vector<GRElement> c;
    for (std::size_t b = 0; b < ell; ++b)
      c.emplace_back(ring, std::vector<std::int64_t>(digit.begin() + static_cast<std::ptrdiff_t>(b * n),
                                                     digit.begin() + static_cast<std::ptrdiff_t>((b + 1) * n)));
    if (eta) {
      c.resize(ell + 1, GRElement::from_integer(ring, 0));
      c[ell] = *eta * frobenius(c[0], spec.h);
    }
    if (!visit(SigmaPoly(ring, c))) return;
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == q) digit[pos++] = 0;
    if (pos == digit.size()) return;
  }
}

}  // namespace

CodeSpec CodeSpec::gabidulin(RingPtr ring, int ell) {
  if (ell < 1 || ell > ring->degree()) fail(ErrorCode::InvalidArgument, "Gabidulin codes need 1 <= ell <= n");
  CodeSpec s;
  s.ring = std::move(ring);
  s.kind = CodeKind::Gabidulin;
  s.ell = ell;
  return s;
}

CodeSpec CodeSpec::twisted(RingPtr ring, int ell, GRElement eta, int h) {
  if (ell < 1 || ell >= ring->degree()) fail(ErrorCode::InvalidArgument, "twisted codes need 1 <= ell < n");
  require_same_ring(ring, eta.ring());
  if (is_zero(eta)) fail(ErrorCode::InvalidArgument, "twisted codes need eta != 0");
  CodeSpec s;
  s.kind = CodeKind::Twisted;
  s.ell = ell;
  s.h = static_cast<int>(mod_floor(h, ring->degree()));
  s.eta = std::move(eta);
  s.ring = std::move(ring);
  return s;
}

CodeSpec CodeSpec::custom(RingPtr ring, std::vector<SigmaPoly> generators) {
  for (const auto& g : generators) require_same_ring(ring, g.ring());
  CodeSpec s;
  s.ring = std::move(ring);
  s.kind = CodeKind::Custom;
  s.ell = 0;
  s.generators = std::move(generators);
  return s;
}

std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("VALRANK_ENUM_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, std::string("VALRANK_ENUM_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultEnumerationBudget;
}

std::vector<SigmaPoly> code_generators(const CodeSpec& spec) {
  if (spec.kind == CodeKind::Custom) return spec.generators;
  const RingPtr& ring = spec.ring;
  const int n = ring->degree();
  std::vector<SigmaPoly> gens;
  for (int b = 0; b < spec.ell; ++b)
    for (int a = 0; a < n; ++a) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(a)] = 1;
      const GRElement x(ring, e);
      SigmaPoly g = SigmaPoly::monomial(x, b);
      if (b == 0 && spec.kind == CodeKind::Twisted) g = g + SigmaPoly::monomial(*spec.eta * frobenius(x, spec.h), spec.ell);
      gens.push_back(g);
    }
  return gens;
}

Matrix<Zpk> generator_coordinates(const RingPtr& ring, const std::vector<SigmaPoly>& gens) {
  const std::size_t n = static_cast<std::size_t>(ring->degree());
  Matrix<Zpk> m(n * n, gens.size(), Zpk(0, ring->prime(), ring->depth(), ring->modulus()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    require_same_ring(ring, gens[j].ring());
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a) m(b * n + a, j) = Zpk(gens[j].coeff(b).coeffs()[a], ring->prime(), ring->depth(), ring->modulus());
  }
  return m;
}

std::vector<Valuation> code_divisor_valuations(const CodeSpec& spec) {
  return smith_valuations(generator_coordinates(spec.ring, code_generators(spec)));
}

std::uint64_t codeword_count(const CodeSpec& spec, int depth) {
  check_depth(spec, depth);
  const RingPtr ring = spec.ring->reduced(depth);
  std::uint64_t count = 1;
  if (spec.kind == CodeKind::Custom) {
    for (auto r : custom_basis(spec, ring).ranges) count = sat_mul(count, static_cast<std::uint64_t>(r));
    return count;
  }
  const std::uint64_t q = static_cast<std::uint64_t>(ring->modulus());
  for (int i = 0; i < spec.ell * ring->degree(); ++i) count = sat_mul(count, q);
  return count;
}

void enumerate_codewords(const CodeSpec& spec, int depth, const std::function<void(const SigmaPoly&)>& visit,
                         std::uint64_t budget) {
  enumerate_impl(spec, depth, [&](const SigmaPoly& f) {
    visit(f);
    return true;
  }, budget);
}

int min_distance(const CodeSpec& spec, int depth, std::uint64_t budget) {
  int best = -1;
  enumerate_impl(spec, depth, [&](const SigmaPoly& f) {
    if (f.is_zero()) return true;
    const int r = static_cast<int>(inner_rank(matrix_rep_power(f)));
    if (best < 0 || r < best) best = r;
    return best > 1;
  }, budget);
  if (best < 0) fail(ErrorCode::InvalidArgument, "code has no nonzero codeword at this depth");
  return best;
}

Rational k_sequence(const std::vector<Valuation>& divisor_valuations, int i) {
  if (i < 1) fail(ErrorCode::InvalidArgument, "k_i needs i >= 1");
  Rational sum(0);
  for (const auto& v : divisor_valuations) {
    if (v.is_infinite() || v.value() >= i) continue;
    if (v.value() < 0) fail(ErrorCode::InvalidArgument, "negative divisor valuation");
    sum += i - v.value();
  }
  Rational k = sum / i;
  k.canonicalize();
  return k;
}

SingletonReport singleton_check(const CodeSpec& spec, int depth, std::uint64_t budget) {
  SingletonReport r;
  r.min_distance = min_distance(spec, depth, budget);
  const int n = spec.ring->degree();
  r.bound = n * (n - r.min_distance + 1);
  const RingPtr ring = spec.ring->reduced(depth);
  std::vector<SigmaPoly> gens;
  for (const auto& g : code_generators(spec)) gens.push_back(reduce_mod(g, ring));
  const std::vector<Valuation> vals = smith_valuations(generator_coordinates(ring, gens));
  r.is_free = true;
  for (const auto& v : vals)
    if (v.is_finite() && v.value() > 0) r.is_free = false;
  r.free_rank = static_cast<int>(count_finite(vals));
  r.is_mrd = r.is_free && r.free_rank == r.bound;
  return r;
}

FiltrationReport filtration_report(const CodeSpec& spec, int up_to, std::uint64_t budget) {
  if (up_to < 1) fail(ErrorCode::InvalidArgument, "filtration needs at least one depth");
  check_depth(spec, up_to);
  FiltrationReport rep;
  rep.up_to = up_to;
  rep.divisor_valuations = code_divisor_valuations(spec);
  for (int i = 1; i <= up_to; ++i) {
    rep.k_values.push_back(k_sequence(rep.divisor_valuations, i));
    const SingletonReport s = singleton_check(spec, i, budget);
    rep.d_values.push_back(s.min_distance);
    rep.mrd_flags.push_back(s.is_mrd);
  }
  // d_i is only guaranteed monotone when the span is saturated, i.e. really of
  // the form C cap O_L[G]; a custom span with a non-unit divisor may drop.
  bool saturated = true;
  for (const auto& v : rep.divisor_valuations)
    if (v.is_finite() && v.value() > 0) saturated = false;
  for (std::size_t i = 1; i < rep.d_values.size(); ++i) {
    if (rep.k_values[i] < rep.k_values[i - 1] || (saturated && rep.d_values[i] < rep.d_values[i - 1]))
      fail(ErrorCode::MonotonicityViolation, "filtration sequences are not nondecreasing");
  }
  return rep;
}

}  // namespace valrank
