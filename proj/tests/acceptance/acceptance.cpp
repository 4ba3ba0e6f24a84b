// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 when the
// set of failing criteria equals the --expect-fail list (empty by default).

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/random_ring.hpp"
#include "valrank/api.hpp"
#include "valrank/json_io.hpp"
#include "valrank/mustafin.hpp"
#include "valrank/rank_codes.hpp"

using namespace valrank;
using namespace valrank::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome(std::uint64_t seed)> run;
};

// Accumulates sub-checks; the first few failures are kept for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) failures_ += (failures_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  Outcome outcome() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks";
    if (!notes_.empty()) os << "; " << notes_;
    if (failed_) os << "; failed: " << failures_;
    return {failed_ == 0, os.str()};
  }

 private:
  int total_ = 0, failed_ = 0;
  std::string failures_, notes_;
};

template <class V>
std::string join(const std::vector<V>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  return join(s);
}

Matrix<PAdicRational> qmat(std::int64_t p, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<PAdicRational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(Rational(x), p);
  }
  return Matrix<PAdicRational>::from_rows(r, PAdicRational(Rational(0), p));
}

GRElement ring_int(const RingPtr& r, std::int64_t c) { return GRElement::from_integer(r, c); }

// ------------------------------------------------------------ 1

Outcome gabidulin_filtration(std::uint64_t) {
  Tally t;
  for (auto [p, n, ell] : {std::tuple{2, 2, 1}, std::tuple{3, 2, 1}, std::tuple{2, 3, 2}, std::tuple{3, 3, 1}}) {
    const auto spec = CodeSpec::gabidulin(build_galois_ring(p, 2, n), ell);
    const FiltrationReport rep = filtration_report(spec, 2);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(ell) + ")";
    for (int i = 0; i < 2; ++i) {
      t.check(rep.d_values[i] == n - ell + 1, tag + " d_" + std::to_string(i + 1) + "=" + std::to_string(rep.d_values[i]));
      t.check(rep.k_values[i] == ell * n, tag + " k_" + std::to_string(i + 1) + "=" + to_string(rep.k_values[i]));
    }
  }
  return t.outcome();
}

// ------------------------------------------------------------ 2

Outcome twisted_filtration(std::uint64_t) {
  Tally t;
  for (int j : {1, 2}) {
    const RingPtr ring = build_galois_ring(3, j + 1, 2);
    const GRElement eta = ring_int(ring, -1) + ring_int(ring, 1).pi_power(j);
    const FiltrationReport rep = filtration_report(CodeSpec::twisted(ring, 1, eta, 0), j + 1);
    std::vector<int> expect;
    for (int i = 1; i <= j + 1; ++i) expect.push_back(i <= j ? 1 : 2);
    t.check(rep.d_values == expect, "j=" + std::to_string(j) + " d=" + join(rep.d_values) + " expected " + join(expect));
    t.note("j=" + std::to_string(j) + " d=" + join(rep.d_values) + " k=" + join_rationals(rep.k_values));
  }
  const RingPtr r4 = build_galois_ring(3, 1, 4);
  const auto spec = CodeSpec::twisted(r4, 2, ring_int(r4, -1), 0);
  const int d1 = min_distance(spec, 1);
  t.check(d1 == 2, "(3,4,2) d_1=" + std::to_string(d1));
  t.note("(3,4,2) over " + std::to_string(codeword_count(spec, 1)) + " codewords d_1=" + std::to_string(d1));
  return t.outcome();
}

// ------------------------------------------------------------ 3

Outcome cokernel_example(std::uint64_t) {
  Tally t;
  const RingPtr ring = GaloisRing::with_modulus(3, 2, {1, 0, 1});
  const GRElement xi = GRElement::generator(ring);
  const SigmaPoly f(ring, {ring_int(ring, 1), ring_int(ring, 1) + xi * 3});
  const Matrix<Zpk> m = matrix_rep_power(f);
  const std::vector<std::int64_t> expect{2, 3, 3, 0};
  std::vector<std::int64_t> got;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) got.push_back(m(i, j).value());
  t.check(got == expect, "matrix " + join(got));
  const Matrix<Rational> lift = m.map([](const Zpk& x) { return Rational(x.value()); });
  t.check(field_rank(lift) == 2, "rank over Q " + std::to_string(field_rank(lift)));
  t.check(inner_rank(m) == 1, "inner rank " + std::to_string(inner_rank(m)));
  return t.outcome();
}

// ------------------------------------------------------------ 4

Outcome norm_criterion(std::uint64_t) {
  Tally t;
  for (std::int64_t k : {1, 2}) {
    const RingPtr ring = build_galois_ring(3, static_cast<int>(k), 2);
    const int n = ring->degree(), ell = 1;
    std::vector<GRElement> units;
    for (const auto& x : all_elements(ring))
      if (x.is_unit()) units.push_back(x);
    std::uint64_t low = 0, low_fail = 0, norm_fail_above = 0;
    for (const auto& f0 : units)
      for (const auto& f1 : units) {
        const SigmaPoly f(ring, {f0, f1});
        const auto rank = static_cast<int>(inner_rank(matrix_rep_power(f)));
        const bool holds = norm_condition_check(f, ell).holds;
        if (rank == n - ell) {
          ++low;
          if (!holds) ++low_fail;
        }
        if (!holds && rank > n - ell) ++norm_fail_above;
      }
    const std::string tag = "GR(" + std::to_string(ring->modulus()) + ",2)";
    t.check(low_fail == 0, tag + ": " + std::to_string(low_fail) + " rank-" + std::to_string(n - ell) + " polynomials fail the norm");
    t.check(norm_fail_above > 0, tag + ": no failing-norm polynomial of larger inner rank");
    t.note(tag + " " + std::to_string(units.size() * units.size()) + " polys, " + std::to_string(low) + " of rank n-l");
  }
  return t.outcome();
}

// ------------------------------------------------------------ 5

Outcome annihilator_equivalence(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed ^ 0x5a5a);
  const std::vector<std::pair<int, int>> chains{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  int agree = 0, vanish = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [p, k] = chains[uniform(rng, 0, chains.size() - 1)];
    const int n = static_cast<int>(uniform(rng, 2, 4));
    const RingPtr ring = build_galois_ring(p, k, n);
    const auto beta = random_free_basis(rng, ring, uniform(rng, 1, n - 1));
    const SigmaPoly a = annihilator_recursive(ring, beta);
    const bool same = a == annihilator_determinant(ring, beta);
    bool zero = true;
    for (const auto& b : beta) zero = zero && is_zero(evaluate(a, b));
    agree += same;
    vanish += zero;
    t.check(same && zero, "trial " + std::to_string(trial) + " over " + ring->describe());
  }
  t.note(std::to_string(agree) + " identical, " + std::to_string(vanish) + " vanishing");
  return t.outcome();
}

// ------------------------------------------------------------ 6

Outcome degree_lower_bound(std::uint64_t) {
  Tally t;
  for (auto [p, k] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    const RingPtr ring = build_galois_ring(p, k, 2);
    const auto elems = all_elements(ring);
    std::uint64_t count = 0, violations = 0;
    for (const auto& f0 : elems)
      for (const auto& f1 : elems) {
        const SigmaPoly f(ring, {f0, f1});
        if (f.is_zero()) continue;
        ++count;
        if (static_cast<int>(inner_rank(matrix_rep_power(f))) < ring->degree() - f.degree()) ++violations;
      }
    const std::string tag = "GR(" + std::to_string(ring->modulus()) + ",2)";
    t.check(violations == 0, tag + ": " + std::to_string(violations) + " violations");
    t.note(tag + " " + std::to_string(count) + " polys");
  }
  return t.outcome();
}

// ------------------------------------------------------------ 7

Outcome building_geometry(std::uint64_t) {
  Tally t;
  using L = LatticeClass<PAdicRational>;
  const std::vector<std::vector<std::vector<long>>> labels{
      {{1, 0}, {0, 1}}, {{1, 0}, {1, 2}}, {{1, 0}, {3, 4}}, {{1, 0}, {1, 4}}, {{1, 0}, {0, 2}},
      {{2, 0}, {0, 1}}, {{1, 0}, {2, 4}}, {{1, 0}, {0, 4}}, {{4, 0}, {0, 1}}, {{2, 0}, {1, 2}}};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto m = qmat(2, labels[i]);
    t.check(canonical_form(m) == m, "label " + std::to_string(i + 1) + " is not canonical");
  }
  const std::vector<std::pair<int, int>> edges{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {4, 6}, {4, 7}, {5, 8}, {5, 9}};
  for (auto [a, b] : edges)
    t.check(adjacent(L(qmat(2, labels[a])), L(qmat(2, labels[b]))), "edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1));
  t.check(!adjacent(L(qmat(2, labels[0])), L(qmat(2, labels[7]))), "[I] ~ [(1 0;0 4)]");
  return t.outcome();
}

// ------------------------------------------------------------ 8

template <class T>
bool same_vertices(const ConvexHull<T>& h, std::vector<Matrix<T>> expect) {
  std::vector<LatticeClass<T>> e;
  for (const auto& m : expect) e.emplace_back(m);
  std::sort(e.begin(), e.end());
  return h.vertices == e;
}

Outcome convex_hull_example(std::uint64_t) {
  Tally t;
  const Backend padic{true, 2}, tadic{false, 0};
  auto pm = [&](const std::string& s) {
    return parse_matrix_spec<PAdicRational>(s, 3, BackendTraits<PAdicRational>::context(padic), BackendTraits<PAdicRational>::zero(padic));
  };
  auto tm = [&](const std::string& s) {
    return parse_matrix_spec<TAdicFunction>(s, 3, BackendTraits<TAdicFunction>::context(tadic), TAdicFunction());
  };
  const auto hp = convex_hull<PAdicRational>({LatticeClass<PAdicRational>(pm("I")), LatticeClass<PAdicRational>(pm("diag(1,pi,pi^2)"))});
  const auto ht = convex_hull<TAdicFunction>({LatticeClass<TAdicFunction>(tm("I")), LatticeClass<TAdicFunction>(tm("diag(1,t,t^2)"))});
  t.check(same_vertices(hp, {pm("I"), pm("diag(1,1,pi)"), pm("diag(1,pi,pi^2)")}), "p-adic hull has " + std::to_string(hp.vertices.size()) + " vertices");
  t.check(same_vertices(ht, {tm("I"), tm("diag(1,1,t)"), tm("diag(1,t,t^2)")}), "t-adic hull has " + std::to_string(ht.vertices.size()) + " vertices");
  return t.outcome();
}

// ------------------------------------------------------------ 9

Outcome mustafin_fiber(std::uint64_t) {
  Tally t;
  const json req = json::parse(R"j({"backend":"padic","p":2,"d":3,"lattices":[
      [[3008,1088,304],[432,40,416],[36,344,100]],
      [[94,5376,3328],[6,1792,192],[48,160,196]],
      [[3,592,16],[376,18,656],[256,40,3072]]]})j");
  const api::Response r = api::run("mustafin.fiber", req);
  const json& comps = r.payload["components"];
  int concentrated = 0, mixed = 0;
  for (const auto& c : comps) {
    const auto sig = c["top_multidegrees"].get<std::vector<std::vector<int>>>();
    if (sig.size() != 1) continue;
    std::vector<int> s = sig.front();
    std::sort(s.begin(), s.end());
    if (s == std::vector<int>{0, 0, 2}) ++concentrated;
    if (s == std::vector<int>{0, 1, 1}) ++mixed;
  }
  t.check(comps.size() == 6, std::to_string(comps.size()) + " components");
  t.check(concentrated == 3, std::to_string(concentrated) + " concentrated signatures");
  t.check(mixed == 3, std::to_string(mixed) + " mixed signatures");
  t.check(!r.warnings.empty() && r.payload["finite_residue_field"] == true, "finite residue field warning missing");
  t.note(std::to_string(r.payload["vertex_count"].get<int>()) + " hull vertices");
  return t.outcome();
}

// ------------------------------------------------------------ 10

Outcome basis_criterion_run(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed ^ 0xa11ce);
  int found = 0, attempts = 0, nontrivial = 0;
  while (found < 100 && attempts < 200000) {
    ++attempts;
    const std::size_t d = found % 2 == 0 ? 2 : 3;
    const std::int64_t p = uniform(rng, 0, 1) ? 2 : 3;
    std::vector<Matrix<PAdicRational>> family;
    for (std::size_t i = 0; i < d; ++i) {
      Matrix<PAdicRational> a(d, d, PAdicRational(Rational(0), p));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) a(r, c) = PAdicRational(Rational(uniform(rng, -3, 3)), p);
      family.push_back(a);
    }
    try {
      if (!family_saturated(family)) continue;
      if (mp_dimension(family).mp_dimension != static_cast<int>(d) - 1) continue;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularB) continue;
      throw;
    }
    ++found;
    try {
      const MPReport<PAdicRational> rep = basis_criterion(family);
      t.check(rep.hull_contains_standard, "instance " + std::to_string(found) + " misses the standard lattice");
      if (rep.hull.size() > 1) ++nontrivial;
    } catch (const Error& e) {
      t.check(false, std::string("instance ") + std::to_string(found) + ": " + e.what());
    }
  }
  t.check(found == 100, "only " + std::to_string(found) + " qualifying instances");
  t.note(std::to_string(found) + " instances from " + std::to_string(attempts) + " draws, " + std::to_string(nontrivial) +
         " with a hull of several vertices");
  return t.outcome();
}

// ------------------------------------------------------------ 11

Outcome property_suites(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed ^ 0x11);

  // Valuation axioms on Q with the 3-adic valuation.
  for (int trial = 0; trial < 2000; ++trial) {
    Rational a(uniform(rng, -500, 500), uniform(rng, 1, 200)), b(uniform(rng, -500, 500), uniform(rng, 1, 200));
    a.canonicalize();
    b.canonicalize();
    const PAdicRational x(a, 3), y(b, 3);
    t.check((x * y).valuation() == x.valuation() + y.valuation(), "multiplicativity");
    t.check((x + y).valuation() >= std::min(x.valuation(), y.valuation()), "ultrametric inequality");
  }

  // Smith reconstruction and rank-nullity over Z/p^k.
  for (int trial = 0; trial < 1500; ++trial) {
    const std::int64_t p = uniform(rng, 0, 1) ? 2 : 3;
    const int k = static_cast<int>(uniform(rng, 1, 3));
    const std::size_t r = uniform(rng, 1, 4), c = uniform(rng, 1, 4);
    Matrix<Zpk> m(r, c, Zpk(0, p, k));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Zpk(uniform(rng, 0, ipow(p, k) - 1) * (uniform(rng, 0, 2) ? 1 : p), p, k);
    const auto s = smith_form(m);
    t.check(s.left * m * s.right == s.diagonal, "Smith reconstruction");
    t.check(inner_rank(m) + free_rank_kernel(m) == c, "rank-nullity");
  }

  // Rank-nullity for sigma-polynomials as maps S -> S.
  for (int trial = 0; trial < 300; ++trial) {
    const RingPtr ring = build_galois_ring(uniform(rng, 0, 1) ? 2 : 3, static_cast<int>(uniform(rng, 1, 2)), static_cast<int>(uniform(rng, 2, 3)));
    const SigmaPoly f = random_sigma(rng, ring, ring->degree() - 1);
    const auto m = matrix_rep_power(f);
    t.check(inner_rank(m) + free_rank_kernel(m) == static_cast<std::size_t>(ring->degree()), "rank-nullity for sigma-polynomials");
  }

  // Monotone k_i and d_i on filtrations of saturated codes.
  for (auto [p, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const RingPtr ring = build_galois_ring(p, 3, n);
    const GRElement eta = ring_int(ring, -1) + ring_int(ring, p);
    for (const auto& spec : {CodeSpec::gabidulin(ring, 1), CodeSpec::twisted(ring, 1, eta, 0)}) {
      const FiltrationReport rep = filtration_report(spec, 3);
      for (std::size_t i = 1; i < rep.d_values.size(); ++i) {
        t.check(rep.d_values[i - 1] <= rep.d_values[i], "d_i nondecreasing");
        t.check(rep.k_values[i - 1] <= rep.k_values[i], "k_i nondecreasing");
      }
    }
  }

  // k_i formula, recursion and limit on synthetic divisor lists.
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Valuation> v;
    const int len = static_cast<int>(uniform(rng, 0, 12));
    for (int j = 0; j < len; ++j) v.push_back(uniform(rng, 0, 5) == 0 ? Valuation::infinity() : Valuation(uniform(rng, 0, 7)));
    std::int64_t finite = 0, top = 0, total = 0;
    for (const auto& x : v)
      if (x.is_finite()) {
        ++finite;
        top = std::max(top, x.value());
        total += x.value();
      }
    for (int i = 1; i <= 15; ++i) {
      std::int64_t e = 0;
      for (const auto& x : v) e += x.is_finite() && x.value() <= i ? 1 : 0;
      t.check(k_sequence(v, i) <= k_sequence(v, i + 1), "k_i nondecreasing on synthetic list");
      t.check(Rational(i + 1) * k_sequence(v, i + 1) == Rational(i) * k_sequence(v, i) + e, "k_i recursion");
    }
    const int big = static_cast<int>(top) + 1000;
    Rational gap = Rational(finite) - k_sequence(v, big);
    Rational expect(total, big);
    expect.canonicalize();
    t.check(gap == expect, "k_i limit identity");
  }
  return t.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valrank acceptance criteria"};
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> only, expect_fail;
  app.add_option("--seed", seed, "seed for the randomized criteria")->capture_default_str();
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--expect-fail", expect_fail, "criteria known to fail; the exit status ignores them");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "Gabidulin filtration k_i = ln, d_i = n-l+1", gabidulin_filtration},
      {2, "twisted Gabidulin distance drop", twisted_filtration},
      {3, "cokernel example", cokernel_example},
      {4, "norm criterion", norm_criterion},
      {5, "annihilator equivalence", annihilator_equivalence},
      {6, "inner rank degree lower bound", degree_lower_bound},
      {7, "building of Q_2 vertex labels and edges", building_geometry},
      {8, "convex hull of the diagonal example", convex_hull_example},
      {9, "Mustafin special fiber over Q_2", mustafin_fiber},
      {10, "basis criterion on random saturated families", basis_criterion_run},
      {11, "property suites", property_suites},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(seed);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(c.id);
    std::printf("%s  %2d  %-48s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::set<int> expected;
  for (int id : expect_fail)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) expected.insert(id);
  if (failed != expected) {
    for (int id : expected)
      if (!failed.count(id)) std::printf("criterion %d was expected to fail but passed\n", id);
    return 1;
  }
  return 0;
}
