#include <doctest.h>

#include <cmath>
#include <set>

#include "support/seed.hpp"
#include "valrank/buildings.hpp"
#include "valrank/json_io.hpp"

using namespace valrank;
using valrank::testing::make_rng;
using valrank::testing::uniform;

namespace {

using PM = Matrix<PAdicRational>;
using TM = Matrix<TAdicFunction>;

PM qmat(std::int64_t p, const std::vector<std::vector<long>>& rows) {
  const PAdicRational z(Rational(0), p);
  std::vector<std::vector<PAdicRational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(Rational(x), p);
  }
  return PM::from_rows(r, z);
}

TM tmat(const std::string& spec) { return parse_matrix_spec<TAdicFunction>(spec, 3, tadic_context(), TAdicFunction()); }

// Product of random elementary operations, so the result is in GL_d(O).
PM random_unimodular(std::mt19937_64& rng, std::size_t d, std::int64_t p) {
  const PAdicRational z(Rational(0), p);
  PM u = PM::identity(d, z);
  for (int step = 0; step < 6; ++step) {
    const std::size_t a = uniform(rng, 0, d - 1), b = uniform(rng, 0, d - 1);
    if (a == b) {
      u.scale_row(a, PAdicRational(Rational(uniform(rng, 1, p - 1) + p * uniform(rng, 0, 3)), p));
    } else {
      u.row_axpy(a, PAdicRational(Rational(uniform(rng, -9, 9), 1 + p * uniform(rng, 0, 3)), p), b);
    }
  }
  return u;
}

PM random_lattice(std::mt19937_64& rng, std::size_t d, std::int64_t p) {
  while (true) {
    PM m(d, d, PAdicRational(Rational(0), p));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = PAdicRational(Rational(uniform(rng, -8, 8)), p);
    if (!is_zero(local_determinant(m))) return m;
  }
}

}  // namespace

TEST_CASE("canonical forms of the printed vertex labels") {
  CHECK(canonical_form(qmat(2, {{4, 0}, {2, 4}})) == qmat(2, {{2, 0}, {1, 2}}));
  CHECK(canonical_form(qmat(2, {{1, 0}, {5, 4}})) == qmat(2, {{1, 0}, {1, 4}}));
  for (const auto& label : {qmat(2, {{1, 0}, {3, 4}}), qmat(2, {{2, 0}, {1, 2}}), qmat(2, {{1, 0}, {0, 4}})})
    CHECK(canonical_form(label) == label);
  CHECK_THROWS_AS(canonical_form(qmat(2, {{1, 2}, {2, 4}})), Error);
}

TEST_CASE("canonical form is a class invariant") {
  auto rng = make_rng(50);
  for (std::int64_t p : {2, 3}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t d = uniform(rng, 2, 3);
      const PM m = random_lattice(rng, d, p);
      const PM c = canonical_form(m);
      CHECK(canonical_form(c) == c);
      CHECK(min_valuation(c) == 0);
      for (std::int64_t s = -3; s <= 3; ++s) CHECK(canonical_form(scale(m, m.zero().pi_power(s))) == c);
      CHECK(canonical_form(m * random_unimodular(rng, d, p)) == c);
    }
  }
}

TEST_CASE("adjacency") {
  const LatticeClass<PAdicRational> id(qmat(2, {{1, 0}, {0, 1}}));
  CHECK(adjacent(id, LatticeClass<PAdicRational>(qmat(2, {{1, 0}, {0, 2}}))));
  CHECK_FALSE(adjacent(id, LatticeClass<PAdicRational>(qmat(2, {{1, 0}, {0, 4}}))));
  CHECK_FALSE(adjacent(id, id));
  CHECK_THROWS_AS(adjacent(id, LatticeClass<PAdicRational>(qmat(3, {{1, 0}, {0, 1}}))), Error);

  auto rng = make_rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = uniform(rng, 2, 3);
    const LatticeClass<PAdicRational> a(random_lattice(rng, d, 2)), b(random_lattice(rng, d, 2));
    const auto inv = relative_invariants(a.canonical(), b.canonical());
    CHECK(adjacent(a, b) == adjacent(b, a));
    CHECK(adjacent(a, b) == (inv.back() - inv.front() == 1));
  }
}

TEST_CASE("the standard vertex has three small neighbours") {
  const LatticeClass<PAdicRational> id(qmat(2, {{1, 0}, {0, 1}}));
  std::set<std::vector<long>> neighbours;
  for (long a : {1, 2, 4})
    for (long c : {1, 2, 4})
      for (long b = 0; b <= 4; ++b) {
        const PM m = qmat(2, {{a, 0}, {b, c}});
        if (canonical_form(m) != m) continue;
        if (adjacent(id, LatticeClass<PAdicRational>(m))) neighbours.insert({a, b, c});
      }
  CHECK(neighbours == std::set<std::vector<long>>{{1, 0, 2}, {2, 0, 1}, {1, 1, 2}});
}

TEST_CASE("intersection is the meet") {
  auto rng = make_rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = uniform(rng, 2, 3);
    const PM m1 = random_lattice(rng, d, 3), m2 = random_lattice(rng, d, 3);
    const PM meet = intersect(m1, m2);
    CHECK(contains(m1, meet));
    CHECK(contains(m2, meet));
    // Oracle: in the basis M1 L^-1 of a Smith decomposition L (M1^-1 M2) R = diag(p^a),
    // the two lattices are O^d and diag(p^a) O^d, so the meet is diag(p^max(a,0)).
    const auto s = smith_form(field_inverse(m1) * m2);
    PM diag = PM::identity(d, m1.zero());
    for (std::size_t i = 0; i < d; ++i) diag(i, i) = m1.zero().pi_power(std::max<std::int64_t>(0, s.divisor_valuations[i].value()));
    const PM expected = m1 * field_inverse(s.left) * diag;
    CHECK(hermite_form(expected) == meet);
    // Any lattice inside both sits inside the meet.
    const PM inner = intersect(meet, random_lattice(rng, d, 3));
    CHECK(contains(meet, inner));
  }
  const TM id = tmat("I"), d = tmat("diag(1,t,t^2)");
  CHECK(LatticeClass<TAdicFunction>(intersect(id, d)) == LatticeClass<TAdicFunction>(d));
}

TEST_CASE("convex hull examples") {
  const LatticeClass<TAdicFunction> a(tmat("diag(1,1,1)")), b(tmat("diag(1,t,t^2)"));
  const auto h = convex_hull<TAdicFunction>({a, b});
  REQUIRE(h.vertices.size() == 3);
  CHECK(hull_member(LatticeClass<TAdicFunction>(tmat("diag(1,1,t)")), h));
  CHECK_FALSE(hull_member(LatticeClass<TAdicFunction>(tmat("diag(1,1,t^3)")), h));
  CHECK(hull_member(a, h));
  CHECK(convex_hull<TAdicFunction>({a}).vertices.size() == 1);

  // In the tree the hull of two vertices at distance k is the geodesic.
  for (long k = 1; k <= 4; ++k) {
    const LatticeClass<PAdicRational> u(qmat(3, {{1, 0}, {0, 1}})), v(qmat(3, {{1, 0}, {0, std::lround(std::pow(3, k))}}));
    CHECK(convex_hull<PAdicRational>({u, v}).vertices.size() == static_cast<std::size_t>(k + 1));
  }
}

TEST_CASE("hulls are convex") {
  auto rng = make_rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t d = uniform(rng, 2, 3);
    std::vector<LatticeClass<PAdicRational>> gamma;
    for (int i = 0; i < 2; ++i) {
      PM m = PM::identity(d, PAdicRational(Rational(0), 2));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c <= r; ++c) m(r, c) = PAdicRational(Rational(r == c ? 1 << uniform(rng, 0, 2) : uniform(rng, 0, 3)), 2);
      gamma.emplace_back(m);
    }
    const auto h = convex_hull(gamma);
    for (const auto& g : gamma) CHECK(hull_member(g, h));
    for (const auto& x : h.vertices)
      for (const auto& y : h.vertices) {
        const auto inv = relative_invariants(x.canonical(), y.canonical());
        for (std::int64_t m = -inv.back() - 1; m <= -inv.front() + 1; ++m) {
          const PM shifted = scale(y.canonical(), x.canonical().zero().pi_power(m));
          CHECK(hull_member(LatticeClass<PAdicRational>(intersect(x.canonical(), shifted)), h));
        }
      }
  }
}

TEST_CASE("backends agree on diagonal data") {
  const Backend b2{true, 2};
  const auto ctx = BackendTraits<PAdicRational>::context(b2);
  const PAdicRational z = BackendTraits<PAdicRational>::zero(b2);
  const LatticeClass<PAdicRational> a(parse_matrix_spec<PAdicRational>("I", 3, ctx, z));
  const LatticeClass<PAdicRational> b(parse_matrix_spec<PAdicRational>("diag(1,pi,pi^2)", 3, ctx, z));
  const auto hp = convex_hull<PAdicRational>({a, b});
  const auto ht = convex_hull<TAdicFunction>({LatticeClass<TAdicFunction>(tmat("I")), LatticeClass<TAdicFunction>(tmat("diag(1,t,t^2)"))});
  REQUIRE(hp.vertices.size() == ht.vertices.size());
  for (std::size_t i = 0; i < hp.vertices.size(); ++i)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        CHECK(hp.vertices[i].canonical()(r, c).valuation() == ht.vertices[i].canonical()(r, c).valuation());
}
