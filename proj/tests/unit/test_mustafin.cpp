#include <doctest.h>

#include "support/seed.hpp"
#include "valrank/json_io.hpp"
#include "valrank/mustafin.hpp"

using namespace valrank;
using valrank::testing::make_rng;
using valrank::testing::uniform;

namespace {

using TM = Matrix<TAdicFunction>;

TM tmat(const std::string& spec) { return parse_matrix_spec<TAdicFunction>(spec, 3, tadic_context(), TAdicFunction()); }

Matrix<Rational> rmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return Matrix<Rational>::from_rows(r, Rational(0));
}

Matrix<PAdicRational> pmat(const std::string& spec, std::size_t d = 2) {
  const Backend b{true, 2};
  return parse_matrix_spec<PAdicRational>(spec, d, BackendTraits<PAdicRational>::context(b), BackendTraits<PAdicRational>::zero(b));
}

}  // namespace

TEST_CASE("reduced maps at the three hull vertices") {
  const std::vector<TM> gamma{tmat("I"), tmat("diag(1,t,t^2)")};
  auto maps = reduced_maps(gamma, tmat("I"));
  CHECK(maps[0] == rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(maps[1] == rmat({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  maps = reduced_maps(gamma, tmat("diag(1,t,t^2)"));
  CHECK(maps[0] == rmat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(maps[1] == rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  maps = reduced_maps(gamma, tmat("diag(1,1,t)"));
  CHECK(maps[0] == rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  CHECK(maps[1] == rmat({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("reduced maps are homothety invariant") {
  const std::vector<TM> gamma{tmat("[[1,0,0],[t,1,0],[0,1,t]]"), tmat("diag(1,t,t^2)")};
  const TM g = tmat("diag(1,1,t)");
  const auto base = reduced_maps(gamma, g);
  for (std::int64_t m = -2; m <= 2; ++m) {
    std::vector<TM> scaled;
    for (const auto& x : gamma) scaled.push_back(scale(x, x.zero().pi_power(m)));
    CHECK(reduced_maps(scaled, g) == base);
    CHECK(reduced_maps(gamma, scale(g, g.zero().pi_power(m))) == base);
  }
}

TEST_CASE("kernel profiles") {
  const auto t1 = kernel_profile<Rational>({rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), rmat({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})});
  CHECK(t1 == std::vector<int>{3, 0, 2, 0});
  const auto t3 = kernel_profile<Rational>({rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}), rmat({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
  CHECK(t3 == std::vector<int>{3, 1, 1, 0});
  CHECK(m_set(t3, 2, 3, 2) == std::vector<Multidegree>{{1, 1}});
  CHECK(m_set(t1, 2, 3, 2) == std::vector<Multidegree>{{2, 0}});
  CHECK(m_set(t1, 0, 3, 2) == std::vector<Multidegree>{{0, 0}});
  CHECK(image_dimension(t3, 3, 2) == 2);
  std::vector<Matrix<Rational>> many(21, rmat({{1}}));
  CHECK_THROWS_AS(kernel_profile(many), Error);
}

TEST_CASE("image dimension edge cases") {
  const auto single = kernel_profile<Rational>({rmat({{1, 2}, {3, 4}})});
  CHECK(image_dimension(single, 2, 1) == 1);
  const auto rank_one = rmat({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(image_dimension(kernel_profile<Rational>({rank_one, rank_one, rank_one}), 3, 3) == 0);
}

TEST_CASE("m_set agrees with a direct filter over all compositions") {
  auto rng = make_rng(60);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 1, 4);
    const int d = static_cast<int>(uniform(rng, 2, 4));
    std::vector<Matrix<Fp>> maps;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix<Fp> m(d, d, Fp(0, 2));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = Fp(uniform(rng, 0, 1), 2);
      m(0, 0) = Fp(1, 2);
      maps.push_back(m);
    }
    const auto table = kernel_profile(maps);
    int best = 0;
    for (int h = 0; h < d; ++h) {
      std::vector<Multidegree> expect;
      // Every vector in [0, h]^n, in lexicographic order.
      Multidegree m(n, 0);
      while (true) {
        int sum = 0;
        for (int x : m) sum += x;
        bool ok = sum == h;
        for (std::size_t mask = 1; ok && mask < (std::size_t{1} << n); ++mask) {
          int s = 0;
          for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s += m[i];
          ok = s < d - table[mask];
        }
        if (ok) expect.push_back(m);
        std::size_t pos = n;
        while (pos > 0 && ++m[pos - 1] > h) m[--pos] = 0;
        if (pos == 0) break;
      }
      CHECK(m_set(table, h, d, n) == expect);
      if (!expect.empty()) best = h;
    }
    CHECK(image_dimension(table, d, n) == best);
  }
}

TEST_CASE("special fiber of the diagonal example") {
  const auto fiber = special_fiber_components<TAdicFunction>({LatticeClass<TAdicFunction>(tmat("I")),
                                                               LatticeClass<TAdicFunction>(tmat("diag(1,t,t^2)"))});
  CHECK(fiber.vertices.size() == 3);
  CHECK(fiber.component_count() == 3);
  CHECK_FALSE(fiber.finite_residue_field);
  std::vector<std::vector<Multidegree>> sigs;
  for (const auto& v : fiber.vertices) sigs.push_back(v.top_multidegrees);
  std::sort(sigs.begin(), sigs.end());
  CHECK(sigs == std::vector<std::vector<Multidegree>>{{{0, 2}}, {{1, 1}}, {{2, 0}}});
  const auto single = special_fiber_components<TAdicFunction>({LatticeClass<TAdicFunction>(tmat("I"))});
  CHECK(single.component_count() == 1);
}

TEST_CASE("multi-projective dimension and the basis criterion") {
  const auto swap = pmat("[[0,1],[1,0]]");
  const auto r = basis_criterion<PAdicRational>({pmat("I"), swap});
  CHECK(r.saturated);
  CHECK(r.mp_dimension == 1);
  CHECK(r.hull.size() == 1);
  CHECK(r.hull_contains_standard);

  // A_2 = 2 A_1 spans a non-saturated module.
  const auto ns = mp_dimension<PAdicRational>({pmat("[[1,0],[0,1]]"), pmat("[[0,2],[2,0]]")});
  CHECK_FALSE(ns.saturated);

  CHECK_THROWS_AS(mp_dimension<PAdicRational>({pmat("I")}), Error);
  try {
    mp_dimension<PAdicRational>({pmat("diag(1,1)"), pmat("diag(1,0)")});
    FAIL("expected a singular B");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularB);
  }
  // B_1 = I and B_2 = diag(1,2): A_1 = (e_1 | e_1), A_2 = (e_2 | 2 e_2).
  const auto two = basis_criterion<PAdicRational>({pmat("[[1,1],[0,0]]"), pmat("[[0,0],[1,2]]")});
  CHECK(two.gamma.size() == 2);
  CHECK(two.hull.size() == 2);
  CHECK(two.hull_contains_standard);
}
