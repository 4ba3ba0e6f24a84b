#include <doctest.h>

#include "support/seed.hpp"
#include "valrank/json_io.hpp"
#include "valrank/valued.hpp"

using namespace valrank;
using valrank::testing::make_rng;
using valrank::testing::uniform;

namespace {

PAdicRational random_padic(std::mt19937_64& rng, std::int64_t p) {
  if (uniform(rng, 0, 9) == 0) return PAdicRational(Rational(0), p);
  Rational r(uniform(rng, -200, 200), uniform(rng, 1, 60));
  r.canonicalize();
  if (r == 0) r = 1;
  return PAdicRational(r, p);
}

TAdicFunction random_tadic(std::mt19937_64& rng) {
  auto poly = [&](bool nonzero) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(uniform(rng, 0, 3));
    for (int i = 0; i <= deg; ++i) c.emplace_back(uniform(rng, -3, 3));
    if (nonzero) c.back() = uniform(rng, 1, 3);
    return QPoly(c);
  };
  const QPoly num = poly(false);
  return TAdicFunction(num, poly(true));
}

}  // namespace

TEST_CASE("p-adic valuations of simple rationals") {
  CHECK(PAdicRational(Rational(12), 2).valuation() == 2);
  CHECK(PAdicRational(Rational(3, 8), 2).valuation() == -3);
  CHECK(PAdicRational(Rational(3, 8), 3).valuation() == 1);
  CHECK(PAdicRational(Rational(0), 5).valuation().is_infinite());
  CHECK(PAdicRational(Rational(7, 4), 3).residue().value() == 1);  // 7/4 = 1 mod 3
  CHECK_THROWS_AS(PAdicRational::checked(Rational(1), 6), Error);
}

TEST_CASE("valuation axioms hold on random elements") {
  auto rng = make_rng(1);
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 400; ++trial) {
      const auto a = random_padic(rng, p), b = random_padic(rng, p);
      CHECK((a * b).valuation() == a.valuation() + b.valuation());
      CHECK((a + b).valuation() >= std::min(a.valuation(), b.valuation()));
      if (a.valuation() != b.valuation()) CHECK((a + b).valuation() == std::min(a.valuation(), b.valuation()));
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_tadic(rng), b = random_tadic(rng);
    CHECK((a * b).valuation() == a.valuation() + b.valuation());
    CHECK((a + b).valuation() >= std::min(a.valuation(), b.valuation()));
  }
}

TEST_CASE("uniformizer powers and residues") {
  const PAdicRational one(Rational(1), 3);
  CHECK(one.pi_power(-2).value() == Rational(1, 9));
  CHECK(one.pi_power(3).valuation() == 3);
  const TAdicFunction t1(Rational(1));
  CHECK(t1.pi_power(2).valuation() == 2);
  CHECK(t1.pi_power(-1).valuation() == -1);
  // (2 + t) / (1 - t) has residue 2 and valuation 0.
  const TAdicFunction f(QPoly({Rational(2), Rational(1)}), QPoly({Rational(1), Rational(-1)}));
  CHECK(f.valuation() == 0);
  CHECK(f.residue() == 2);
  CHECK(f.to_string() == "(2+t)/(1-t)");
}

TEST_CASE("representatives modulo powers of the maximal ideal") {
  const PAdicRational x(Rational(1, 3), 2);  // 1/3 = 1 + 2 + 8 + ... in Z_2 (= ...10101011)
  const auto r = x.residue_representative(4);
  CHECK(r.value() == 11);
  CHECK((x - r).valuation() >= 4);
  auto rng = make_rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto y = random_tadic(rng);
    if (is_zero(y) || y.valuation() < 0) continue;
    const auto rep = y.residue_representative(3);
    CHECK((y - rep).valuation() >= 3);
    CHECK(rep.denominator() == QPoly::constant(Rational(1)));
  }
}

TEST_CASE("saturation scales to minimal valuation zero") {
  const PAdicRational z(Rational(0), 2);
  auto m = Matrix<PAdicRational>::from_rows(
      {{PAdicRational(Rational(4), 2), PAdicRational(Rational(6), 2)}, {z, PAdicRational(Rational(8), 2)}}, z);
  const auto [s, sat] = saturate_matrix(m);
  CHECK(s == 1);
  CHECK(min_valuation(sat) == 0);
  const auto red = reduce_residue(sat);
  CHECK(red(0, 1).value() == 1);
  CHECK(red(0, 0).value() == 0);
  CHECK_THROWS_AS(saturate_matrix(Matrix<PAdicRational>(2, 2, z)), Error);
}

TEST_CASE("expression parser") {
  CHECK(parse_padic("-1+pi^2", 3).value() == 8);
  CHECK(parse_padic("p^-1 * 6", 3).value() == 2);
  CHECK(parse_padic("(1+2)/4", 5).value() == Rational(3, 4));
  CHECK(to_string(parse_tadic("1 + t^2 - 3*t")) == "1-3*t+t^2");
  CHECK(parse_tadic("1/t").valuation() == -1);
  try {
    parse_padic("1+*2", 3);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  CHECK_THROWS_AS(parse_tadic("x"), Error);
  CHECK_THROWS_AS(parse_padic("1/0", 2), Error);
}

TEST_CASE("matrix specifications") {
  const auto ctx = tadic_context();
  const auto id = parse_matrix_spec<TAdicFunction>("I", 3, ctx, TAdicFunction());
  CHECK(id == Matrix<TAdicFunction>::identity(3, TAdicFunction()));
  const auto d = parse_matrix_spec<TAdicFunction>("diag(1, t, t^2)", 0, ctx, TAdicFunction());
  CHECK(d(2, 2).valuation() == 2);
  const auto m = parse_matrix_spec<TAdicFunction>("[[1,0],[t,1]]", 0, ctx, TAdicFunction());
  CHECK(m(1, 0).valuation() == 1);
  CHECK_THROWS_AS(parse_matrix_spec<TAdicFunction>("I", 0, ctx, TAdicFunction()), Error);
  CHECK_THROWS_AS(parse_matrix_spec<TAdicFunction>("[[1,0],[1]]", 0, ctx, TAdicFunction()), Error);
}
