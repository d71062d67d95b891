#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parhyp/multipoly.hpp"

using namespace parhyp;

namespace {

MultiPoly random_poly(const PrimeField& field, int nvars, std::mt19937_64& rng,
                      int terms = 5, std::uint32_t max_exp = 4) {
  std::uniform_int_distribution<std::uint64_t> cdist(0, field.p() - 1);
  std::uniform_int_distribution<std::uint32_t> edist(0, max_exp);
  MultiPoly f(field, nvars);
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exp e(nvars);
    for (auto& v : e) v = edist(rng);
    f.add_term(e, cdist(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("frobenius collapse of (t+2)^3 at p=3") {
  PrimeField field(3);
  MultiPoly f = MultiPoly::variable(field, 1, 0) +
                MultiPoly::constant(field, 1, 2);
  MultiPoly cube = f * f * f;
  MultiPoly expect(field, 1);
  expect.add_term({3}, std::int64_t{1});
  expect.add_term({0}, std::int64_t{2});
  CHECK(cube == expect);
  CHECK(f.pow(3) == cube);
}

TEST_CASE("ring axioms on random polynomials") {
  PrimeField field(7);
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 1000; ++iter) {
    MultiPoly f = random_poly(field, 3, rng);
    MultiPoly g = random_poly(field, 3, rng);
    MultiPoly h = random_poly(field, 3, rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f - f == MultiPoly(field, 3));
  }
}

TEST_CASE("canonical form drops zero coefficients") {
  PrimeField field(5);
  MultiPoly f(field, 2);
  f.add_term({1, 0}, std::int64_t{3});
  f.add_term({1, 0}, std::int64_t{2});
  CHECK(f.is_zero());
  CHECK(f.terms().empty());
}

TEST_CASE("frobenius property of p-th powers") {
  for (std::uint64_t p : {3, 5}) {
    PrimeField field(p);
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
      MultiPoly f = random_poly(field, 2, rng);
      MultiPoly fp_pow = f.pow(p);
      for (const auto& [e, c] : fp_pow.terms())
        for (auto v : e) CHECK(v % p == 0);
      // coefficientwise a^p = a: the p-th power is f with exponents scaled
      MultiPoly expect(field, 2);
      for (const auto& [e, c] : f.terms()) {
        MultiPoly::Exp scaled = e;
        for (auto& v : scaled) v *= static_cast<std::uint32_t>(p);
        expect.add_term(scaled, c);
      }
      CHECK(fp_pow == expect);
      // and the partial derivative annihilates it
      for (int v = 0; v < 2; ++v) CHECK(fp_pow.partial(v).is_zero());
    }
  }
}

TEST_CASE("partial derivative product rule") {
  PrimeField field(11);
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    MultiPoly f = random_poly(field, 3, rng);
    MultiPoly g = random_poly(field, 3, rng);
    for (int v = 0; v < 3; ++v)
      CHECK((f * g).partial(v) == f.partial(v) * g + f * g.partial(v));
  }
}

TEST_CASE("shift substitutes var -> var + q") {
  PrimeField field(13);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint64_t> dist(0, 12);
  for (int iter = 0; iter < 50; ++iter) {
    MultiPoly f = random_poly(field, 2, rng);
    fp_t q = dist(rng);
    MultiPoly s = f.shift(0, q);
    // round trip
    CHECK(s.shift(0, field.neg(q)) == f);
    // pointwise agreement with direct substitution
    for (int a = 0; a < 13; ++a)
      for (int b = 0; b < 13; ++b) {
        fp_t va = static_cast<fp_t>(a), vb = static_cast<fp_t>(b);
        CHECK(s.eval({va, vb}) == f.eval({field.add(va, q), vb}));
      }
  }
}

TEST_CASE("shift_block shifts several variables at once") {
  PrimeField field(5);
  std::mt19937_64 rng(11);
  MultiPoly f = random_poly(field, 3, rng);
  MultiPoly s = f.shift_block(1, {2, 3});
  CHECK(s == f.shift(1, 2).shift(2, 3));
}

TEST_CASE("coefficient extraction zeroes the addressed block") {
  PrimeField field(5);
  MultiPoly f(field, 3);  // z, t1, t2
  f.add_term({2, 1, 0}, std::int64_t{3});
  f.add_term({1, 1, 0}, std::int64_t{4});
  f.add_term({1, 0, 2}, std::int64_t{1});
  MultiPoly c = f.coeff_of(1, {1, 0});
  MultiPoly expect(field, 3);
  expect.add_term({2, 0, 0}, std::int64_t{3});
  expect.add_term({1, 0, 0}, std::int64_t{4});
  CHECK(c == expect);
  CHECK(f.coeff_of(1, {5, 5}).is_zero());
}

TEST_CASE("pow by binary exponentiation") {
  PrimeField field(7);
  std::mt19937_64 rng(5);
  MultiPoly f = random_poly(field, 2, rng, 3, 2);
  CHECK(f.pow(0) == MultiPoly::constant(field, 2, 1));
  MultiPoly acc = MultiPoly::constant(field, 2, 1);
  for (int e = 1; e <= 6; ++e) {
    acc = acc * f;
    CHECK(f.pow(e) == acc);
  }
}

TEST_CASE("degrees") {
  PrimeField field(5);
  MultiPoly f(field, 2);
  CHECK(f.total_degree() == -1);
  f.add_term({2, 3}, std::int64_t{1});
  f.add_term({4, 0}, std::int64_t{1});
  CHECK(f.total_degree() == 5);
  CHECK(f.degree_in(0) == 4);
  CHECK(f.degree_in(1) == 3);
}

TEST_CASE("graded-lex term order is byte-stable") {
  PrimeField field(5);
  MultiPoly f(field, 2);
  f.add_term({0, 2}, std::int64_t{1});
  f.add_term({1, 0}, std::int64_t{2});
  f.add_term({0, 1}, std::int64_t{3});
  std::vector<MultiPoly::Exp> order;
  for (const auto& [e, c] : f.terms()) order.push_back(e);
  // ascending total degree, ties broken lexicographically
  CHECK(order == std::vector<MultiPoly::Exp>{{0, 1}, {1, 0}, {0, 2}});
}

TEST_CASE("binomial rows match the multiplicative formula below p") {
  PrimeField field(13);
  for (std::uint32_t m = 0; m < 13; ++m) {
    std::vector<fp_t> row = binomial_row(field, m);
    REQUIRE(row.size() == m + 1);
    fp_t c = 1;
    for (std::uint32_t j = 0; j <= m; ++j) {
      CHECK(row[j] == c);
      if (j < m) c = field.mul(c, field.mul(m - j, field.inv(j + 1)));
    }
  }
  // Lucas check past p: C(13,j) mod 13 vanishes except at the ends
  std::vector<fp_t> r13 = binomial_row(field, 13);
  CHECK(r13[0] == 1);
  CHECK(r13[13] == 1);
  for (std::uint32_t j = 1; j < 13; ++j) CHECK(r13[j] == 0);
}

TEST_CASE("mixed variable counts are rejected") {
  PrimeField field(5);
  MultiPoly f(field, 2), g(field, 3);
  CHECK_THROWS_AS(f + g, VariableMismatch);
  CHECK_THROWS_AS(f * g, VariableMismatch);
}
