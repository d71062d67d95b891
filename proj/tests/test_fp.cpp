#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parhyp/fp.hpp"

using namespace parhyp;

TEST_CASE("primality by trial division") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(9973));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(4));
  CHECK_FALSE(is_prime_u64(9975));
  CHECK_THROWS_AS(PrimeField(15), NotPrime);
  CHECK_THROWS_AS(PrimeField(1), NotPrime);
}

TEST_CASE("field axioms, exhaustive for small p") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    PrimeField f(p);
    for (fp_t a = 0; a < p; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, p - 1) == 1);  // Fermat
      }
      for (fp_t b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        for (fp_t c = 0; c < p; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("reduction of negative integers") {
  PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(-7) == 0);
  CHECK(f.reduce(-15) == 6);
  CHECK(f.reduce(20) == 6);
}

TEST_CASE("pow edge cases") {
  PrimeField f(13);
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(5, 0) == 1);
  CHECK(f.pow(0, 3) == 0);
  CHECK(f.pow(2, 12 * 1000) == 1);
}

TEST_CASE("zero has no inverse") {
  PrimeField f(5);
  CHECK_THROWS_AS(f.inv(0), ZeroInverse);
}
