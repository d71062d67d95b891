#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parhyp/fpcount.hpp"
#include "parhyp/selftest.hpp"

using namespace parhyp;

namespace {

MultiPoly random_t_poly(const FlagSpace& space, std::mt19937_64& rng) {
  const PrimeField& f = space.field();
  int n = space.family().n, k = space.family().k;
  std::uniform_int_distribution<std::uint64_t> cdist(0, f.p() - 1);
  std::uniform_int_distribution<std::uint32_t> edist(0, 9);
  MultiPoly out(f, n + k);
  for (int t = 0; t < 6; ++t) {
    MultiPoly::Exp e(n + k, 0);
    for (int i = 0; i < k; ++i) e[n + i] = edist(rng);
    out.add_term(e, cdist(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("discrete integral agrees with naive summation") {
  ArrangementFamily fam = examples::k2n4();
  PrimeField field(5);
  FlagSpace space(fam, field);
  std::mt19937_64 rng(17);
  FlagVec<MultiPoly> v;
  for (int e = 0; e < space.dim(); ++e) v.push_back(random_t_poly(space, rng));
  FlagVec<fp_t> fast = integral_fpk(space, v);
  for (int e = 0; e < space.dim(); ++e) {
    fp_t naive = 0;
    std::vector<fp_t> pt(fam.n + fam.k, 0);
    for (fp_t t1 = 0; t1 < 5; ++t1)
      for (fp_t t2 = 0; t2 < 5; ++t2) {
        pt[fam.n] = t1;
        pt[fam.n + 1] = t2;
        naive = field.add(naive, v[e].eval(pt));
      }
    CHECK(fast[e] == naive);
  }
}

TEST_CASE("monomial sums over F_p^k") {
  PrimeField field(5);
  // one z variable to skip, two t variables
  CHECK(monomial_sum_fpk(field, 1, {0, 4, 4}) == 1);    // (-1)^2
  CHECK(monomial_sum_fpk(field, 1, {0, 4, 8}) == 1);
  CHECK(monomial_sum_fpk(field, 1, {0, 4, 0}) == 0);    // t2^0 sums to p
  CHECK(monomial_sum_fpk(field, 1, {0, 3, 4}) == 0);
  CHECK(monomial_sum_fpk(field, 1, {3, 4, 4}) == 1);    // z exponent ignored
}

TEST_CASE("integral identity for the Taylor solutions") {
  for (const ArrangementFamily& fam :
       {examples::k1n3(), examples::k2n4(), examples::k2n4_mixed()}) {
    PrimeField field(5);
    FlagSpace space(fam, field);
    ExponentChoice c{choose_exponents(fam, field),
                     std::vector<fp_t>(fam.k, 0),
                     std::vector<std::uint32_t>(fam.k, 1)};
    SolutionVector sol = solution_vector(fam, space, c);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint64_t> dist(0, 4);
    for (int s = 0; s < 30; ++s) {
      std::vector<fp_t> x(fam.n);
      for (auto& v : x) v = dist(rng);
      ThmTwoIntReport rep = check_thm_2int(fam, space, sol, x);
      CHECK(rep.inequality_hypothesis);
      CHECK(rep.equality_checked);
      CHECK(rep.equality_holds);
    }
  }
}

TEST_CASE("hypotheses are reported, not assumed") {
  ArrangementFamily fam = examples::k1n3();
  PrimeField field(5);
  FlagSpace space(fam, field);
  // A = (7,7,7): sum A - k = 20 >= (k+1)(p-1) = 8 and deg_t F = 18 >= 2p-2
  ThmTwoIntReport rep = check_thm_2int(fam, space, {7, 7, 7}, {0}, {1, 2, 3});
  CHECK_FALSE(rep.degree_hypothesis);
  CHECK_FALSE(rep.inequality_hypothesis);
  CHECK_FALSE(rep.equality_checked);
}

TEST_CASE("hypersurface enumeration counts points correctly") {
  ArrangementFamily fam = examples::k1n3();
  PrimeField field(7);
  FlagSpace space(fam, field);
  std::vector<fp_t> x = {0, 1, 3};
  Hypersurface h = enumerate_hypersurface(fam, space, x, 2);
  // naive double loop over (t, y)
  std::size_t naive = 0;
  for (fp_t t = 0; t < 7; ++t)
    for (fp_t y = 0; y < 7; ++y) {
      fp_t v = 1;
      for (int j = 0; j < 3; ++j) v = field.mul(v, field.add(x[j], t));
      if (field.mul(y, y) == v) ++naive;
    }
  CHECK(h.points.size() == naive);
  for (const auto& [t, y] : h.points) {
    fp_t v = 1;
    for (int j = 0; j < 3; ++j) v = field.mul(v, field.add(x[j], t[0]));
    CHECK(field.mul(y, y) == v);
  }
}

TEST_CASE("primed integral skips vanishing denominators") {
  ArrangementFamily fam = examples::k1n3();
  PrimeField field(5);
  FlagSpace space(fam, field);
  std::vector<fp_t> x = {0, 1, 2};
  Hypersurface h = enumerate_hypersurface(fam, space, x, 2);
  for (int e = 0; e < space.dim(); ++e) {
    int j = space.basis()[e].subset[0];
    fp_t naive = 0;
    for (const auto& [t, y] : h.points) {
      fp_t den = field.add(x[j], t[0]);
      if (den != 0) naive = field.add(naive, field.inv(den));
    }
    CHECK(hypersurface_integral(fam, space, h, e) == naive);
  }
}

TEST_CASE("quadratic cover identity at a point") {
  ArrangementFamily fam = examples::k1n3();
  PrimeField field(5);
  FlagSpace space(fam, field);
  VerifyReport rep = check_kappa_cover(fam, space, {0, 1, 2}, 2);
  CHECK(rep.passed);
}

TEST_CASE("cubic cover identity includes vanishing intermediate sums") {
  ArrangementFamily fam = examples::kappa3();
  PrimeField field(7);
  FlagSpace space(fam, field);
  VerifyReport rep = check_kappa_cover(fam, space, {0, 2, 5}, 3);
  CHECK(rep.passed);
  bool saw_intermediate = false;
  for (const CheckLine& l : rep.checks)
    if (l.name.find("intermediate") != std::string::npos)
      saw_intermediate = true;
  CHECK(saw_intermediate);
}

TEST_CASE("cover hypotheses are enforced") {
  PrimeField f5(5), f7(7);
  ArrangementFamily cubic = examples::kappa3();
  FlagSpace s5(cubic, f5);
  // 3 does not divide 5 - 1
  CHECK_THROWS_AS(check_kappa_cover(cubic, s5, {0, 1, 2}, 3),
                  HypothesisViolated);
  ArrangementFamily quad = examples::k1n3();
  FlagSpace s7(quad, f7);
  // weights -1 are not -(kappa-1) for kappa = 3
  CHECK_THROWS_AS(check_kappa_cover(quad, s7, {0, 1, 2}, 3),
                  HypothesisViolated);
}
