#ifndef PARHYP_ARRANGEMENT_HPP
#define PARHYP_ARRANGEMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "parhyp/fp.hpp"

namespace parhyp {

// Family of n hyperplanes f_j = z_j + b_j^1 t_1 + ... + b_j^k t_k moving
// parallelly as z varies, with nonzero integer weights and parameter kappa.
// Hyperplane indices are 0-based internally, 1-based in serialized form.
struct ArrangementFamily {
  int n = 0;
  int k = 0;
  std::vector<std::vector<std::int64_t>> b;  // n rows of length k
  std::vector<std::int64_t> weights;         // a_j, all nonzero
  std::int64_t kappa = 0;
};

// Minimal dependent subset of the linear parts, with primitive integer
// dependency coefficients, gcd 1, first nonzero coefficient positive.
struct Circuit {
  std::vector<int> indices;           // sorted, 0-based
  std::vector<std::int64_t> lambdas;  // same length as indices

  std::int64_t lambda_of(int hyperplane) const;
};

// Throws ZeroLinearForm / RankDeficient / ZeroWeight / ZeroKappa.
void validate_family(const ArrangementFamily& fam);

// All circuits of the linear matroid of the rows of b, in lexicographic
// order of index sets grouped by size.
std::vector<Circuit> circuits(const ArrangementFamily& fam);

struct GoodPrimeResult {
  bool good = false;
  std::string certificate;  // offending row or subset when not good

  explicit operator bool() const { return good; }
};

// p is good when every row of b stays nonzero mod p and independence of
// subsets of size <= k agrees over Q and over F_p.  Throws NotPrime.
GoodPrimeResult is_good_prime(const ArrangementFamily& fam, std::uint64_t p);

// True iff [f]_C(x) != 0 for every circuit.
bool off_discriminant(const ArrangementFamily& fam,
                      const std::vector<Circuit>& circs,
                      const std::vector<fp_t>& x, const PrimeField& field);

// Exact rank of integer row vectors over Q (fraction-free elimination).
int rank_over_q(const std::vector<std::vector<std::int64_t>>& rows);

// Rank of the same rows reduced mod p.
int rank_mod_p(const std::vector<std::vector<std::int64_t>>& rows,
               const PrimeField& field);

// Determinant of a square integer matrix (Bareiss).
std::int64_t det_int(std::vector<std::vector<std::int64_t>> m);

// Circuit linear form evaluated at x in F_p^n.
fp_t circuit_form_at(const Circuit& c, const std::vector<fp_t>& x,
                     const PrimeField& field);

}  // namespace parhyp

#endif
