#ifndef PARHYP_BETHE_HPP
#define PARHYP_BETHE_HPP

#include <vector>

#include "parhyp/gaussmanin.hpp"

namespace parhyp {

struct BetheSolution {
  std::vector<fp_t> t;
};

// Exhaustive scan of F_p^k for points t with all [f]_j(x,t) != 0 and
// sum_j b_j^i [a_j] / [f]_j(x,t) = 0 for i = 1..k.
std::vector<BetheSolution> solve_bae(const ArrangementFamily& fam,
                                     const PrimeField& field,
                                     const std::vector<fp_t>& x);

// Coordinates d_{j_1..j_k} / prod_l [f]_{j_l}(x,t) of the Bethe vector.
FlagVec<fp_t> bethe_vector(const ArrangementFamily& fam, const FlagSpace& space,
                           const std::vector<fp_t>& x,
                           const std::vector<fp_t>& t);

// [K]_i(x) F(x,t) = [a_i]/[f]_i(x,t) F(x,t) for every i, checked entrywise.
VerifyReport verify_eigen(const ArrangementFamily& fam, const FlagSpace& space,
                          const std::vector<Circuit>& circs,
                          const std::vector<fp_t>& x,
                          const BetheSolution& sol);

// Bethe vectors of distinct solutions are orthogonal under the contravariant
// form.
VerifyReport verify_orthogonality(const ArrangementFamily& fam,
                                  const FlagSpace& space,
                                  const std::vector<fp_t>& x,
                                  const std::vector<BetheSolution>& sols);

}  // namespace parhyp

#endif
