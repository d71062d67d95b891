#ifndef PARHYP_FPCOUNT_HPP
#define PARHYP_FPCOUNT_HPP

#include <cstdint>
#include <vector>

#include "parhyp/gaussmanin.hpp"

namespace parhyp {

// Points of the affine kappa-fold cover y^kappa = prod_j [f]_j(x,t).
struct Hypersurface {
  std::vector<fp_t> x;
  std::uint32_t kappa = 0;
  std::vector<std::pair<std::vector<fp_t>, fp_t>> points;  // (t, y)
};

// Discrete integral over F_p^k: coordinate-wise sum over all p^k points.
// Computed monomial-wise from sum_{t in F_p} t^i = -1 when (p-1)|i, i>0,
// and 0 otherwise.
FlagVec<fp_t> integral_fpk(const FlagSpace& space,
                           const FlagVec<MultiPoly>& f);

fp_t monomial_sum_fpk(const PrimeField& field, int n_skip,
                      const MultiPoly::Exp& e);

// Coordinate at (j_1..j_k): prod_j [f]_j(x,t)^{A_j} d_{j_1..j_k}
// / prod_l [f]_{j_l}(x,t) as a polynomial in t (z specialized at x).
FlagVec<MultiPoly> build_F_vector(const ArrangementFamily& fam,
                                  const FlagSpace& space,
                                  const std::vector<std::uint32_t>& A,
                                  const std::vector<fp_t>& x);

// Verifies [I]^{(p-1,..,p-1)}(x,q,A) = (-1)^k * integral of F(x,t,A) when
// either hypothesis holds: (i) deg_{t_i} F < 2p-2 for all i, or
// (ii) sum A_j - k < (k+1)(p-1).
struct ThmTwoIntReport {
  bool degree_hypothesis = false;      // (i)
  bool inequality_hypothesis = false;  // (ii)
  bool equality_checked = false;
  bool equality_holds = false;
};

ThmTwoIntReport check_thm_2int(const ArrangementFamily& fam,
                               const FlagSpace& space,
                               const std::vector<std::uint32_t>& A,
                               const std::vector<fp_t>& q,
                               const std::vector<fp_t>& x);

ThmTwoIntReport check_thm_2int(const ArrangementFamily& fam,
                               const FlagSpace& space, const SolutionVector& sol,
                               const std::vector<fp_t>& x);

Hypersurface enumerate_hypersurface(const ArrangementFamily& fam,
                                    const FlagSpace& space,
                                    const std::vector<fp_t>& x,
                                    std::uint32_t kappa);

// Primed sum of d_{j_1..j_k} / prod_l [f]_{j_l}(x,t) over points of H where
// the denominator is nonzero.
fp_t hypersurface_integral(const ArrangementFamily& fam, const FlagSpace& space,
                           const Hypersurface& h, int basis_idx);

// Theorem-style check for the kappa-fold cover: requires all weights equal
// -(kappa-1), kappa | (p-1), kappa != p-1 and the two degree inequalities;
// asserts the point-count identity coordinatewise and the vanishing of the
// intermediate sums for powers l <= kappa-2.  Throws HypothesisViolated.
VerifyReport check_kappa_cover(const ArrangementFamily& fam,
                               const FlagSpace& space,
                               const std::vector<fp_t>& x,
                               std::uint32_t kappa);

// Same check against a precomputed solution (all A_j = (kappa-1)(p-1)/kappa,
// q = 0, l = 1); avoids re-deriving the solution per point in exhaustive
// scans.
VerifyReport check_kappa_cover(const ArrangementFamily& fam,
                               const FlagSpace& space,
                               const std::vector<fp_t>& x, std::uint32_t kappa,
                               const SolutionVector& sol);

}  // namespace parhyp

#endif
