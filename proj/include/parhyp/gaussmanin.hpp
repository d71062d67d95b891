#ifndef PARHYP_GAUSSMANIN_HPP
#define PARHYP_GAUSSMANIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "parhyp/flagspace.hpp"

namespace parhyp {

// Exponent data for one solution: positive integers A with [A_j]=[a_j]/[kappa],
// the expansion point q and the labels l (the solution reads off the
// coefficient of t_i^{l_i p - 1}).
struct ExponentChoice {
  std::vector<std::uint32_t> A;
  std::vector<fp_t> q;
  std::vector<std::uint32_t> l;
};

struct SolutionVector {
  FlagVec<MultiPoly> coords;  // polynomials in z (t-exponents zero)
  ExponentChoice choice;
};

enum class VerifyMode { kSymbolic, kSampled };

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  bool passed = true;
  std::vector<CheckLine> checks;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    passed = passed && ok;
    checks.push_back({name, ok, detail});
  }
  explicit operator bool() const { return passed; }
};

// Minimal positive representatives of [a_j][kappa]^{-1}; p when the residue
// vanishes.  Throws KappaNotInvertible when p | kappa.
std::vector<std::uint32_t> choose_exponents(const ArrangementFamily& fam,
                                            const PrimeField& field);

// The linear form [f]_j = z_j + sum_i [b_j^i] t_i in the shared variable
// order (z_1..z_n, t_1..t_k).
MultiPoly hyperplane_form(const ArrangementFamily& fam, const PrimeField& field,
                          int j);

// prod_j f_j^{A_j} over F_p.
MultiPoly master_polynomial(const ArrangementFamily& fam,
                            const PrimeField& field,
                            const std::vector<std::uint32_t>& A);

// det of the k x k matrix whose columns are the linear parts g_{j_l}.
std::int64_t basis_det(const ArrangementFamily& fam,
                       const std::vector<int>& subset);

// Taylor-coefficient solution of Theorem-style exponent data: coordinate at
// (j_1..j_k) is the coefficient of t^{(l_1 p - 1, ..)} of
// Phi * d_{j_1..j_k} / prod f_{j_l} expanded at t = q.
SolutionVector solution_vector(const ArrangementFamily& fam,
                               const FlagSpace& space,
                               const ExponentChoice& choice);

// Checks the singular equations and the Gauss-Manin equations.  Symbolic
// mode clears denominators: R_i = [kappa] dI/dz_i prod_C f_C
// - sum_C lambda_C^i (prod_{C' != C} f_C') (L_C I) must vanish identically.
VerifyReport verify_solution(const ArrangementFamily& fam,
                             const FlagSpace& space,
                             const std::vector<Circuit>& circs,
                             const FlagVec<MultiPoly>& coords,
                             VerifyMode mode = VerifyMode::kSymbolic,
                             int samples = 50, std::uint64_t seed = 0);

// Multiplies the solution by z_i^p for each i and re-verifies; the solution
// space is a module over F_p[z_1^p,..,z_n^p].
VerifyReport module_closure_check(const ArrangementFamily& fam,
                                  const FlagSpace& space,
                                  const std::vector<Circuit>& circs,
                                  const FlagVec<MultiPoly>& coords);

}  // namespace parhyp

#endif
