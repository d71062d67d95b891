#ifndef PARHYP_FLAGSPACE_HPP
#define PARHYP_FLAGSPACE_HPP

#include <map>
#include <optional>
#include <vector>

#include "parhyp/arrangement.hpp"
#include "parhyp/multipoly.hpp"

namespace parhyp {

// Strictly increasing independent k-subset indexing a standard basis vector
// F(H_{j_1},...,H_{j_k}).
struct BasisIndex {
  std::vector<int> subset;  // sorted, 0-based
};

// Sorted basis index together with the permutation sign picked up while
// sorting the originating tuple.
struct SignedIndex {
  int index = -1;  // position in the standard basis
  int sign = 1;    // +1 or -1
};

// Dense square matrix over F_p acting on flag vectors.
struct FpMatrix {
  int dim = 0;
  std::vector<fp_t> a;  // row-major

  explicit FpMatrix(int d = 0) : dim(d), a(static_cast<std::size_t>(d) * d, 0) {}
  fp_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  fp_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
};

// Coordinates of an element of V_{F_p} (or of V tensored with a polynomial
// ring) in the standard basis; dense, indexed like FlagSpace::basis().
template <class T>
using FlagVec = std::vector<T>;

// The flag space V_{F_p} of a family at a good prime: standard basis, sign
// normalization, contravariant form, circuit operators and Hamiltonians.
class FlagSpace {
 public:
  FlagSpace(const ArrangementFamily& fam, const PrimeField& field);

  const ArrangementFamily& family() const { return fam_; }
  const PrimeField& field() const { return field_; }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // Sorted-basis lookup with the skew-symmetry sign; nullopt when the tuple
  // has a repeated index or indexes a dependent subset (the zero vector).
  // Single audited code path for all sign bookkeeping.
  std::optional<SignedIndex> normalize(const std::vector<int>& tuple) const;

  // Diagonal entry prod [a_{j_l}] of the contravariant form.
  fp_t form_diagonal(int basis_idx) const;

  fp_t contravariant(const FlagVec<fp_t>& u, const FlagVec<fp_t>& v) const;

  // [L]_C applied to a standard basis vector.
  FlagVec<fp_t> apply_LC(const Circuit& c, int basis_idx) const;

  FpMatrix lc_matrix(const Circuit& c) const;

  // [K]_i(x) = sum_C [lambda_C^i] / [f]_C(x) [L]_C; throws OnDiscriminant.
  FpMatrix hamiltonian(const std::vector<Circuit>& circs, int i,
                       const std::vector<fp_t>& x) const;

  FpMatrix hamiltonian_from(const std::vector<Circuit>& circs,
                            const std::vector<FpMatrix>& lc, int i,
                            const std::vector<fp_t>& x) const;

  FlagVec<fp_t> matvec(const FpMatrix& m, const FlagVec<fp_t>& v) const;
  FlagVec<MultiPoly> matvec(const FpMatrix& m, const FlagVec<MultiPoly>& v) const;

  // Singular-subspace membership: sum_j [a_j] I_{j,j_2..j_k} = 0 for every
  // (k-1)-subset, coordinates with unsorted/repeated indices read through
  // normalize().
  bool is_singular(const FlagVec<fp_t>& v) const;
  bool is_singular(const FlagVec<MultiPoly>& v) const;

  fp_t weight(int j) const { return field_.reduce(fam_.weights[j]); }

 private:
  ArrangementFamily fam_;
  PrimeField field_;
  std::vector<BasisIndex> basis_;
  std::map<std::vector<int>, int> lookup_;  // sorted subset -> basis position
};

}  // namespace parhyp

#endif
