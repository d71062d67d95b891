#ifndef PARHYP_MULTIPOLY_HPP
#define PARHYP_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "parhyp/fp.hpp"

namespace parhyp {

// Sparse multivariate polynomial over F_p.  Variables are identified by
// position 0..nvars-1; the shared convention across the library is
// z_1..z_n first, then t_1..t_k.  Terms are kept in canonical sparse form
// (no zero coefficients) ordered graded-lexicographically, so iteration
// and serialization are byte-stable.
class MultiPoly {
 public:
  using Exp = std::vector<std::uint32_t>;

  struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const;
  };

  using TermMap = std::map<Exp, fp_t, GradedLexLess>;

  MultiPoly(const PrimeField& field, int nvars);

  static MultiPoly constant(const PrimeField& field, int nvars, std::int64_t c);
  static MultiPoly variable(const PrimeField& field, int nvars, int var,
                            std::int64_t coeff = 1);

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates c * x^e, dropping the term if the sum cancels.
  void add_term(const Exp& e, std::int64_t c);
  void add_term(const Exp& e, fp_t c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const;

  MultiPoly scaled(fp_t c) const;
  MultiPoly pow(std::uint64_t e) const;

  // Formal partial derivative with respect to one variable.
  MultiPoly partial(int var) const;

  // Substitution var -> var + q.
  MultiPoly shift(int var, fp_t q) const;
  // Shift a contiguous block of variables starting at first_var.
  MultiPoly shift_block(int first_var, const std::vector<fp_t>& q) const;

  // Coefficient of the monomial with the given exponents on the variable
  // block starting at first_var; the block's exponents are zeroed in the
  // result (a polynomial in the remaining variables).
  MultiPoly coeff_of(int first_var, const std::vector<std::uint32_t>& exp) const;

  fp_t eval(const std::vector<fp_t>& point) const;
  // Substitute values for a subset of variables; unset entries stay symbolic.
  MultiPoly eval_partial(const std::vector<std::optional<fp_t>>& vals) const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  PrimeField field_;
  int nvars_;
  TermMap terms_;
};

// Rows of Pascal's triangle mod p, valid for arbitrary row index.
std::vector<fp_t> binomial_row(const PrimeField& field, std::uint32_t m);

}  // namespace parhyp

#endif
