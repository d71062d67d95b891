#ifndef PARHYP_FP_HPP
#define PARHYP_FP_HPP

#include <cstdint>
#include <vector>

#include "parhyp/errors.hpp"

namespace parhyp {

// Canonical residue in [0, p).
using fp_t = std::uint64_t;

bool is_prime_u64(std::uint64_t m);

// Arithmetic context for the prime field F_p.  Primality is checked once at
// construction; p is restricted to machine-word size (desk-scale moduli).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  fp_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<fp_t>(r);
  }

  fp_t add(fp_t a, fp_t b) const {
    fp_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }

  fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }

  fp_t mul(fp_t a, fp_t b) const { return (a * b) % p_; }

  fp_t pow(fp_t a, std::uint64_t e) const;

  // Multiplicative inverse; throws ZeroInverse on a == 0.
  fp_t inv(fp_t a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace parhyp

#endif
