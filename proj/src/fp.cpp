#include "parhyp/fp.hpp"

#include <string>

namespace parhyp {

bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p))
    throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31))
    throw Error("modulus " + std::to_string(p) + " exceeds supported range");
}

fp_t PrimeField::pow(fp_t a, std::uint64_t e) const {
  fp_t r = 1 % p_;
  fp_t base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

fp_t PrimeField::inv(fp_t a) const {
  if (a % p_ == 0) throw ZeroInverse("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

}  // namespace parhyp
