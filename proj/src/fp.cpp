#include "gk/fp.hpp"

#include <string>

namespace gk {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) {
  if (p < 3 || p > (1 << 30) || !is_prime(p))
    throw UsageError("p must be an odd prime (got " + std::to_string(p) + ")");
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw UsageError("zero has no inverse mod p");
  return pow(a, p_ - 2);
}

void FpScalar::check(FpScalar o) const {
  if (!(p_ == o.p_)) throw UsageError("modulus mismatch between scalars");
}

FpScalar FpScalar::operator+(FpScalar o) const {
  check(o);
  return raw(p_, p_.add(v_, o.v_));
}

FpScalar FpScalar::operator-(FpScalar o) const {
  check(o);
  return raw(p_, p_.sub(v_, o.v_));
}

FpScalar FpScalar::operator*(FpScalar o) const {
  check(o);
  return raw(p_, p_.mul(v_, o.v_));
}

FpScalar FpScalar::inv() const { return raw(p_, p_.inv(v_)); }

}  // namespace gk
