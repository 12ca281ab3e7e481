#pragma once

#include <cstdint>
#include <ostream>

#include "gk/errors.hpp"

namespace gk {

/// An odd prime p. Construction fails with UsageError for anything else.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t p);

  std::uint32_t value() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Inverse of a nonzero residue (Fermat).
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::int64_t n);

/// Canonical residue in [0, p) tagged with its modulus.
class FpScalar {
 public:
  FpScalar(PrimeModulus p, std::int64_t v) : p_(p), v_(p.reduce(v)) {}

  static FpScalar zero(PrimeModulus p) { return {p, 0}; }
  static FpScalar one(PrimeModulus p) { return {p, 1}; }

  PrimeModulus modulus() const { return p_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FpScalar operator+(FpScalar o) const;
  FpScalar operator-(FpScalar o) const;
  FpScalar operator*(FpScalar o) const;
  FpScalar operator/(FpScalar o) const { return *this * o.inv(); }
  FpScalar operator-() const { return raw(p_, p_.neg(v_)); }
  FpScalar inv() const;
  FpScalar pow(std::uint64_t e) const { return raw(p_, p_.pow(v_, e)); }

  friend bool operator==(FpScalar, FpScalar) = default;
  friend std::ostream& operator<<(std::ostream& os, FpScalar s) { return os << s.v_; }

 private:
  static FpScalar raw(PrimeModulus p, std::uint32_t v) {
    FpScalar s(p, 0);
    s.v_ = v;
    return s;
  }
  void check(FpScalar o) const;

  PrimeModulus p_;
  std::uint32_t v_;
};

}  // namespace gk
