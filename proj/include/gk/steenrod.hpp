#pragma once

#include <cstdint>
#include <vector>

#include "gk/bipoly.hpp"

namespace gk {

/// Total Steenrod power: the ring endomorphism tau -> tau + tau^p, x -> x + x^p.
/// Evaluated term by term with the closed form
///   P(tau^i x^j) = tau^i (1 + tau^(p-1))^i * x^j (1 + x^(p-1))^j.
BiPoly total_power(const BiPoly& m);

/// Per-(p, a) constants of the Hom computation.
struct Parameters {
  PrimeModulus p;
  std::int64_t a;
  std::int64_t epsilon;  ///< (2a - 1)(p - 1)/2, exponent of h_a.
  std::int64_t delta;    ///< pa - (p + 3)/2, algebraic degree of M_a.
};

/// Throws UsageError for a < 2.
Parameters parameters(PrimeModulus p, std::int64_t a);

/// (1 + tau^(p-1))^k
BiPoly unit_power(PrimeModulus p, std::uint64_t k);

/// h_a = (1 + tau^(p-1))^epsilon_a.
BiPoly h_poly(PrimeModulus p, std::int64_t a);

/// unit * tau^tau_power * prod_j (x - kappa_j tau)
class SplitPoly {
 public:
  SplitPoly(PrimeModulus p, FpScalar unit, std::vector<FpScalar> kappas, std::uint32_t tau_power = 0);

  /// All of F_p as kappas: the polynomial r = x^p - tau^(p-1) x.
  static SplitPoly regular(PrimeModulus p);

  PrimeModulus modulus() const { return p_; }
  FpScalar unit() const { return unit_; }
  const std::vector<FpScalar>& kappas() const { return kappas_; }
  std::uint32_t tau_power() const { return tau_power_; }
  std::uint32_t degree() const { return tau_power_ + static_cast<std::uint32_t>(kappas_.size()); }

  BiPoly expand() const;
  SplitPoly operator*(const SplitPoly& o) const;

 private:
  PrimeModulus p_;
  FpScalar unit_;
  std::vector<FpScalar> kappas_;
  std::uint32_t tau_power_;
};

/// Q(m) = P(m)/m = (1 + tau^(p-1))^e * prod_j (1 + (x - kappa_j tau)^(p-1)).
BiPoly q_of_split(const SplitPoly& m);

}  // namespace gk
