#pragma once

#include <cstdint>
#include <vector>

#include "gk/bipoly.hpp"

namespace gk {

/// Complex representation of Z/p as a multiset of weights: each weight alpha
/// is a summand C(alpha). Weights are canonical residues, kept sorted.
class Representation {
 public:
  Representation(PrimeModulus p, std::vector<std::int64_t> weights);

  /// The regular representation CG, weights 0..p-1.
  static Representation regular(PrimeModulus p);
  /// U_k = C(0) + ... + C(k-1), 0 <= k <= p.
  static Representation flag(PrimeModulus p, std::int64_t k);
  /// copies * CG
  static Representation multiple_of_regular(PrimeModulus p, std::int64_t copies);

  PrimeModulus modulus() const { return p_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  std::size_t dimension() const { return weights_.size(); }

  Representation direct_sum(const Representation& o) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  PrimeModulus p_;
  std::vector<std::uint32_t> weights_;
};

/// f(V) = prod_j (x - alpha_j tau); monic in x of x-degree dim V.
BiPoly f_of(const Representation& v);

/// r = x^p - tau^(p-1) x, written down directly.
BiPoly r_poly(PrimeModulus p);

/// c_j(V) = e_j(alpha) tau^j; returns the scalars e_0..e_n.
std::vector<FpScalar> chern_classes(const Representation& v);

/// Reassembles sum_j (-1)^j c_j tau^j x^(n-j).
BiPoly from_chern_classes(PrimeModulus p, const std::vector<FpScalar>& chern);

/// V_{a-1} + U_k. Requires a >= 2, 0 <= k <= p.
Representation filtration_rep(PrimeModulus p, std::int64_t a, std::int64_t k);

/// V_{a-2} + U_k. Requires a >= 3, 0 <= k <= p.
Representation pre_filtration_rep(PrimeModulus p, std::int64_t a, std::int64_t k);

}  // namespace gk
