#include "gk/reps.hpp"

#include <algorithm>
#include <string>

namespace gk {

Representation::Representation(PrimeModulus p, std::vector<std::int64_t> weights) : p_(p) {
  weights_.reserve(weights.size());
  for (auto w : weights) weights_.push_back(p.reduce(w));
  std::sort(weights_.begin(), weights_.end());
}

Representation Representation::regular(PrimeModulus p) { return flag(p, p.value()); }

Representation Representation::flag(PrimeModulus p, std::int64_t k) {
  if (k < 0 || k > p.value()) throw UsageError("flag index k must lie in [0, p] (got " + std::to_string(k) + ")");
  std::vector<std::int64_t> w(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = i;
  return Representation(p, std::move(w));
}

Representation Representation::multiple_of_regular(PrimeModulus p, std::int64_t copies) {
  if (copies < 0) throw UsageError("negative multiple of the regular representation");
  Representation out(p, {});
  const Representation cg = regular(p);
  for (std::int64_t i = 0; i < copies; ++i) out = out.direct_sum(cg);
  return out;
}

Representation Representation::direct_sum(const Representation& o) const {
  if (!(p_ == o.p_)) throw UsageError("modulus mismatch between representations");
  Representation out = *this;
  out.weights_.insert(out.weights_.end(), o.weights_.begin(), o.weights_.end());
  std::sort(out.weights_.begin(), out.weights_.end());
  return out;
}

BiPoly f_of(const Representation& v) {
  BiPoly out = BiPoly::constant(v.modulus(), 1);
  for (auto w : v.weights()) out = out * BiPoly::linear(v.modulus(), w);
  return out;
}

BiPoly r_poly(PrimeModulus p) {
  BiPoly out = BiPoly::monomial(p, 1, 0, p.value());
  out.add_term({p.value() - 1, 1}, p.neg(1));
  return out;
}

std::vector<FpScalar> chern_classes(const Representation& v) {
  const PrimeModulus p = v.modulus();
  // e[j] after processing a prefix of the weights; standard DP.
  std::vector<std::uint32_t> e(v.dimension() + 1, 0);
  e[0] = 1;
  std::size_t n = 0;
  for (auto w : v.weights()) {
    ++n;
    for (std::size_t j = n; j >= 1; --j) e[j] = p.add(e[j], p.mul(e[j - 1], w));
  }
  std::vector<FpScalar> out;
  out.reserve(e.size());
  for (auto c : e) out.emplace_back(p, c);
  return out;
}

BiPoly from_chern_classes(PrimeModulus p, const std::vector<FpScalar>& chern) {
  BiPoly out(p);
  if (chern.empty()) return out;
  const auto n = static_cast<std::uint32_t>(chern.size() - 1);
  for (std::uint32_t j = 0; j <= n; ++j) {
    const std::uint32_t c = chern[j].value();
    out.add_term({j, n - j}, j % 2 ? p.neg(c) : c);
  }
  return out;
}

Representation filtration_rep(PrimeModulus p, std::int64_t a, std::int64_t k) {
  if (a < 2) throw UsageError("a must be at least 2 (got " + std::to_string(a) + ")");
  return Representation::multiple_of_regular(p, a - 1).direct_sum(Representation::flag(p, k));
}

Representation pre_filtration_rep(PrimeModulus p, std::int64_t a, std::int64_t k) {
  if (a < 3) throw UsageError("a must be at least 3 for V_{a-2} + U_k (got " + std::to_string(a) + ")");
  return Representation::multiple_of_regular(p, a - 2).direct_sum(Representation::flag(p, k));
}

}  // namespace gk
