#include "gk/steenrod.hpp"

#include <unordered_map>

namespace gk {

namespace {

// Binomial coefficients C(n, k) mod p via Lucas' theorem.
class LucasBinomial {
 public:
  explicit LucasBinomial(PrimeModulus p) : p_(p), pascal_(p.value()) {
    const std::uint32_t q = p.value();
    for (std::uint32_t n = 0; n < q; ++n) {
      pascal_[n].assign(n + 1, 1);
      for (std::uint32_t k = 1; k < n; ++k) pascal_[n][k] = p.add(pascal_[n - 1][k - 1], pascal_[n - 1][k]);
    }
  }

  std::uint32_t operator()(std::uint64_t n, std::uint64_t k) const {
    const std::uint32_t q = p_.value();
    std::uint32_t out = 1;
    while (n || k) {
      const auto nd = static_cast<std::uint32_t>(n % q);
      const auto kd = static_cast<std::uint32_t>(k % q);
      if (kd > nd) return 0;
      out = p_.mul(out, pascal_[nd][kd]);
      n /= q;
      k /= q;
    }
    return out;
  }

 private:
  PrimeModulus p_;
  std::vector<std::vector<std::uint32_t>> pascal_;
};

// Nonzero (exponent, coefficient) pairs of y^n (1 + y^(p-1))^n as a polynomial in y.
using Univariate = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Univariate power_image(const LucasBinomial& binom, std::uint32_t p, std::uint32_t n) {
  Univariate out;
  for (std::uint32_t k = 0; k <= n; ++k)
    if (auto c = binom(n, k); c != 0) out.emplace_back(n + k * (p - 1), c);
  return out;
}

}  // namespace

BiPoly total_power(const BiPoly& m) {
  const PrimeModulus p = m.modulus();
  const LucasBinomial binom(p);
  std::unordered_map<std::uint32_t, Univariate> cache;
  auto image = [&](std::uint32_t n) -> const Univariate& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, power_image(binom, p.value(), n)).first;
    return it->second;
  };
  BiPoly out(p);
  for (const auto& [mono, c] : m.terms()) {
    const Univariate& taus = image(mono.tau_exp);
    const Univariate& xs = image(mono.x_exp);
    for (const auto& [xe, xc] : xs) {
      const std::uint32_t cx = p.mul(c, xc);
      for (const auto& [te, tc] : taus) out.add_term({te, xe}, p.mul(cx, tc));
    }
  }
  return out;
}

Parameters parameters(PrimeModulus p, std::int64_t a) {
  if (a < 2) throw UsageError("a must be at least 2 (got " + std::to_string(a) + ")");
  const std::int64_t q = p.value();
  return Parameters{p, a, (2 * a - 1) * (q - 1) / 2, q * a - (q + 3) / 2};
}

BiPoly unit_power(PrimeModulus p, std::uint64_t k) {
  const LucasBinomial binom(p);
  BiPoly out(p);
  for (std::uint64_t i = 0; i <= k; ++i)
    if (auto c = binom(k, i); c != 0) out.add_term({static_cast<std::uint32_t>(i * (p.value() - 1)), 0}, c);
  return out;
}

BiPoly h_poly(PrimeModulus p, std::int64_t a) {
  return unit_power(p, static_cast<std::uint64_t>(parameters(p, a).epsilon));
}

SplitPoly::SplitPoly(PrimeModulus p, FpScalar unit, std::vector<FpScalar> kappas, std::uint32_t tau_power)
    : p_(p), unit_(unit), kappas_(std::move(kappas)), tau_power_(tau_power) {
  if (!(unit_.modulus() == p_)) throw UsageError("modulus mismatch in split polynomial");
  if (unit_.is_zero()) throw UsageError("split polynomial needs a nonzero unit");
  for (const auto& k : kappas_)
    if (!(k.modulus() == p_)) throw UsageError("modulus mismatch in split polynomial");
}

SplitPoly SplitPoly::regular(PrimeModulus p) {
  std::vector<FpScalar> kappas;
  for (std::uint32_t k = 0; k < p.value(); ++k) kappas.emplace_back(p, k);
  return SplitPoly(p, FpScalar::one(p), std::move(kappas));
}

BiPoly SplitPoly::expand() const {
  BiPoly out = BiPoly::monomial(p_, unit_.value(), tau_power_, 0);
  for (const auto& k : kappas_) out = out * BiPoly::linear(p_, k.value());
  return out;
}

SplitPoly SplitPoly::operator*(const SplitPoly& o) const {
  if (!(p_ == o.p_)) throw UsageError("modulus mismatch in split polynomial");
  std::vector<FpScalar> kappas = kappas_;
  kappas.insert(kappas.end(), o.kappas_.begin(), o.kappas_.end());
  return SplitPoly(p_, unit_ * o.unit_, std::move(kappas), tau_power_ + o.tau_power_);
}

BiPoly q_of_split(const SplitPoly& m) {
  const PrimeModulus p = m.modulus();
  BiPoly out = unit_power(p, m.tau_power());
  const BiPoly one = BiPoly::constant(p, 1);
  for (const auto& k : m.kappas()) out = out * (one + pow(BiPoly::linear(p, k.value()), p.value() - 1));
  return out;
}

}  // namespace gk
