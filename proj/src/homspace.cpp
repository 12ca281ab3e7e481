#include "gk/homspace.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gk/fp_matrix.hpp"
#include "gk/reps.hpp"

namespace gk {

HomProblem::HomProblem(BiPoly f, std::uint32_t delta, BiPoly h)
    : f_(std::move(f)), delta_(delta), h_(std::move(h)) {
  if (!(f_.modulus() == h_.modulus())) throw UsageError("modulus mismatch between f and h");
  if (!f_.is_monic_in_x()) throw UsageError("f must be monic in x: " + f_.to_string());
  if (!h_.is_tau_only()) throw UsageError("h must be a polynomial in tau alone");
  if (h_.coefficient(0, 0).is_zero()) throw UsageError("h must have a nonzero constant term");
}

std::vector<Monomial> HomProblem::domain_basis() const {
  std::vector<Monomial> out;
  const std::uint32_t d = f_.x_degree();
  if (d == 0) return out;
  const std::uint32_t top = std::min(delta_, d - 1);
  for (std::uint32_t j = top + 1; j-- > 0;) out.push_back({delta_ - j, j});
  return out;
}

BiPoly HomProblem::defect(const BiPoly& m) const {
  return reduce_mod_x(total_power(m) - h_ * m, f_);
}

HomProblem ma_problem(PrimeModulus p, std::int64_t a) {
  const Parameters params = parameters(p, a);
  return HomProblem(pow(r_poly(p), static_cast<std::uint64_t>(a)),
                    static_cast<std::uint32_t>(params.delta), h_poly(p, a));
}

HomProblem filtration_problem(PrimeModulus p, std::int64_t a, std::int64_t k) {
  const Parameters params = parameters(p, a);
  return HomProblem(f_of(filtration_rep(p, a, k)), static_cast<std::uint32_t>(params.delta),
                    h_poly(p, a));
}

HomProblem pre_filtration_problem(PrimeModulus p, std::int64_t a, std::int64_t k) {
  const Parameters params = parameters(p, a);
  return HomProblem(f_of(pre_filtration_rep(p, a, k)), static_cast<std::uint32_t>(params.delta),
                    h_poly(p, a));
}

HomSpace hom_space(const HomProblem& problem) {
  const PrimeModulus p = problem.modulus();
  const std::vector<Monomial> domain = problem.domain_basis();

  // One column per domain monomial; rows are the monomials that occur in
  // any reduced image, in canonical order.
  std::vector<BiPoly> images;
  images.reserve(domain.size());
  std::map<Monomial, std::size_t, CanonicalOrder> row_of;
  for (const Monomial& mono : domain) {
    images.push_back(problem.defect(BiPoly::monomial(p, 1, mono.tau_exp, mono.x_exp)));
    for (const auto& [m, c] : images.back().terms()) row_of.emplace(m, 0);
  }
  std::size_t next_row = 0;
  for (auto& [m, idx] : row_of) idx = next_row++;

  FpMatrix map(p, row_of.size(), domain.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [m, c] : images[col].terms()) map.set(row_of.at(m), col, c);

  const FpMatrix kernel = map.nullspace();
  HomSpace out{problem, {}, std::nullopt};
  out.basis.reserve(kernel.rows());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    BiPoly m(p);
    for (std::size_t col = 0; col < domain.size(); ++col)
      m.add_term(domain[col], kernel.at(r, col));
    out.basis.push_back(std::move(m));
  }
  return out;
}

HomSpace ma_space(PrimeModulus p, std::int64_t a) {
  HomSpace out = hom_space(ma_problem(p, a));
  out.a = a;
  return out;
}

BiPoly family_element(PrimeModulus p, std::int64_t k) {
  const std::int64_t half = (static_cast<std::int64_t>(p.value()) - 1) / 2;
  if (k < 0 || k > half)
    throw UsageError("family index k must lie in [0, (p-1)/2] (got " + std::to_string(k) + ")");
  const std::uint32_t q = p.value();
  BiPoly inner = BiPoly::monomial(p, k, 0, q - 1) + BiPoly::monomial(p, 1 - k, q - 1, 0);
  return inner.shifted(static_cast<std::uint32_t>(half - k), static_cast<std::uint32_t>(k));
}

bool contains(const HomProblem& problem, const BiPoly& m) {
  if (!(m.modulus() == problem.modulus())) throw UsageError("modulus mismatch in membership test");
  if (!m.is_zero() && !(m.is_homogeneous() && *m.degree() == problem.delta()))
    throw UsageError("membership test needs a homogeneous polynomial of degree " +
                     std::to_string(problem.delta()) + ": " + m.to_string());
  return problem.defect(m).is_zero();
}

bool contains(const HomSpace& space, const BiPoly& m) { return contains(space.problem, m); }

BiPoly mul_r_shift(PrimeModulus p, std::int64_t a, std::int64_t b, const BiPoly& m) {
  if (a < 2 || a > static_cast<std::int64_t>(p.value()) - 1 || b < a)
    throw UsageError("r-shift needs 2 <= a <= p-1 and a <= b");
  if (!contains(ma_problem(p, a), m)) throw UsageError("r-shift input is not in M_a: " + m.to_string());
  BiPoly image = m * pow(r_poly(p), static_cast<std::uint64_t>(b - a));
  if (!contains(ma_problem(p, b), image))
    throw ConsistencyError("m * r^(b-a) left M_b for m = " + m.to_string());
  return image;
}

BiPoly div_r_shift(PrimeModulus p, std::int64_t a, const BiPoly& m) {
  if (a < 3 || a > static_cast<std::int64_t>(p.value()))
    throw UsageError("division by r needs 3 <= a <= p");
  if (!contains(ma_problem(p, a), m)) throw UsageError("r-division input is not in M_a: " + m.to_string());
  auto [quotient, remainder] = divmod_x(m, r_poly(p));
  if (!remainder.is_zero()) throw ConsistencyError("element of M_a not divisible by r: " + m.to_string());
  if (!contains(ma_problem(p, a - 1), quotient))
    throw ConsistencyError("m / r is not in M_(a-1) for m = " + m.to_string());
  return quotient;
}

bool verify_qr_identity(PrimeModulus p) {
  const BiPoly r = r_poly(p);
  return q_of_split(SplitPoly::regular(p)) == pow(r, p.value() - 1) + unit_power(p, p.value() - 1);
}

bool verify_substitution_identity(PrimeModulus p) {
  const BiPoly r = r_poly(p);
  const BiPoly tau_top = BiPoly::monomial(p, 1, p.value() - 1, 0);
  for (std::uint32_t kappa = 0; kappa < p.value(); ++kappa) {
    const BiPoly lin = BiPoly::linear(p, kappa);
    const BiPoly shifted_r = pow(lin, p.value()) - tau_top * lin;
    const BiPoly factored = lin * (pow(lin, p.value() - 1) - tau_top);
    if (!(shifted_r == r) || !(factored == r)) return false;
  }
  return true;
}

TriPoly k_lemma_lhs(PrimeModulus p) {
  const TriPoly k = TriPoly::variable(p);
  TriPoly out = TriPoly::constant(BiPoly::constant(p, 1));
  for (std::uint32_t lambda = 0; lambda < p.value(); ++lambda)
    out = out * (k + TriPoly::constant(pow(BiPoly::linear(p, lambda), p.value() - 1)));
  return out;
}

TriPoly k_lemma_rhs(PrimeModulus p) {
  const TriPoly k = TriPoly::variable(p);
  const TriPoly tau_top = TriPoly::constant(BiPoly::monomial(p, 1, p.value() - 1, 0));
  return TriPoly::constant(pow(r_poly(p), p.value() - 1)) + k * pow(k + tau_top, p.value() - 1);
}

bool verify_k_lemma(PrimeModulus p) { return k_lemma_lhs(p) == k_lemma_rhs(p); }

}  // namespace gk
