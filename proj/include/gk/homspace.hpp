#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gk/bipoly.hpp"
#include "gk/steenrod.hpp"

namespace gk {

/// Kernel problem: homogeneous m of degree `delta`, reduced modulo `f`
/// (monic in x, x-degree d), such that f divides P(m) - h*m. The domain is
/// spanned by tau^(delta-j) x^j for 0 <= j <= min(delta, d-1).
class HomProblem {
 public:
  HomProblem(BiPoly f, std::uint32_t delta, BiPoly h);

  PrimeModulus modulus() const { return f_.modulus(); }
  const BiPoly& f() const { return f_; }
  std::uint32_t delta() const { return delta_; }
  const BiPoly& h() const { return h_; }

  /// Domain monomials in canonical order (highest x-power first).
  std::vector<Monomial> domain_basis() const;

  /// (P(m) - h*m) mod f. Zero exactly for members.
  BiPoly defect(const BiPoly& m) const;

 private:
  BiPoly f_;
  std::uint32_t delta_;
  BiPoly h_;
};

/// (f, delta, h) = (r^a, delta_a, h_a).
HomProblem ma_problem(PrimeModulus p, std::int64_t a);
/// f = f(V_{a-1} + U_k) with delta_a, h_a.
HomProblem filtration_problem(PrimeModulus p, std::int64_t a, std::int64_t k);
/// f = f(V_{a-2} + U_k) with delta_a, h_a.
HomProblem pre_filtration_problem(PrimeModulus p, std::int64_t a, std::int64_t k);

struct HomSpace {
  HomProblem problem;
  /// Reduced echelon basis w.r.t. the canonical monomial order; each element
  /// has leading coefficient 1.
  std::vector<BiPoly> basis;
  std::optional<std::int64_t> a;

  std::size_t dim() const { return basis.size(); }
};

HomSpace hom_space(const HomProblem& problem);
HomSpace ma_space(PrimeModulus p, std::int64_t a);

/// tau^((p-1)/2 - k) x^k (k x^(p-1) + (1-k) tau^(p-1)), 0 <= k <= (p-1)/2.
BiPoly family_element(PrimeModulus p, std::int64_t k);

/// Direct divisibility test; never consults a stored basis. Throws
/// UsageError unless m is zero or homogeneous of the problem's degree.
bool contains(const HomProblem& problem, const BiPoly& m);
bool contains(const HomSpace& space, const BiPoly& m);

/// m * r^(b-a) for m in M_a, 2 <= a <= p-1, a <= b. The image is checked to
/// lie in M_b (ConsistencyError otherwise).
BiPoly mul_r_shift(PrimeModulus p, std::int64_t a, std::int64_t b, const BiPoly& m);

/// m / r for m in M_a, 3 <= a <= p. Exactness and membership of the quotient
/// in M_{a-1} are checked (ConsistencyError otherwise).
BiPoly div_r_shift(PrimeModulus p, std::int64_t a, const BiPoly& m);

/// Q(r) == r^(p-1) + (1 + tau^(p-1))^(p-1)
bool verify_qr_identity(PrimeModulus p);

/// For every kappa: (x - kappa tau)^p - tau^(p-1)(x - kappa tau) == r, and
/// r == (x - kappa tau)((x - kappa tau)^(p-1) - tau^(p-1)).
bool verify_substitution_identity(PrimeModulus p);

/// prod_lambda (K + (x - lambda tau)^(p-1)) == r^(p-1) + K (K + tau^(p-1))^(p-1)
/// in F_p[tau, x][K].
bool verify_k_lemma(PrimeModulus p);

/// Both sides of the K-identity, exposed for tests.
TriPoly k_lemma_lhs(PrimeModulus p);
TriPoly k_lemma_rhs(PrimeModulus p);

}  // namespace gk
