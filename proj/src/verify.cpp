#include "gk/verify.hpp"

#include <exception>

#include "gk/fp_matrix.hpp"
#include "gk/homspace.hpp"

namespace gk {

namespace {

template <typename Fn>
CheckResult guarded(std::string name, Fn fn) {
  try {
    return fn(std::move(name));
  } catch (const std::exception& e) {
    return {std::move(name), false, e.what()};
  }
}

}  // namespace

std::vector<CheckResult> check_family(PrimeModulus p) {
  const std::int64_t half = (static_cast<std::int64_t>(p.value()) - 1) / 2;
  const HomProblem m2 = ma_problem(p, 2);
  const auto domain = m2.domain_basis();
  std::vector<CheckResult> out;
  FpMatrix coords(p, static_cast<std::size_t>(half + 1), domain.size());
  for (std::int64_t k = 0; k <= half; ++k) {
    const BiPoly m = family_element(p, k);
    out.push_back(guarded("family k=" + std::to_string(k) + " in M_2", [&](std::string name) {
      return CheckResult{std::move(name), contains(m2, m), m.to_string()};
    }));
    for (std::size_t c = 0; c < domain.size(); ++c)
      coords.set(static_cast<std::size_t>(k), c, m.coefficient(domain[c].tau_exp, domain[c].x_exp).value());
  }
  const std::size_t rank = coords.rank();
  out.push_back({"family independent", rank == static_cast<std::size_t>(half + 1),
                 std::to_string(half + 1) + " elements checked, rank " + std::to_string(rank)});
  return out;
}

std::vector<CheckResult> check_qr(PrimeModulus p) {
  return {guarded("Q(r) = r^(p-1) + h_(a+1)/h_a",
                  [&](std::string name) { return CheckResult{std::move(name), verify_qr_identity(p), ""}; })};
}

std::vector<CheckResult> check_k_lemma(PrimeModulus p) {
  return {guarded("prod (K + L^(p-1)) = r^(p-1) + K(K + t^(p-1))^(p-1)",
                  [&](std::string name) { return CheckResult{std::move(name), verify_k_lemma(p), ""}; })};
}

std::vector<CheckResult> check_substitution(PrimeModulus p) {
  return {guarded("(x-kt)^p - t^(p-1)(x-kt) = r for all k", [&](std::string name) {
    return CheckResult{std::move(name), verify_substitution_identity(p), std::to_string(p.value()) + " values of k"};
  })};
}

std::vector<CheckResult> check_shift(PrimeModulus p, std::int64_t max_b) {
  const auto q = static_cast<std::int64_t>(p.value());
  if (max_b <= 0 || max_b > q) max_b = q;
  std::vector<CheckResult> out;
  std::vector<HomSpace> spaces;
  for (std::int64_t a = 2; a <= max_b; ++a) spaces.push_back(ma_space(p, a));
  const std::size_t dim2 = spaces.front().dim();
  for (const auto& s : spaces) {
    out.push_back({"dim M_" + std::to_string(*s.a) + " = dim M_2", s.dim() == dim2,
                   std::to_string(s.dim()) + " vs " + std::to_string(dim2)});
  }
  for (std::int64_t a = 2; a < max_b; ++a) {
    for (std::int64_t b = a + 1; b <= max_b; ++b) {
      out.push_back(guarded("r-shift round trip M_" + std::to_string(a) + " -> M_" + std::to_string(b),
                            [&](std::string name) {
                              const HomSpace& source = spaces[static_cast<std::size_t>(a - 2)];
                              for (const auto& m : source.basis) {
                                BiPoly image = mul_r_shift(p, a, b, m);
                                for (std::int64_t c = b; c > a; --c) image = div_r_shift(p, c, image);
                                if (!(image == m)) return CheckResult{std::move(name), false, m.to_string()};
                              }
                              return CheckResult{std::move(name), true,
                                                 std::to_string(source.dim()) + " basis vectors"};
                            }));
    }
  }
  return out;
}

std::vector<CheckResult> run_suite(PrimeModulus p, const std::string& suite) {
  if (suite == "family") return check_family(p);
  if (suite == "qr") return check_qr(p);
  if (suite == "klemma") return check_k_lemma(p);
  if (suite == "subst") return check_substitution(p);
  if (suite == "shift") return check_shift(p);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"family", "qr", "klemma", "subst", "shift"}) {
      auto part = run_suite(p, s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw UsageError("unknown verification suite '" + suite + "'");
}

}  // namespace gk
