#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gk/bounds.hpp"
#include "gk/fp_matrix.hpp"
#include "gk/homspace.hpp"
#include "gk/reps.hpp"
#include "test_support.hpp"

namespace gk {
namespace {

BiPoly P(int p, const char* text) { return BiPoly::parse(PrimeModulus(p), text); }

std::set<std::string> as_strings(const std::vector<BiPoly>& basis) {
  std::set<std::string> out;
  for (const auto& m : basis) out.insert(m.to_string());
  return out;
}

// Coordinates of polynomials w.r.t. a problem's domain monomials.
FpMatrix coordinates(const HomProblem& problem, const std::vector<BiPoly>& polys) {
  const auto domain = problem.domain_basis();
  FpMatrix m(problem.modulus(), polys.size(), domain.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (std::size_t c = 0; c < domain.size(); ++c)
      m.set(r, c, polys[r].coefficient(domain[c].tau_exp, domain[c].x_exp).value());
  return m;
}

TEST(FpMatrix, RankNullityAndKernel) {
  std::mt19937_64 rng(41);
  for (int q : {3, 5, 7}) {
    const PrimeModulus p(q);
    std::uniform_int_distribution<std::int64_t> v(0, q - 1);
    for (int n = 0; n < 40; ++n) {
      const std::size_t rows = 1 + n % 6, cols = 1 + (n * 7) % 8;
      FpMatrix a(p, rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a.set(r, c, n % 3 == 0 ? v(rng) % 2 : v(rng));
      const FpMatrix kernel = a.nullspace();
      EXPECT_EQ(a.rank() + kernel.rows(), cols);
      for (std::size_t k = 0; k < kernel.rows(); ++k)
        for (std::size_t r = 0; r < rows; ++r) {
          std::int64_t acc = 0;
          for (std::size_t c = 0; c < cols; ++c) acc += static_cast<std::int64_t>(a.at(r, c)) * kernel.at(k, c);
          EXPECT_EQ(acc % q, 0);
        }
      FpMatrix again = kernel;
      again.row_reduce();
      EXPECT_EQ(again, kernel);  // already reduced
    }
  }
}

TEST(HomProblem, ValidatesInputs) {
  const PrimeModulus p(5);
  const BiPoly h = h_poly(p, 2);
  EXPECT_THROW(HomProblem(P(5, "2*x^2"), 3, h), UsageError);
  EXPECT_THROW(HomProblem(P(5, "x^2"), 3, P(5, "1 + x")), UsageError);
  EXPECT_THROW(HomProblem(P(5, "x^2"), 3, P(5, "t^4")), UsageError);
  EXPECT_THROW(HomProblem(P(5, "x^2"), 3, P(3, "1")), UsageError);
}

TEST(HomProblem, DomainIsTruncatedBelowDegX) {
  const PrimeModulus p(5);
  const HomProblem wide(pow(r_poly(p), 2), 6, h_poly(p, 2));
  EXPECT_EQ(wide.domain_basis().size(), 7u);
  EXPECT_EQ(wide.domain_basis().front(), (Monomial{0, 6}));
  const HomProblem narrow(r_poly(p), 6, h_poly(p, 2));
  EXPECT_EQ(narrow.domain_basis().size(), 5u);
  EXPECT_EQ(narrow.domain_basis().front(), (Monomial{2, 4}));
  EXPECT_TRUE(HomProblem(BiPoly::constant(p, 1), 6, h_poly(p, 2)).domain_basis().empty());
}

TEST(HomSpaceOp, Examples) {
  const PrimeModulus p3(3);
  const HomSpace m2 = hom_space(HomProblem(pow(r_poly(p3), 2), 3, h_poly(p3, 2)));
  EXPECT_EQ(oracle::ma_nullity(3, 2), 2u);
  EXPECT_EQ(m2.dim(), 2u);
  EXPECT_EQ(as_strings(m2.basis), (std::set<std::string>{"t^3", "x^3"}));

  EXPECT_EQ(hom_space(HomProblem(r_poly(p3), 3, h_poly(p3, 2))).dim(), 3u);

  // Frozen from the dense oracle; (p+1)/2, not p-1.
  const PrimeModulus p5(5);
  EXPECT_EQ(oracle::ma_nullity(5, 2), 3u);
  const HomSpace m2_5 = hom_space(HomProblem(pow(r_poly(p5), 2), 6, h_poly(p5, 2)));
  EXPECT_EQ(m2_5.dim(), 3u);
  EXPECT_EQ(m2_5.basis, (std::vector<BiPoly>{P(5, "x^6 + 2*t^4*x^2"), P(5, "t*x^5"), P(5, "t^6")}));
}

TEST(MaSpace, Examples) {
  const PrimeModulus p3(3), p5(5);
  EXPECT_EQ(ma_space(p3, 2).dim(), 2u);
  EXPECT_GE(ma_space(p5, 2).dim(), 3u);
  EXPECT_EQ(ma_space(p3, 3).dim(), ma_space(p3, 2).dim());
  EXPECT_EQ(ma_space(p3, 3).a, 3);
  EXPECT_THROW(ma_space(p5, 1), UsageError);
}

TEST(MaSpace, BasisIsReducedEchelon) {
  for (auto [q, a] : std::vector<std::pair<int, int>>{{3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}}) {
    const HomSpace s = ma_space(PrimeModulus(q), a);
    std::set<std::pair<std::uint32_t, std::uint32_t>> leads;
    for (const auto& m : s.basis) {
      ASSERT_FALSE(m.is_zero());
      const auto [lead, c] = *m.terms().begin();
      EXPECT_EQ(c, 1u);
      leads.insert({lead.tau_exp, lead.x_exp});
    }
    EXPECT_EQ(leads.size(), s.dim());
    // A pivot monomial appears in exactly one basis element.
    for (const auto& [ti, xj] : leads) {
      int hits = 0;
      for (const auto& m : s.basis) hits += m.coefficient(ti, xj).is_zero() ? 0 : 1;
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(FamilyElement, Examples) {
  EXPECT_EQ(family_element(PrimeModulus(3), 0), P(3, "t^3"));
  EXPECT_EQ(family_element(PrimeModulus(3), 1), P(3, "x^3"));
  EXPECT_EQ(family_element(PrimeModulus(5), 2), P(5, "2*x^6 + 4*t^4*x^2"));
  EXPECT_THROW(family_element(PrimeModulus(5), 3), UsageError);
  EXPECT_THROW(family_element(PrimeModulus(5), -1), UsageError);
}

TEST(FamilyElement, MembersOfM2AndIndependent) {
  for (int q : {3, 5, 7, 11, 13, 17}) {
    const PrimeModulus p(q);
    const HomSpace m2 = ma_space(p, 2);
    std::vector<BiPoly> family;
    for (int k = 0; k <= (q - 1) / 2; ++k) {
      family.push_back(family_element(p, k));
      EXPECT_TRUE(family.back().is_homogeneous());
      EXPECT_EQ(*family.back().degree(), static_cast<std::uint32_t>(3 * (q - 1) / 2));
      EXPECT_TRUE(contains(m2, family.back())) << "p=" << q << " k=" << k;
    }
    EXPECT_EQ(coordinates(m2.problem, family).rank(), static_cast<std::size_t>((q + 1) / 2));
    EXPECT_GE(m2.dim(), static_cast<std::size_t>((q + 1) / 2));
  }
}

TEST(Contains, Examples) {
  const PrimeModulus p3(3);
  const HomSpace m2 = ma_space(p3, 2);
  EXPECT_TRUE(contains(m2, P(3, "t^3")));
  EXPECT_FALSE(contains(m2, P(3, "t^2*x")));
  // The same element passes the weaker test modulo r.
  EXPECT_TRUE(contains(HomProblem(r_poly(p3), 3, h_poly(p3, 2)), P(3, "t^2*x")));
  EXPECT_TRUE(contains(m2, BiPoly::zero(p3)));
  EXPECT_THROW(contains(m2, P(3, "t^2")), UsageError);
  EXPECT_THROW(contains(m2, P(3, "t^3 + x")), UsageError);
}

TEST(HomSpaceOp, KernelCorrectness) {
  std::mt19937_64 rng(43);
  for (auto [q, a] : std::vector<std::pair<int, int>>{{3, 2}, {3, 5}, {5, 2}, {5, 4}, {7, 2}, {7, 3}}) {
    const PrimeModulus p(q);
    const HomSpace s = ma_space(p, a);
    for (const auto& m : s.basis) EXPECT_TRUE(contains(s, m));
    const auto domain = s.problem.domain_basis();
    const std::size_t base_rank = coordinates(s.problem, s.basis).rank();
    std::size_t rejected = 0;
    while (rejected < domain.size() - s.dim()) {
      const BiPoly m = testing::random_homogeneous(rng, p, s.problem.delta());
      auto with = s.basis;
      with.push_back(m);
      if (coordinates(s.problem, with).rank() == base_rank) continue;  // landed in the span
      EXPECT_FALSE(contains(s, m)) << m.to_string();
      ++rejected;
    }
  }
}

TEST(HomSpaceOp, OracleEquivalenceUpToPa21) {
  for (const auto& [q, a] : sweep_pairs(21)) {
    EXPECT_EQ(ma_space(PrimeModulus(q), a).dim(), oracle::ma_nullity(q, a)) << "p=" << q << " a=" << a;
  }
}

TEST(HomSpaceOp, FiltrationProblemsMatchOracle) {
  for (auto [q, a] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
    const PrimeModulus p(q);
    const std::int64_t delta = parameters(p, a).delta;
    const auto h = oracle::h_poly(q, a);
    for (int k = 0; k <= q; ++k) {
      std::vector<std::int64_t> w;
      for (int c = 0; c < a - 1; ++c)
        for (int al = 0; al < q; ++al) w.push_back(al);
      for (int al = 0; al < k; ++al) w.push_back(al);
      EXPECT_EQ(hom_space(filtration_problem(p, a, k)).dim(), oracle::nullity(oracle::f_of_weights(q, w), delta, h))
          << "p=" << q << " a=" << a << " k=" << k;
    }
  }
}

TEST(Shift, MulExamples) {
  const PrimeModulus p3(3), p5(5);
  const BiPoly r3 = r_poly(p3);
  EXPECT_EQ(mul_r_shift(p3, 2, 3, P(3, "t^3")), P(3, "t^3") * r3);
  for (const auto& m : ma_space(p5, 2).basis) EXPECT_EQ(mul_r_shift(p5, 2, 2, m), m);
  const BiPoly image = mul_r_shift(p3, 2, 4, P(3, "x^3"));
  EXPECT_EQ(image, P(3, "x^3") * pow(r3, 2));
  EXPECT_TRUE(contains(ma_space(p3, 4), image));
}

TEST(Shift, DivExamples) {
  const PrimeModulus p3(3), p5(5);
  EXPECT_EQ(div_r_shift(p3, 3, P(3, "t^3") * r_poly(p3)), P(3, "t^3"));
  for (const auto& m : ma_space(p5, 2).basis) EXPECT_EQ(div_r_shift(p5, 3, m * r_poly(p5)), m);
  const HomSpace m2 = ma_space(p3, 2);
  for (const auto& m : ma_space(p3, 3).basis) EXPECT_TRUE(contains(m2, div_r_shift(p3, 3, m)));
}

TEST(Shift, PreconditionsAreChecked) {
  const PrimeModulus p5(5);
  const BiPoly t6 = P(5, "t^6");
  EXPECT_THROW(mul_r_shift(p5, 1, 2, t6), UsageError);
  EXPECT_THROW(mul_r_shift(p5, 5, 6, t6), UsageError);
  EXPECT_THROW(mul_r_shift(p5, 3, 2, t6), UsageError);
  EXPECT_THROW(mul_r_shift(p5, 2, 3, P(5, "t^5*x")), UsageError);  // not in M_2
  EXPECT_THROW(div_r_shift(p5, 2, t6), UsageError);
  EXPECT_THROW(div_r_shift(p5, 6, t6), UsageError);
}

TEST(Shift, IsomorphismsAndRoundTrips) {
  for (int q : {3, 5, 7}) {
    const PrimeModulus p(q);
    const std::size_t dim2 = ma_space(p, 2).dim();
    for (int a = 2; a <= q; ++a) {
      const HomSpace ma = ma_space(p, a);
      EXPECT_EQ(ma.dim(), dim2);
      if (a >= 3)
        for (const auto& m : ma.basis) EXPECT_TRUE(is_divisible(m, r_poly(p))) << m.to_string();
      for (int b = a + 1; b <= q; ++b)
        for (const auto& m : ma.basis) {
          BiPoly back = mul_r_shift(p, a, b, m);
          for (int c = b; c > a; --c) back = div_r_shift(p, c, back);
          EXPECT_EQ(back, m);
        }
    }
  }
}

TEST(Shift, DimensionNeverDropsBelowM2) {
  for (auto [q, max_a] : std::vector<std::pair<int, int>>{{3, 16}, {5, 10}, {7, 7}}) {
    const PrimeModulus p(q);
    const std::size_t dim2 = ma_space(p, 2).dim();
    for (int a = 2; a <= max_a; ++a) {
      const HomSpace ma = ma_space(p, a);
      EXPECT_GE(ma.dim(), dim2);
      if (a >= 3)
        for (const auto& m : ma.basis) EXPECT_TRUE(is_divisible(m, r_poly(p)));
    }
  }
}

TEST(Identities, QrSubstitutionKLemma) {
  for (int q : {3, 5, 7, 11, 13}) {
    EXPECT_TRUE(verify_qr_identity(PrimeModulus(q))) << q;
    EXPECT_TRUE(verify_substitution_identity(PrimeModulus(q))) << q;
  }
  for (int q : {3, 5, 7}) EXPECT_TRUE(verify_k_lemma(PrimeModulus(q))) << q;
}

TEST(Identities, KLemmaAtKEqualsOneGivesQr) {
  for (int q : {3, 5, 7}) {
    const PrimeModulus p(q);
    const BiPoly one = BiPoly::constant(p, 1);
    EXPECT_EQ(k_lemma_lhs(p).evaluate(one), q_of_split(SplitPoly::regular(p)));
    EXPECT_EQ(k_lemma_rhs(p).evaluate(one), pow(r_poly(p), q - 1) + unit_power(p, q - 1));
    EXPECT_EQ(k_lemma_lhs(p).k_degree(), static_cast<std::size_t>(q));
  }
}

TEST(Identities, SubstitutionAtKappaZero) {
  const PrimeModulus p(3);
  const BiPoly lin = BiPoly::linear(p, 0);
  EXPECT_EQ(pow(lin, 3) - BiPoly::monomial(p, 1, 2, 0) * lin, r_poly(p));
}

}  // namespace
}  // namespace gk
