#pragma once

#include <string>
#include <vector>

#include "gk/fp.hpp"

namespace gk {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Every family element lies in M_2 and the (p+1)/2 of them are independent.
std::vector<CheckResult> check_family(PrimeModulus p);
std::vector<CheckResult> check_qr(PrimeModulus p);
std::vector<CheckResult> check_k_lemma(PrimeModulus p);
std::vector<CheckResult> check_substitution(PrimeModulus p);
/// dim M_a = dim M_2 for 2 <= a <= p, and dividing r^(b-a) m back down
/// through M_{b-1}, ..., M_a returns m for every basis vector m of M_a,
/// 2 <= a < b <= max_b (max_b defaults to p).
std::vector<CheckResult> check_shift(PrimeModulus p, std::int64_t max_b = 0);

/// suite is one of family, qr, klemma, subst, shift, all.
std::vector<CheckResult> run_suite(PrimeModulus p, const std::string& suite);

}  // namespace gk
