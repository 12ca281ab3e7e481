#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gk/fp.hpp"

namespace gk {

inline constexpr const char* kEngineVersion = "ghostkernel 0.1.0";

struct FiltrationRow {
  std::int64_t k;
  std::size_t rep_dim;  ///< complex dimension of V_{a-1} + U_k
  std::size_t hom_dim;
  /// p - hom_dim; only defined on the upper half, k >= (p+1)/2.
  std::optional<std::size_t> ext11;
};

struct FiltrationTable {
  std::uint32_t p;
  std::int64_t a;
  std::int64_t delta;
  std::vector<FiltrationRow> rows;  ///< k = 0..p
};

/// Hom dimensions along V_{a-1} + U_k, k = 0..p. Checks the plateau
/// (hom_dim = p for k <= (p-1)/2), unit steps on the upper half, and that the
/// last row agrees with dim M_a; throws ConsistencyError otherwise.
FiltrationTable filtration_table(PrimeModulus p, std::int64_t a);

/// Hom dimensions along V_{a-2} + U_k, k = 0..p. Expected 0, 1, ..., p.
/// Requires a >= 3.
std::vector<std::size_t> pre_filtration_dims(PrimeModulus p, std::int64_t a);

struct RankReport {
  std::uint32_t p;
  std::int64_t a;
  std::size_t dim_ma;
  std::size_t ext11;
  std::size_t rank_lower = 1;
  std::size_t rank_upper;
  /// E_2-level value; equals the rank only under the survival argument.
  std::size_t rank_e2;
  bool conjecture_zp;
  std::string order_statement = "all p-power torsion has order p";
};

/// Throws ConsistencyError if dim M_a < (p+1)/2.
RankReport rank_report(PrimeModulus p, std::int64_t a);

struct SweepRow {
  RankReport report;
  double ms;
};

struct SweepReport {
  std::int64_t max_pa;
  std::string engine = kEngineVersion;
  std::vector<SweepRow> rows;
};

/// All (p, a) with p an odd prime, a >= 2, p*a <= max_pa; ordered by p then a.
std::vector<std::pair<std::uint32_t, std::int64_t>> sweep_pairs(std::int64_t max_pa);

/// rank_report over sweep_pairs(max_pa) on `parallelism` worker threads.
/// Row order and content (except timings) do not depend on parallelism.
SweepReport sweep(std::int64_t max_pa, unsigned parallelism);

}  // namespace gk
