#include "gk/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "gk/homspace.hpp"
#include "gk/reps.hpp"
#include "gk/steenrod.hpp"

namespace gk {

FiltrationTable filtration_table(PrimeModulus p, std::int64_t a) {
  const Parameters params = parameters(p, a);
  const std::int64_t q = p.value();
  FiltrationTable table{p.value(), a, params.delta, {}};
  for (std::int64_t k = 0; k <= q; ++k) {
    const std::size_t dim = hom_space(filtration_problem(p, a, k)).dim();
    FiltrationRow row{k, filtration_rep(p, a, k).dimension(), dim, std::nullopt};
    if (2 * k >= q + 1) row.ext11 = static_cast<std::size_t>(q) - std::min<std::size_t>(dim, q);
    table.rows.push_back(row);
  }

  const std::string where = " (p=" + std::to_string(q) + ", a=" + std::to_string(a) + ")";
  for (const auto& row : table.rows) {
    if (2 * row.k <= q - 1 && row.hom_dim != static_cast<std::size_t>(q))
      throw ConsistencyError("hom_dim(" + std::to_string(row.k) + ") != p on the plateau" + where);
    if (row.k > 0) {
      const std::size_t prev = table.rows[static_cast<std::size_t>(row.k - 1)].hom_dim;
      if (row.hom_dim > prev || prev - row.hom_dim > 1)
        throw ConsistencyError("hom_dim step at k=" + std::to_string(row.k) + " is not 0 or 1" + where);
    }
  }
  if (table.rows.back().hom_dim != ma_space(p, a).dim())
    throw ConsistencyError("hom_dim(p) differs from dim M_a" + where);
  return table;
}

std::vector<std::size_t> pre_filtration_dims(PrimeModulus p, std::int64_t a) {
  if (a < 3) throw UsageError("pre-filtration dimensions need a >= 3");
  std::vector<std::size_t> out;
  for (std::int64_t k = 0; k <= static_cast<std::int64_t>(p.value()); ++k)
    out.push_back(hom_space(pre_filtration_problem(p, a, k)).dim());
  return out;
}

RankReport rank_report(PrimeModulus p, std::int64_t a) {
  const std::size_t q = p.value();
  const std::size_t dim = ma_space(p, a).dim();
  if (dim < (q + 1) / 2)
    throw ConsistencyError("dim M_a = " + std::to_string(dim) + " is below (p+1)/2 for p=" +
                           std::to_string(q) + ", a=" + std::to_string(a));
  RankReport out;
  out.p = p.value();
  out.a = a;
  out.dim_ma = dim;
  out.ext11 = q - std::min(dim, q);
  out.rank_upper = (q + 1) / 2;
  out.rank_e2 = out.ext11;
  out.conjecture_zp = out.ext11 == 1;
  return out;
}

std::vector<std::pair<std::uint32_t, std::int64_t>> sweep_pairs(std::int64_t max_pa) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (std::int64_t p = 3; 2 * p <= max_pa; p += 2) {
    if (!is_prime(p)) continue;
    for (std::int64_t a = 2; p * a <= max_pa; ++a) out.emplace_back(static_cast<std::uint32_t>(p), a);
  }
  return out;
}

SweepReport sweep(std::int64_t max_pa, unsigned parallelism) {
  if (max_pa < 6) throw UsageError("max_pa must be at least 6");
  if (parallelism == 0) throw UsageError("parallelism must be at least 1");
  const auto pairs = sweep_pairs(max_pa);
  std::vector<std::optional<SweepRow>> results(pairs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        const auto start = std::chrono::steady_clock::now();
        RankReport report = rank_report(PrimeModulus(pairs[i].first), pairs[i].second);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        results[i] = SweepRow{std::move(report), elapsed.count()};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    const unsigned n = std::min<unsigned>(parallelism, static_cast<unsigned>(std::max<std::size_t>(pairs.size(), 1)));
    for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  SweepReport out;
  out.max_pa = max_pa;
  for (auto& r : results) out.rows.push_back(std::move(*r));
  return out;
}

}  // namespace gk
