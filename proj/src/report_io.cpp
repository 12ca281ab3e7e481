#include "gk/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace gk {

Json to_json(const Representation& v) {
  return Json{{"p", v.modulus().value()}, {"weights", v.weights()}};
}

Json to_json(const HomSpace& space) {
  Json out;
  out["p"] = space.problem.modulus().value();
  if (space.a) out["a"] = *space.a;
  out["f"] = space.problem.f().to_string();
  out["delta"] = space.problem.delta();
  out["dim"] = space.dim();
  Json basis = Json::array();
  for (const auto& m : space.basis) basis.push_back(m.to_string());
  out["basis"] = std::move(basis);
  return out;
}

Json to_json(const FiltrationTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r{{"k", row.k}, {"rep_dim", row.rep_dim}, {"hom_dim", row.hom_dim}};
    r["ext11"] = row.ext11 ? Json(*row.ext11) : Json(nullptr);
    rows.push_back(std::move(r));
  }
  return Json{{"p", table.p}, {"a", table.a}, {"delta", table.delta}, {"rows", std::move(rows)}};
}

Json to_json(const RankReport& r) {
  return Json{{"p", r.p},
              {"a", r.a},
              {"dim_ma", r.dim_ma},
              {"ext11", r.ext11},
              {"rank_lower", r.rank_lower},
              {"rank_upper", r.rank_upper},
              {"rank_e2", r.rank_e2},
              {"conjecture_zp", r.conjecture_zp},
              {"order_statement", r.order_statement}};
}

namespace {

double round_ms(double ms) { return static_cast<double>(static_cast<long long>(ms * 1000.0 + 0.5)) / 1000.0; }

}  // namespace

Json to_json(const SweepReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    const RankReport& r = row.report;
    rows.push_back(Json{{"p", r.p},
                        {"a", r.a},
                        {"dim_ma", r.dim_ma},
                        {"ext11", r.ext11},
                        {"rank_lower", r.rank_lower},
                        {"rank_upper", r.rank_upper},
                        {"conjecture_zp", r.conjecture_zp},
                        {"ms", round_ms(row.ms)}});
  }
  return Json{{"max_pa", report.max_pa}, {"engine", report.engine}, {"rows", std::move(rows)}};
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "p,a,dim_ma,ext11,rank_lower,rank_upper,conjecture_zp,ms\n";
  os << std::fixed << std::setprecision(3);
  for (const auto& row : report.rows) {
    const RankReport& r = row.report;
    os << r.p << ',' << r.a << ',' << r.dim_ma << ',' << r.ext11 << ',' << r.rank_lower << ','
       << r.rank_upper << ',' << (r.conjecture_zp ? "true" : "false") << ',' << round_ms(row.ms) << '\n';
  }
  return os.str();
}

std::string to_csv(const FiltrationTable& table) {
  std::ostringstream os;
  os << "k,rep_dim,hom_dim,ext11\n";
  for (const auto& row : table.rows) {
    os << row.k << ',' << row.rep_dim << ',' << row.hom_dim << ',';
    if (row.ext11) os << *row.ext11;
    os << '\n';
  }
  return os.str();
}

std::string to_text(const FiltrationTable& table) {
  std::ostringstream os;
  os << "filtration V_{a-1} + U_k for p=" << table.p << ", a=" << table.a << " (delta=" << table.delta
     << ")\n";
  os << std::setw(4) << "k" << std::setw(10) << "dim V" << std::setw(10) << "hom_dim" << std::setw(8)
     << "ext11" << '\n';
  for (const auto& row : table.rows) {
    os << std::setw(4) << row.k << std::setw(10) << row.rep_dim << std::setw(10) << row.hom_dim
       << std::setw(8) << (row.ext11 ? std::to_string(*row.ext11) : "-") << '\n';
  }
  return os.str();
}

std::string to_text(const SweepReport& report) {
  std::ostringstream os;
  os << report.engine << ", all (p, a) with pa <= " << report.max_pa << '\n';
  os << std::setw(4) << "p" << std::setw(4) << "a" << std::setw(8) << "dim_ma" << std::setw(7) << "ext11"
     << std::setw(8) << "bounds" << std::setw(6) << "Z/p" << std::setw(11) << "ms" << '\n';
  os << std::fixed << std::setprecision(2);
  for (const auto& row : report.rows) {
    const RankReport& r = row.report;
    os << std::setw(4) << r.p << std::setw(4) << r.a << std::setw(8) << r.dim_ma << std::setw(7) << r.ext11
       << std::setw(8) << ("1.." + std::to_string(r.rank_upper)) << std::setw(6)
       << (r.conjecture_zp ? "yes" : "no") << std::setw(11) << row.ms << '\n';
  }
  return os.str();
}

}  // namespace gk
