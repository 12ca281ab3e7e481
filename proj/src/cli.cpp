#include "gk/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gk/bounds.hpp"
#include "gk/homspace.hpp"
#include "gk/report_io.hpp"
#include "gk/verify.hpp"

namespace gk {

namespace {

struct CliConfig {
  std::int64_t p = 0;
  std::int64_t a = 2;
  std::int64_t max_pa = 50;
  unsigned jobs = 1;
  bool basis = false;
  std::string suite = "all";
  std::string format;
  std::string out_path;
};

// Writes to --out when given, otherwise to `out`. False on I/O failure.
bool emit(const CliConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file '" << cfg.out_path << "'\n";
    return false;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: failed writing '" << cfg.out_path << "'\n";
    return false;
  }
  return true;
}

std::string cmd_ma(const CliConfig& cfg) {
  const PrimeModulus p(cfg.p);
  const HomSpace space = ma_space(p, cfg.a);
  std::ostringstream os;
  if (cfg.format == "json") {
    Json j = to_json(space);
    if (!cfg.basis) j.erase("basis");
    os << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "p,a,delta,dim\n" << cfg.p << ',' << cfg.a << ',' << space.problem.delta() << ',' << space.dim() << '\n';
  } else {
    os << "dim M_" << cfg.a << " = " << space.dim() << "  (p=" << cfg.p << ", delta=" << space.problem.delta()
       << ")\n";
    if (cfg.basis)
      for (const auto& m : space.basis) os << "  " << m.to_string() << '\n';
  }
  return os.str();
}

std::string cmd_verify(const CliConfig& cfg, bool& all_passed) {
  const PrimeModulus p(cfg.p);
  const auto checks = run_suite(p, cfg.suite);
  all_passed = true;
  for (const auto& c : checks) all_passed = all_passed && c.passed;
  std::ostringstream os;
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& c : checks) list.push_back(Json{{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
    os << Json{{"p", cfg.p}, {"suite", cfg.suite}, {"pass", all_passed}, {"checks", std::move(list)}}.dump(2)
       << '\n';
  } else if (cfg.format == "csv") {
    os << "name,pass\n";
    for (const auto& c : checks) os << c.name << ',' << (c.passed ? "true" : "false") << '\n';
  } else {
    for (const auto& c : checks)
      os << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    os << (all_passed ? "all checks passed" : "verification FAILED") << " (p=" << cfg.p << ", suite=" << cfg.suite
       << ")\n";
  }
  return os.str();
}

std::string cmd_filtration(const CliConfig& cfg) {
  const PrimeModulus p(cfg.p);
  const FiltrationTable table = filtration_table(p, cfg.a);
  std::vector<std::size_t> pre;
  if (cfg.a >= 3) pre = pre_filtration_dims(p, cfg.a);
  std::ostringstream os;
  if (cfg.format == "json") {
    Json j = to_json(table);
    j["pre_filtration"] = cfg.a >= 3 ? Json(pre) : Json(nullptr);
    os << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << to_csv(table);
  } else {
    os << to_text(table);
    if (!pre.empty()) {
      os << "V_{a-2} + U_k hom_dim:";
      for (auto d : pre) os << ' ' << d;
      os << '\n';
    }
  }
  return os.str();
}

std::string cmd_sweep(const CliConfig& cfg) {
  const SweepReport report = sweep(cfg.max_pa, cfg.jobs);
  if (cfg.format == "csv") return to_csv(report);
  if (cfg.format == "text") return to_text(report);
  return to_json(report).dump(2) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steenrod-power kernels and Hom-dimension bounds over F_p[t, x]", "gk"};
  app.require_subcommand(1);
  CliConfig cfg;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto* ma = app.add_subcommand("ma", "dimension (and basis) of M_a");
  ma->add_option("--p", cfg.p, "odd prime")->required();
  ma->add_option("--a", cfg.a, "integer a >= 2")->required();
  ma->add_flag("--basis", cfg.basis, "print the echelon basis");

  auto* verify = app.add_subcommand("verify", "check the polynomial identities and lemmas for one prime");
  verify->add_option("--p", cfg.p, "odd prime")->required();
  verify->add_option("--suite", cfg.suite, "family|qr|klemma|subst|shift|all")
      ->check(CLI::IsMember({"family", "qr", "klemma", "subst", "shift", "all"}));

  auto* filtration = app.add_subcommand("filtration", "Hom dimensions along V_{a-1} + U_k");
  filtration->add_option("--p", cfg.p, "odd prime")->required();
  filtration->add_option("--a", cfg.a, "integer a >= 2")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "rank reports for all (p, a) with pa <= max_pa");
  sweep_cmd->add_option("--max-pa", cfg.max_pa, "bound on p*a (>= 6)");
  sweep_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

  for (auto* sub : {ma, verify, filtration, sweep_cmd}) {
    sub->add_option("--format", cfg.format, "json|csv|text")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out_path, "write the report to this file");
  }

  std::vector<std::string> argv_store{"gk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  if (cfg.format.empty()) cfg.format = sweep_cmd->parsed() ? "json" : "text";

  try {
    if (!sweep_cmd->parsed() && (cfg.p < 3 || !is_prime(cfg.p))) {
      err << "error: p must be an odd prime (got " << cfg.p << ")\n";
      return kExitUsage;
    }
    if ((ma->parsed() || filtration->parsed()) && cfg.a < 2) {
      err << "error: a must be at least 2 (got " << cfg.a << ")\n";
      return kExitUsage;
    }
    if (sweep_cmd->parsed() && cfg.max_pa < 6) {
      err << "error: --max-pa must be at least 6 (got " << cfg.max_pa << ")\n";
      return kExitUsage;
    }

    std::string report;
    int code = kExitOk;
    if (ma->parsed()) {
      report = cmd_ma(cfg);
    } else if (verify->parsed()) {
      bool passed = false;
      report = cmd_verify(cfg, passed);
      code = passed ? kExitOk : kExitVerificationFailed;
    } else if (filtration->parsed()) {
      report = cmd_filtration(cfg);
    } else {
      report = cmd_sweep(cfg);
    }
    if (!emit(cfg, report, out, err)) return kExitIo;
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace gk
