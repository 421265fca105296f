// Command-line driver for the quantum matrix calculus engine. Talks to the
// core exclusively through the C API in qmx.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "qmx.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StringOut {
  char* s = nullptr;
  ~StringOut() { qmx_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

struct EngineHandle {
  qmx_engine* e = nullptr;
  ~EngineHandle() { qmx_engine_free(e); }
};

int fail_with(qmx_status st) {
  std::cerr << "error: " << qmx_last_error() << "\n";
  return st == QMX_ERR_INTERNAL ? kExitUsage : kExitUsage;
}

void print_report(const std::string& json, bool as_json) {
  if (as_json) {
    std::cout << json << "\n";
    return;
  }
  auto j = nlohmann::json::parse(json);
  std::cout << "suite: " << j["suite"].get<std::string>() << "\n";
  for (auto& [k, v] : j["params"].items())
    std::cout << "  " << k << " = " << v.get<std::string>() << "\n";
  for (const auto& c : j["checks"]) {
    std::cout << "  [" << c["status"].get<std::string>() << "] "
              << c["name"].get<std::string>();
    if (c.contains("witness")) std::cout << "  witness: " << c["witness"].get<std::string>();
    std::cout << "\n";
  }
  std::cout << "status: " << j["status"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact differential calculus on quantum matrix spaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON reports");

  int m = 1, n = 1, N = 2, maxdeg = 3, L = 4, L1 = 3, L2 = 4, D = 3, kmax = 3;
  long long oracle_cap = 2048;
  std::string expr, word, func, cols, suite, q0, inject, outdir = "golden";

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("--m", m)->required();
  nf->add_option("--n", n)->required();
  nf->add_option("--expr", expr)->required();

  auto* diff = app.add_subcommand("d", "differential of an expression");
  diff->add_option("--m", m)->required();
  diff->add_option("--n", n)->required();
  diff->add_option("--expr", expr)->required();

  auto* hilbert = app.add_subcommand("hilbert", "bigraded flatness table");
  hilbert->add_option("--m", m)->required();
  hilbert->add_option("--n", n)->required();
  hilbert->add_option("--maxdeg", maxdeg);
  hilbert->add_option("--oracle-cap", oracle_cap);
  hilbert->add_option("--inject", inject, "drop-relation");

  auto* rhat = app.add_subcommand("rhat", "Hecke/braid verification of the R matrix");
  rhat->add_option("--N", N)->required();
  rhat->add_option("--inject", inject, "flip-rhat");

  auto* pair = app.add_subcommand("pair", "pair a u-polynomial against a word");
  pair->add_option("--N", N)->required();
  pair->add_option("--func", func)->required();
  pair->add_option("--word", word)->required();

  auto* minor = app.add_subcommand("minor", "quantum minor expansion");
  minor->add_option("--m", m)->required();
  minor->add_option("--n", n)->required();
  minor->add_option("--cols", cols)->required();

  auto* derive = app.add_subcommand("derive-action", "derive the action table and write goldens");
  derive->add_option("--m", m)->required();
  derive->add_option("--n", n)->required();
  derive->add_option("--L", L);
  derive->add_option("--out", outdir, "golden directory (default ./golden)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "hopf|embed|module-algebra|grading|uniqueness")->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--maxdeg", maxdeg);
  verify->add_option("--L", L);
  verify->add_option("--L1", L1);
  verify->add_option("--L2", L2);
  verify->add_option("--D", D);
  verify->add_option("--kmax", kmax);
  verify->add_option("--q0", q0, "specialization point, e.g. 2 or 1/3");
  verify->add_option("--inject", inject, "corrupt-k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto need_engine = [&](EngineHandle& h) {
    qmx_status st = qmx_engine_new(m, n, &h.e);
    if (st != QMX_OK) {
      std::cerr << "error: " << qmx_last_error() << "\n";
      std::exit(kExitUsage);
    }
  };

  if (nf->parsed() || diff->parsed()) {
    EngineHandle h;
    need_engine(h);
    StringOut out;
    qmx_status st = nf->parsed() ? qmx_normal_form(h.e, expr.c_str(), &out.s)
                                 : qmx_differential(h.e, expr.c_str(), &out.s);
    if (st != QMX_OK) return fail_with(st);
    std::cout << out.str() << "\n";
    return kExitPass;
  }

  if (hilbert->parsed()) {
    if (!inject.empty() && inject != "drop-relation") {
      std::cerr << "error: unknown injection " << inject << "\n";
      return kExitUsage;
    }
    EngineHandle h;
    need_engine(h);
    StringOut out;
    int pass = 0;
    qmx_status st =
        qmx_hilbert(h.e, maxdeg, oracle_cap, inject.empty() ? 0 : 1, &out.s, &pass);
    if (st != QMX_OK) return fail_with(st);
    print_report(out.str(), as_json);
    return pass ? kExitPass : kExitCheckFailed;
  }

  if (rhat->parsed()) {
    if (!inject.empty() && inject != "flip-rhat") {
      std::cerr << "error: unknown injection " << inject << "\n";
      return kExitUsage;
    }
    StringOut out;
    int pass = 0;
    qmx_status st = qmx_rhat(N, inject.empty() ? 0 : 1, &out.s, &pass);
    if (st != QMX_OK) return fail_with(st);
    print_report(out.str(), as_json);
    return pass ? kExitPass : kExitCheckFailed;
  }

  if (pair->parsed()) {
    StringOut out;
    qmx_status st = qmx_pair(N, func.c_str(), word.c_str(), &out.s);
    if (st != QMX_OK) return fail_with(st);
    std::cout << out.str() << "\n";
    return kExitPass;
  }

  if (minor->parsed()) {
    StringOut out;
    qmx_status st = qmx_minor(m, n, cols.c_str(), &out.s);
    if (st != QMX_OK) return fail_with(st);
    std::cout << out.str() << "\n";
    return kExitPass;
  }

  if (derive->parsed()) {
    EngineHandle h;
    need_engine(h);
    StringOut action, rules;
    qmx_status st = qmx_derive_action(h.e, L, &action.s, &rules.s);
    if (st != QMX_OK) return fail_with(st);
    namespace fs = std::filesystem;
    fs::path dir = fs::path(outdir) / (std::to_string(m) + "x" + std::to_string(n));
    fs::create_directories(dir);
    std::ofstream(dir / "action.json") << action.str() << "\n";
    std::ofstream(dir / "rules.json") << rules.str() << "\n";
    std::cout << action.str() << "\n";
    std::cerr << "wrote " << (dir / "action.json").string() << " and "
              << (dir / "rules.json").string() << "\n";
    return kExitPass;
  }

  if (verify->parsed()) {
    EngineHandle h;
    need_engine(h);
    nlohmann::json opts;
    opts["maxdeg"] = maxdeg;
    opts["L"] = L;
    opts["L1"] = L1;
    opts["L2"] = L2;
    opts["D"] = D;
    opts["kmax"] = kmax;
    if (!q0.empty()) opts["q0"] = q0;
    if (!inject.empty()) opts["inject"] = inject;
    StringOut out;
    int pass = 0;
    qmx_status st =
        qmx_verify(h.e, suite.c_str(), opts.dump().c_str(), &out.s, &pass);
    if (st != QMX_OK) return fail_with(st);
    print_report(out.str(), as_json);
    return pass ? kExitPass : kExitCheckFailed;
  }

  return kExitUsage;
}
