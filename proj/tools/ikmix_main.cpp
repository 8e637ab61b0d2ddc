// ikmix: command-line front end for the IK mixture order toolkit.
//
// Exit codes: 0 holds / success, 1 domain error or failed reproduction,
// 2 usage, 3 violated, 4 inconclusive, 5 soundness alarm.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ikmix/catalog.hpp"
#include "ikmix/errors.hpp"
#include "ikmix/oracles.hpp"
#include "ikmix/scan.hpp"

#ifndef IKMIX_DEFAULT_DATA_DIR
#define IKMIX_DEFAULT_DATA_DIR "data"
#endif

namespace {

using namespace ikmix;

enum Exit : int {
  kOk = 0,
  kDomain = 1,
  kUsage = 2,
  kViolated = 3,
  kInconclusive = 4,
  kAlarm = 5
};

// --grid beats IKMIX_GRID beats the built-in default.
Grid resolve_grid(const std::string& flag) {
  if (!flag.empty()) return parse_grid(flag);
  if (const char* env = std::getenv("IKMIX_GRID"); env && *env) {
    return parse_grid(env);
  }
  return Grid::default_grid();
}

std::filesystem::path resolve_data(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("IKMIX_DATA"); env && *env) return env;
  return IKMIX_DEFAULT_DATA_DIR;
}

void print_value(double v) { std::printf("%.17g\n", v); }

int exit_for(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kHoldsOnGrid: return kOk;
    case VerdictStatus::kViolated: return kViolated;
    case VerdictStatus::kInconclusive: return kInconclusive;
  }
  return kDomain;
}

struct EvalArgs {
  std::string dist;
  std::string mixture;
  std::string against;
  double alpha = 0.0;
  double beta = 0.0;
  double x = 0.0;
  std::string fn;
};

int run_eval(const EvalArgs& a) {
  if (!a.dist.empty() == !a.mixture.empty()) {
    throw InvalidInput("give exactly one of --dist ik or --mixture FILE");
  }
  if (!a.dist.empty()) {
    if (a.dist != "ik") throw InvalidInput("only --dist ik is supported");
    const IKParams params(a.alpha, a.beta);
    if (a.fn == "cdf") print_value(ik_cdf(a.x, params));
    else if (a.fn == "sf") print_value(ik_sf(a.x, params));
    else if (a.fn == "pdf") print_value(ik_pdf(a.x, params).value);
    else if (a.fn == "rh") print_value(ik_reversed_hazard(a.x, params));
    else if (a.fn == "quantile") print_value(ik_quantile(a.x, params));
    else throw InvalidInput("--fn must be cdf, pdf, sf, rh or quantile");
    return kOk;
  }
  const auto m = load_mixture(a.mixture);
  if (a.fn == "sfdiff") {
    if (a.against.empty()) throw InvalidInput("sfdiff needs --against FILE");
    print_value(mixture_sf(a.x, m) - mixture_sf(a.x, load_mixture(a.against)));
  } else if (a.fn == "cdf") {
    print_value(mixture_cdf(a.x, m));
  } else if (a.fn == "sf") {
    print_value(mixture_sf(a.x, m));
  } else if (a.fn == "pdf") {
    print_value(mixture_pdf(a.x, m).value);
  } else if (a.fn == "rh") {
    print_value(mixture_reversed_hazard(a.x, m));
  } else {
    throw InvalidInput("--fn must be cdf, pdf, sf, rh or sfdiff for mixtures");
  }
  return kOk;
}

int run_order(const std::string& kind, const std::string& m1,
              const std::string& m2, const std::string& grid) {
  const auto v = check_order(parse_order_kind(kind), load_mixture(m1),
                             load_mixture(m2), resolve_grid(grid));
  std::cout << verdict_to_json(v).dump(2) << "\n";
  return exit_for(v.status);
}

int run_check(const std::string& theorem, const std::string& input,
              bool verify, const std::string& grid) {
  const auto report = run_checker(parse_theorem_id(theorem),
                                  read_json_file(input));
  auto j = report_to_json(report);
  int code = kOk;
  if (verify) {
    const auto outcome = verify_prediction(report, resolve_grid(grid));
    j["outcome"] = outcome_to_json(outcome);
    if (outcome.status == PredictionStatus::kContradiction) code = kAlarm;
    if (outcome.status == PredictionStatus::kInconclusive) code = kInconclusive;
  }
  std::cout << j.dump(2) << "\n";
  return code;
}

int run_reproduce(const std::vector<std::string>& ids, bool all,
                  const std::string& data, const std::string& grid,
                  bool as_json, bool verbose) {
  const auto catalog = load_catalog(resolve_data(data) / "fixtures");
  if (all == !ids.empty()) {
    throw InvalidInput("give fixture ids or --all");
  }
  std::vector<const Fixture*> chosen;
  if (all) {
    for (const auto& f : catalog.fixtures) chosen.push_back(&f);
  } else {
    for (const auto& id : ids) chosen.push_back(&catalog.find(id));
  }
  const auto g = resolve_grid(grid);
  std::size_t passed = 0;
  json out = json::array();
  for (const auto* f : chosen) {
    const auto r = reproduce(*f, g);
    passed += r.passed;
    if (as_json) {
      out.push_back(result_to_json(r));
      continue;
    }
    std::printf("%-6s %-4s %7.3fs  %s\n", r.id.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds, f->title.c_str());
    for (const auto& c : r.checks) {
      if (verbose || !c.passed) {
        std::printf("         %s %s: %s\n", c.passed ? "ok  " : "FAIL",
                    c.name.c_str(), c.detail.c_str());
      }
    }
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("%zu/%zu passed\n", passed, chosen.size());
  }
  return passed == chosen.size() ? kOk : kDomain;
}

int run_curve(const std::string& which, const std::string& m1,
              const std::string& m2, const std::string& out,
              const std::string& grid) {
  const auto g = resolve_grid(grid);
  std::vector<CurvePoint> curve;
  if (which == "sf") {
    curve = survival_curve(load_mixture(m1), g);
  } else {
    if (m2.empty()) throw InvalidInput(which + " needs --m2");
    curve = difference_curve(load_mixture(m1), load_mixture(m2), g,
                             parse_curve_kind(which));
  }
  if (out.empty() || out == "-") {
    write_curve_csv(std::cout, curve);
    return kOk;
  }
  std::ofstream os(out);
  if (!os) throw InvalidInput("cannot write " + out);
  write_curve_csv(os, curve);
  return kOk;
}

int run_scan_cmd(const std::string& config, bool all_samples, int threads) {
  auto cfg = scan_config_from_json(read_json_file(config));
  if (threads >= 0) cfg.threads = static_cast<unsigned>(threads);
  const auto result = run_scan(cfg);
  std::cout << scan_result_to_json(result, all_samples).dump(2) << "\n";
  return result.alarms() > 0 ? kAlarm : kOk;
}

int run_oracle(const std::string& fn, const std::string& input,
               const std::string& grid, const std::string& csv) {
  const auto j = read_json_file(input);
  OracleArgs args;
  const auto get = [&](const char* key) {
    return j.contains(key) ? number_list(j.at(key), key) : std::vector<double>{};
  };
  args.p = get("p");
  args.alpha = get("alpha");
  args.beta = get("beta");
  args.p_star = get("p_star");
  args.alpha_star = get("alpha_star");
  args.beta_star = get("beta_star");
  const auto xs = resolve_grid(grid).nodes();
  const auto report = sign_sweep(parse_oracle_id(fn), args, xs);
  if (!csv.empty()) {
    std::ofstream os(csv);
    if (!os) throw InvalidInput("cannot write " + csv);
    os << "x,analytic,finite_difference\n";
    char buf[96];
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", report.xs[i],
                    report.analytic[i], report.numeric[i]);
      os << buf;
    }
  }
  auto out = sign_report_to_json(report);
  out.erase("points");
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int run_fixture(const std::string& id, const std::string& data,
                const std::string& export_dir) {
  const auto catalog = load_catalog(resolve_data(data) / "fixtures");
  if (id.empty()) {
    for (const auto& f : catalog.fixtures) {
      std::printf("%-6s %-5s %s\n", f.id.c_str(),
                  std::string(to_string(f.theorem)).c_str(), f.title.c_str());
    }
    return kOk;
  }
  const auto& f = catalog.find(id);
  const auto report = run_checker(f.theorem, f.inputs);
  if (export_dir.empty()) {
    std::cout << report_to_json(report).dump(2) << "\n";
    return kOk;
  }
  const std::filesystem::path dir(export_dir);
  std::filesystem::create_directories(dir);
  for (const auto& [name, m] : {std::pair{"smaller", &report.claim.smaller},
                                std::pair{"larger", &report.claim.larger}}) {
    const auto path = dir / (f.id + "." + name + ".json");
    std::ofstream os(path);
    if (!os) throw InvalidInput("cannot write " + path.string());
    os << mixture_to_json(*m).dump(2) << "\n";
    std::printf("%s\n", path.string().c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic orders between finite mixtures of "
               "inverted-Kumaraswamy components"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  std::string grid;
  std::string data;
  app.add_option("--grid", grid,
                 "Evaluation grid xmin,xmax,points[,log|linear] "
                 "(default: $IKMIX_GRID or 1e-4,1e4,2000,log)");
  app.add_option("--data", data,
                 "Data directory holding fixtures/ (default: $IKMIX_DATA or "
                 "the source tree)");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a distribution function");
  eval->add_option("--dist", ev.dist, "Single distribution (ik)");
  eval->add_option("--mixture", ev.mixture, "Mixture JSON file");
  eval->add_option("--against", ev.against, "Second mixture for sfdiff");
  eval->add_option("--alpha", ev.alpha, "Shape alpha");
  eval->add_option("--beta", ev.beta, "Shape beta");
  eval->add_option("--x", ev.x, "Point x (the probability u for quantile)")
      ->required();
  eval->add_option("--fn", ev.fn, "cdf|pdf|sf|rh|quantile|sfdiff")->required();

  std::string kind, m1, m2;
  auto* order = app.add_subcommand("order", "Check m1 <=_kind m2 on the grid");
  order->add_option("--kind", kind, "st|rh|lr|r-rh")->required();
  order->add_option("--m1", m1, "Smaller mixture JSON")->required();
  order->add_option("--m2", m2, "Larger mixture JSON")->required();

  std::string theorem, input;
  bool verify = false;
  auto* check = app.add_subcommand("check", "Evaluate a theorem's hypotheses");
  check->add_option("--theorem", theorem, "T3.1 ... T3.12, C3.1 ... C3.3")
      ->required();
  check->add_option("--input", input, "Theorem input JSON")->required();
  check->add_flag("--verify", verify, "Also run the claimed order on the grid");

  std::vector<std::string> ids;
  bool all = false, as_json = false, verbose = false;
  auto* repro = app.add_subcommand("reproduce", "Re-run paper fixtures");
  repro->add_option("ids", ids, "Fixture ids (ex3.1 ... ce3.7)");
  repro->add_flag("--all", all, "Every fixture in the manifest");
  repro->add_flag("--json", as_json, "JSON instead of a table");
  repro->add_flag("-v,--verbose", verbose, "Show every check");

  std::string which, out;
  auto* curve = app.add_subcommand("curve", "Write curve data as CSV");
  curve->add_option("--which", which, "sf|sfdiff|cdfratio|pdfratio|rhratio")
      ->required();
  curve->add_option("--m1", m1, "First mixture JSON")->required();
  curve->add_option("--m2", m2, "Second mixture JSON");
  curve->add_option("--out", out, "Output file (default stdout)");

  std::string config;
  bool all_samples = false;
  int threads = -1;
  auto* scan = app.add_subcommand("scan", "Random search for counterexamples");
  scan->add_option("config", config, "ScanConfig JSON")->required();
  scan->add_flag("--all-samples", all_samples, "List every sample");
  scan->add_option("--threads", threads, "Worker threads (0 = hardware)");

  std::string fn, csv;
  auto* oracle = app.add_subcommand("oracle", "Sign sweep of a proof expression");
  oracle->add_option("--fn", fn, "delta1|delta2|xi_310|xi_311|xi_312_prime")
      ->required();
  oracle->add_option("--input", input, "Parameter JSON")->required();
  oracle->add_option("--csv", csv, "Dump x, analytic, finite difference");

  std::string fixture_id, export_dir;
  auto* fixture = app.add_subcommand("fixture", "List or export fixtures");
  fixture->add_option("id", fixture_id, "Fixture id (omit to list)");
  fixture->add_option("--export", export_dir,
                      "Write the claim's two mixtures to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return run_eval(ev);
    if (*order) return run_order(kind, m1, m2, grid);
    if (*check) return run_check(theorem, input, verify, grid);
    if (*repro) return run_reproduce(ids, all, data, grid, as_json, verbose);
    if (*curve) return run_curve(which, m1, m2, out, grid);
    if (*scan) return run_scan_cmd(config, all_samples, threads);
    if (*oracle) return run_oracle(fn, input, grid, csv);
    if (*fixture) return run_fixture(fixture_id, data, export_dir);
  } catch (const DomainError& e) {
    std::fprintf(stderr, "ikmix: %s\n", e.what());
    return kDomain;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "ikmix: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ikmix: %s\n", e.what());
    return kDomain;
  }
  return kUsage;
}
