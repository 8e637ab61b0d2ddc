#include "ikmix/catalog.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "ikmix/errors.hpp"

namespace ikmix {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

VerdictStatus parse_status(const std::string& s) {
  for (auto st : {VerdictStatus::kHoldsOnGrid, VerdictStatus::kViolated,
                  VerdictStatus::kInconclusive}) {
    if (to_string(st) == s) return st;
  }
  throw InvalidInput("unknown verdict '" + s + "'");
}

const FiniteMixture& pick(const OrderClaim& claim, const std::string& which) {
  if (which == "smaller") return claim.smaller;
  if (which == "larger") return claim.larger;
  throw InvalidInput("mixture reference must be smaller or larger, got '" +
                     which + "'");
}

double evaluate_value(const ExpectedValue& v, const OrderClaim& claim) {
  const auto& m1 = pick(claim, v.m1);
  if (v.fn == "sf") return mixture_sf(v.x, m1);
  if (v.fn == "cdf") return mixture_cdf(v.x, m1);
  if (v.fn == "pdf") return mixture_pdf(v.x, m1).value;
  if (v.fn == "rh") return mixture_reversed_hazard(v.x, m1);
  if (v.fn == "sfdiff") {
    return mixture_sf(v.x, m1) - mixture_sf(v.x, pick(claim, v.m2));
  }
  throw InvalidInput("unknown value function '" + v.fn + "'");
}

bool close(const ParamMatrix2xN& a, const ParamMatrix2xN& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.row1()[i] - b.row1()[i]) > tol ||
        std::abs(a.row2()[i] - b.row2()[i]) > tol) {
      return false;
    }
  }
  return true;
}

void run_checks(const Fixture& f, const Grid& grid, FixtureResult& out) {
  auto& lines = out.checks;
  const auto report = run_checker(f.theorem, f.inputs);
  out.report = report;

  for (const auto& [name, expected] : f.expected_hypotheses) {
    const Hypothesis* h = nullptr;
    for (const auto& cand : report.hypotheses) {
      if (cand.name == name) h = &cand;
    }
    if (!h) {
      lines.push_back({"hypothesis " + name, false, "checker has no such hypothesis"});
      continue;
    }
    lines.push_back({"hypothesis " + name, h->held == expected,
                     h->detail + (h->held == expected ? "" : " (expected " +
                                 std::string(expected ? "held" : "failed") +
                                 ")")});
  }
  if (f.expected_all_held) {
    lines.push_back({"all hypotheses", report.all_held == *f.expected_all_held,
                     report.all_held ? "all held" : "some failed"});
  }

  if (f.expected_omega || f.expected_product) {
    const auto p = matrix_from_json(f.inputs.at("p_mat"));
    const auto ts = f.inputs.contains("chain")
                        ? chain_from_json(f.inputs.at("chain"))
                        : std::vector<TTransform>{};
    if (f.expected_product) {
      const auto stages = chain_products(p, ts);
      const auto q = stages.empty() ? p : stages.back();
      lines.push_back({"matrix product", close(q, *f.expected_product, kProductTol),
                       to_string(q)});
    }
    if (f.expected_omega) {
      const auto q = matrix_from_json(f.inputs.at("q_mat"));
      const auto t = infer_t_transform_2x2(p, q);
      const bool ok =
          t && std::abs(t->omega - *f.expected_omega) <= kProductTol;
      lines.push_back({"inferred omega", ok,
                       t ? "omega = " + fmt(t->omega) : "no T-transform found"});
    }
  }

  const auto verdict = check_claim(report.claim, grid);
  out.verdict = verdict;
  bool verdict_ok = verdict.status == f.expected_verdict;
  std::string detail = std::string(report.claim.statement) + ": " +
                       std::string(to_string(verdict.status));
  if (verdict.status == VerdictStatus::kViolated) {
    detail += " at x=" + fmt(verdict.witness->x);
    if (verdict.refined_crossing) {
      detail += ", crossing near " + fmt(*verdict.refined_crossing);
    } else {
      detail += ", crossing not bracketed";
      verdict_ok = verdict_ok && f.expected_verdict != VerdictStatus::kViolated;
    }
  }
  lines.push_back({"order verdict", verdict_ok,
                   detail + " (expected " +
                       std::string(to_string(f.expected_verdict)) + ")"});

  for (const auto& v : f.values) {
    const double got = evaluate_value(v, report.claim);
    const bool ok = std::abs(got - v.value) <= v.tol;
    lines.push_back({v.fn + "(" + fmt(v.x) + ")", ok,
                     "computed " + fmt(got) + ", printed " + fmt(v.value) +
                         ", tol " + fmt(v.tol)});
  }
}

}  // namespace

Fixture fixture_from_json(const json& j) {
  Fixture f;
  try {
    f.id = j.at("id").get<std::string>();
    f.title = j.value("title", f.id);
    f.theorem = parse_theorem_id(j.at("theorem").get<std::string>());
    f.inputs = j.at("inputs");
    const auto& e = j.at("expected");
    if (e.contains("hypotheses")) {
      for (const auto& [name, held] : e.at("hypotheses").items()) {
        f.expected_hypotheses[name] = held.get<bool>();
      }
    }
    if (e.contains("all_held")) f.expected_all_held = e.at("all_held").get<bool>();
    f.expected_verdict = parse_status(e.at("verdict").get<std::string>());
    if (e.contains("omega")) f.expected_omega = e.at("omega").get<double>();
    if (e.contains("product")) f.expected_product = matrix_from_json(e.at("product"));
    if (e.contains("values")) {
      for (const auto& v : e.at("values")) {
        f.values.push_back({v.at("fn").get<std::string>(),
                            v.at("m1").get<std::string>(),
                            v.value("m2", std::string{}),
                            v.at("x").get<double>(), v.at("value").get<double>(),
                            v.at("tol").get<double>()});
      }
    }
  } catch (const json::exception& ex) {
    throw InvalidInput("fixture " + f.id + ": " + ex.what());
  }
  return f;
}

const Fixture& FixtureCatalog::find(const std::string& id) const {
  for (const auto& f : fixtures) {
    if (f.id == id) return f;
  }
  throw InvalidInput("no fixture '" + id + "'");
}

FixtureCatalog load_catalog(const std::filesystem::path& dir) {
  FixtureCatalog cat{dir, {}};
  const auto manifest = read_json_file(dir / "manifest.json");
  if (!manifest.contains("fixtures") || !manifest.at("fixtures").is_array()) {
    throw InvalidInput("manifest.json needs a fixtures array");
  }
  for (const auto& entry : manifest.at("fixtures")) {
    const auto file = entry.at("file").get<std::string>();
    auto f = fixture_from_json(read_json_file(dir / file));
    if (f.id != entry.at("id").get<std::string>()) {
      throw InvalidInput(file + ": id does not match the manifest");
    }
    cat.fixtures.push_back(std::move(f));
  }
  return cat;
}

FixtureResult reproduce(const Fixture& f, const Grid& grid) {
  FixtureResult out;
  out.id = f.id;
  const auto start = std::chrono::steady_clock::now();
  try {
    run_checks(f, grid, out);
  } catch (const std::exception& e) {
    out.checks.push_back({"evaluation", false, e.what()});
  }
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  out.passed = !out.checks.empty();
  for (const auto& c : out.checks) out.passed = out.passed && c.passed;
  return out;
}

json result_to_json(const FixtureResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  json j{{"id", r.id}, {"passed", r.passed}, {"checks", checks},
         {"seconds", r.seconds}};
  j["report"] = r.report ? report_to_json(*r.report) : json(nullptr);
  j["verdict"] = r.verdict ? verdict_to_json(*r.verdict) : json(nullptr);
  return j;
}

}  // namespace ikmix
