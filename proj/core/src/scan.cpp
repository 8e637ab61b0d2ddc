#include "ikmix/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "ikmix/errors.hpp"

namespace ikmix {
namespace {

enum class Shape { kVector, kProportions, kScalar };

struct ParamSpec {
  const char* name;
  Shape shape;
};

std::vector<ParamSpec> params_for(TheoremId id) {
  using enum Shape;
  switch (id) {
    case TheoremId::kT3_1:
    case TheoremId::kC3_1:
      return {{"alpha", kVector}, {"beta", kScalar}, {"p", kProportions},
              {"p_star", kProportions}};
    case TheoremId::kT3_2:
      return {{"beta", kVector}, {"alpha", kScalar}, {"p", kProportions},
              {"p_star", kProportions}};
    case TheoremId::kT3_3:
      return {{"alpha", kVector}, {"alpha_star", kVector}, {"beta", kScalar},
              {"p", kProportions}};
    case TheoremId::kT3_4:
      return {{"p", kProportions}, {"alpha", kVector}, {"beta", kScalar},
              {"omega", kScalar}};
    case TheoremId::kT3_7:
      return {{"p", kProportions}, {"beta", kVector}, {"alpha", kScalar},
              {"omega", kScalar}};
    case TheoremId::kT3_10:
      return {{"beta", kVector}, {"beta_star", kVector}, {"alpha", kScalar},
              {"p", kProportions}, {"p_star", kProportions}};
    case TheoremId::kT3_11:
    case TheoremId::kT3_12:
      return {{"alpha", kVector}, {"beta", kVector}, {"alpha_star", kVector},
              {"beta_star", kVector}, {"p", kProportions},
              {"p_star", kProportions}};
    default:
      throw InvalidInput("scan does not support " +
                         std::string(to_string(id)));
  }
}

std::size_t dimension(const ScanConfig& cfg, Shape shape) {
  if (shape == Shape::kScalar) return 1;
  if (cfg.theorem == TheoremId::kT3_4 || cfg.theorem == TheoremId::kT3_7) {
    return 2;
  }
  return cfg.n;
}

Range range_of(const ScanConfig& cfg, const std::string& name, std::size_t k) {
  const auto& rs = cfg.ranges.at(name);
  return rs.size() == 1 ? rs[0] : rs.at(k);
}

bool point_mass(const ScanConfig& cfg) {
  for (const auto& [name, rs] : cfg.ranges) {
    for (const auto& r : rs) {
      if (r.lo != r.hi) return false;
    }
  }
  return true;
}

std::vector<Range> parse_ranges(const json& j, const std::string& name) {
  const auto one = [&](const json& r) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() ||
        !r[1].is_number()) {
      throw InvalidInput("range for " + name + " must be [lo, hi]");
    }
    Range out{r[0].get<double>(), r[1].get<double>()};
    if (!(out.lo > 0.0) || !(out.hi >= out.lo) || !std::isfinite(out.hi)) {
      throw InvalidInput("range for " + name + " must satisfy 0 < lo <= hi");
    }
    return out;
  };
  if (j.is_array() && !j.empty() && j[0].is_array()) {
    std::vector<Range> out;
    for (const auto& r : j) out.push_back(one(r));
    return out;
  }
  return {one(j)};
}

}  // namespace

std::string_view to_string(ScanCategory c) {
  switch (c) {
    case ScanCategory::kConsistent: return "consistent";
    case ScanCategory::kAlarm: return "soundness_alarm";
    case ScanCategory::kSufficientNotNecessary: return "sufficient_not_necessary";
    case ScanCategory::kBothFail: return "hypotheses_false_order_violated";
    case ScanCategory::kInconclusive: return "inconclusive";
    case ScanCategory::kInvalid: return "invalid";
  }
  return "?";
}

std::size_t ScanResult::count(ScanCategory c) const {
  const auto it = counts.find(c);
  return it == counts.end() ? 0 : it->second;
}

ScanConfig scan_config_from_json(const json& j) {
  ScanConfig cfg;
  try {
    cfg.theorem = parse_theorem_id(j.at("theorem").get<std::string>());
    if (!j.contains("seed") || !j.at("seed").is_number_integer()) {
      throw InvalidInput("scan config needs an integer seed");
    }
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.samples = j.at("samples").get<std::size_t>();
    cfg.n = j.value("n", std::size_t{3});
    cfg.threads = j.value("threads", 0u);
    if (j.contains("grid")) cfg.grid = parse_grid(j.at("grid").get<std::string>());
    for (const auto& [name, r] : j.at("ranges").items()) {
      cfg.ranges[name] = parse_ranges(r, name);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("scan config: ") + e.what());
  }
  if (cfg.n < 1) throw InvalidInput("scan config: n must be >= 1");
  if (cfg.samples < 1) throw InvalidInput("scan config: samples must be >= 1");
  for (const auto& spec : params_for(cfg.theorem)) {
    const auto it = cfg.ranges.find(spec.name);
    if (it == cfg.ranges.end()) {
      throw InvalidInput(std::string("scan config: missing range for ") +
                         spec.name);
    }
    const auto dim = dimension(cfg, spec.shape);
    if (it->second.size() != 1 && it->second.size() != dim) {
      throw InvalidInput(std::string("scan config: ") + spec.name + " needs 1 or " +
                         std::to_string(dim) + " ranges");
    }
  }
  const auto om = cfg.ranges.find("omega");
  if (om != cfg.ranges.end() && om->second[0].hi > 1.0) {
    throw InvalidInput("scan config: omega must lie in [0,1]");
  }
  return cfg;
}

json draw_inputs(const ScanConfig& cfg, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                    static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(std::uint64_t{index} >> 32)};
  std::mt19937_64 rng(seq);
  // 53 random bits -> [0,1); same on every platform, unlike the
  // implementation-defined std::uniform_real_distribution.
  const auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  json in = json::object();
  for (const auto& spec : params_for(cfg.theorem)) {
    const auto dim = dimension(cfg, spec.shape);
    std::vector<double> v(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const auto r = range_of(cfg, spec.name, k);
      v[k] = r.lo == r.hi ? r.lo : r.lo + (r.hi - r.lo) * unit();
    }
    if (spec.shape == Shape::kProportions) {
      double total = 0.0;
      for (double w : v) total += w;
      for (double& w : v) w /= total;
    }
    in[spec.name] = spec.shape == Shape::kScalar ? json(v[0]) : json(v);
  }

  if (cfg.theorem == TheoremId::kT3_4 || cfg.theorem == TheoremId::kT3_7) {
    const char* row = cfg.theorem == TheoremId::kT3_4 ? "alpha" : "beta";
    const ParamMatrix2xN p(in["p"].get<std::vector<double>>(),
                           in[row].get<std::vector<double>>());
    const TTransform t{in["omega"].get<double>(), 0, 1};
    in["p_mat"] = matrix_to_json(p);
    in["q_mat"] = matrix_to_json(apply_t_transform(p, t));
    in["chain"] = json::array({ttransform_to_json(t)});
    in.erase("p");
    in.erase(row);
    in.erase("omega");
  }
  return in;
}

ScanResult run_scan(const ScanConfig& cfg) {
  ScanResult result{cfg, {}, {}};
  const std::size_t total = point_mass(cfg) ? 1 : cfg.samples;
  result.samples.resize(total);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      ScanSample s;
      s.index = i;
      try {
        s.inputs = draw_inputs(cfg, i);
        s.report = run_checker(cfg.theorem, s.inputs);
        s.verdict = check_claim(s.report->claim, cfg.grid);
        const bool held = s.report->all_held;
        switch (s.verdict->status) {
          case VerdictStatus::kHoldsOnGrid:
            s.category = held ? ScanCategory::kConsistent
                              : ScanCategory::kSufficientNotNecessary;
            break;
          case VerdictStatus::kViolated:
            s.category = held ? ScanCategory::kAlarm : ScanCategory::kBothFail;
            break;
          case VerdictStatus::kInconclusive:
            s.category = ScanCategory::kInconclusive;
            break;
        }
      } catch (const std::exception& e) {
        s.category = ScanCategory::kInvalid;
        s.note = e.what();
      }
      result.samples[i] = std::move(s);
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& s : result.samples) ++result.counts[s.category];
  return result;
}

json scan_result_to_json(const ScanResult& r, bool all_samples) {
  json counts = json::object();
  for (auto c : {ScanCategory::kConsistent, ScanCategory::kAlarm,
                 ScanCategory::kSufficientNotNecessary, ScanCategory::kBothFail,
                 ScanCategory::kInconclusive, ScanCategory::kInvalid}) {
    counts[std::string(to_string(c))] = r.count(c);
  }
  const auto sample_json = [](const ScanSample& s) {
    json j{{"index", s.index},
           {"category", to_string(s.category)},
           {"inputs", s.inputs}};
    if (s.report) {
      json hyps = json::object();
      for (const auto& h : s.report->hypotheses) hyps[h.name] = h.held;
      j["hypotheses"] = hyps;
      j["claim"] = s.report->claim.statement;
    }
    if (s.verdict) j["verdict"] = verdict_to_json(*s.verdict);
    if (!s.note.empty()) j["note"] = s.note;
    return j;
  };
  json alarms = json::array();
  json sufficient = json::array();
  json every = json::array();
  for (const auto& s : r.samples) {
    if (s.category == ScanCategory::kAlarm) alarms.push_back(sample_json(s));
    if (s.category == ScanCategory::kSufficientNotNecessary) {
      sufficient.push_back(sample_json(s));
    }
    if (all_samples) every.push_back(sample_json(s));
  }
  json j{{"theorem", to_string(r.config.theorem)},
         {"seed", r.config.seed},
         {"samples", r.samples.size()},
         {"counts", counts},
         {"soundness_alarms", alarms},
         {"sufficient_not_necessary", sufficient}};
  if (all_samples) j["all"] = every;
  return j;
}

}  // namespace ikmix
