#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ikmix/io.hpp"

// Seeded random search over a theorem's parameter region. Each sample draws
// from its own generator seeded by (seed, sample index), so results do not
// depend on the thread count and are merged in index order.
namespace ikmix {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Supported theorems and their parameters (p-like rows are normalized
/// after drawing):
///   T3.1, C3.1   alpha[n], beta, p[n], p_star[n]
///   T3.2         beta[n], alpha, p[n], p_star[n]
///   T3.3         alpha[n], alpha_star[n], beta, p[n]
///   T3.4         p[2], alpha[2], beta, omega   (q = P T_omega)
///   T3.7         p[2], beta[2], alpha, omega
///   T3.10        beta[n], beta_star[n], alpha, p[n], p_star[n]
///   T3.11, T3.12 alpha[n], beta[n], alpha_star[n], beta_star[n], p[n], p_star[n]
struct ScanConfig {
  TheoremId theorem = TheoremId::kT3_11;
  std::size_t n = 3;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// One range per coordinate; a single range is shared by all coordinates.
  std::map<std::string, std::vector<Range>> ranges;
  Grid grid;
  /// 0 means one per hardware thread.
  unsigned threads = 0;
};

/// {"theorem", "n", "samples", "seed", "ranges": {name: [lo,hi] |
/// [[lo,hi],...]}, "grid"?: "xmin,xmax,points", "threads"?}. The seed is
/// required.
ScanConfig scan_config_from_json(const json& j);

enum class ScanCategory {
  kConsistent,              // hypotheses hold, order holds
  kAlarm,                   // hypotheses hold, order violated
  kSufficientNotNecessary,  // hypotheses fail, order holds anyway
  kBothFail,                // hypotheses fail, order violated
  kInconclusive,
  kInvalid                  // the draw could not be evaluated
};

std::string_view to_string(ScanCategory c);

struct ScanSample {
  std::size_t index = 0;
  json inputs;
  ScanCategory category = ScanCategory::kInvalid;
  std::optional<ConditionReport> report;
  std::optional<OrderVerdict> verdict;
  std::string note;
};

struct ScanResult {
  ScanConfig config;
  std::vector<ScanSample> samples;
  std::map<ScanCategory, std::size_t> counts;

  std::size_t count(ScanCategory c) const;
  std::size_t alarms() const { return count(ScanCategory::kAlarm); }
};

/// Draws the inputs of sample `index`; exposed for tests.
json draw_inputs(const ScanConfig& cfg, std::size_t index);

ScanResult run_scan(const ScanConfig& cfg);

/// Counts plus every alarm and every sufficient-not-necessary sample; with
/// all_samples, every sample.
json scan_result_to_json(const ScanResult& r, bool all_samples = false);

}  // namespace ikmix
