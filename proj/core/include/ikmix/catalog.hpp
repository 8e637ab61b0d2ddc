#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ikmix/io.hpp"

// The worked examples and counterexamples as data: one JSON file per id,
// listed by manifest.json in the fixture directory.
namespace ikmix {

/// A number the paper prints. fn is sf, cdf, pdf, rh (of m1) or sfdiff
/// (S(m1) - S(m2)); m1/m2 name the claim's "smaller" or "larger" mixture.
struct ExpectedValue {
  std::string fn;
  std::string m1;
  std::string m2;
  double x = 0.0;
  double value = 0.0;
  double tol = 0.0;
};

struct Fixture {
  std::string id;
  std::string title;
  TheoremId theorem;
  json inputs;
  std::map<std::string, bool> expected_hypotheses;
  std::optional<bool> expected_all_held;
  VerdictStatus expected_verdict = VerdictStatus::kHoldsOnGrid;
  /// omega recovered from (p_mat, q_mat) for n = 2.
  std::optional<double> expected_omega;
  /// p_mat times the chain.
  std::optional<ParamMatrix2xN> expected_product;
  std::vector<ExpectedValue> values;
};

Fixture fixture_from_json(const json& j);

struct FixtureCatalog {
  std::filesystem::path dir;
  std::vector<Fixture> fixtures;

  /// Throws InvalidInput for an unknown id.
  const Fixture& find(const std::string& id) const;
};

FixtureCatalog load_catalog(const std::filesystem::path& dir);

/// Tolerance for matrix products and the recovered omega.
inline constexpr double kProductTol = 1e-12;

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureResult {
  std::string id;
  bool passed = false;
  std::vector<CheckLine> checks;
  std::optional<ConditionReport> report;
  std::optional<OrderVerdict> verdict;
  double seconds = 0.0;
};

/// Runs one fixture end to end: hypotheses, matrix algebra, the claimed
/// order on the grid and any printed values. Never throws for a fixture
/// that fails to build; the failure is recorded as a check line.
FixtureResult reproduce(const Fixture& f, const Grid& grid);

json result_to_json(const FixtureResult& r);

}  // namespace ikmix
