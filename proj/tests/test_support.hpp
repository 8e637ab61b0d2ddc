#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ikmix/catalog.hpp"
#include "ikmix/majorization.hpp"
#include "ikmix/mixture.hpp"
#include "ikmix/theorems.hpp"

namespace ikmix::testing {

// Platform-independent uniform draws for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  // Log-uniform on [lo, hi]; shapes span orders of magnitude.
  double log_uniform(double lo, double hi);
  std::size_t index(std::size_t n) { return gen_() % n; }

  std::vector<double> proportions(std::size_t n);
  std::vector<double> shapes(std::size_t n, double lo, double hi);

 private:
  std::mt19937_64 gen_;
};

FiniteMixture random_mixture(Rng& rng, std::size_t n);

// A 2 x n matrix whose rows are oppositely ordered.
ParamMatrix2xN random_script_l(Rng& rng, std::size_t n, double lo, double hi);

std::vector<double> sorted(std::vector<double> v, bool ascending);

// Moves mass between adjacent entries without changing their order, so the
// result is majorized by v and keeps v's monotone direction.
std::vector<double> average_adjacent(Rng& rng, std::vector<double> v,
                                     int steps);

// A random instance satisfying every hypothesis of the theorem. Supported:
// T3.1, C3.1, T3.2, T3.3, T3.10, T3.11, T3.12.
ConditionReport random_satisfying_instance(TheoremId id, Rng& rng,
                                           std::size_t n = 3);

// Why a grid check broke the implication lr => rh => st, where `stronger`
// held on `grid` but `weaker` (the next order down) was violated:
//   "range"       the stronger order fails on a grid widened to [1e-8, 1e8],
//                 i.e. outside the original window;
//   "resolution"  the weaker violation's margin |lhs - rhs| is below 1e-11,
//                 within ten tolerance units of the comparison.
// Empty when neither applies.
std::string explain_implication_exception(const FiniteMixture& m1,
                                          const FiniteMixture& m2,
                                          OrderKind stronger,
                                          const OrderVerdict& weaker);

// Integral of the density over (0, inf) through x = Q(u): the integrand
// f(Q(u)) Q'(u) on (0,1), with Q' from its own closed form, by the midpoint
// rule on `cells` cells.
double mass_by_quantile_substitution(const IKParams& p, int cells = 10000);

// The shipped fixture catalog, loaded once.
const FixtureCatalog& catalog();
// The checker report for a fixture id; its claim carries both mixtures.
ConditionReport fixture_report(const std::string& id);

}  // namespace ikmix::testing
