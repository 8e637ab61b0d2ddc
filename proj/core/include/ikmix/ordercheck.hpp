#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ikmix/mixture.hpp"

namespace ikmix {

/// The four orders, each read as "m1 is smaller than m2":
///   kSt  : S1(x) <= S2(x)
///   kRh  : F2/F1 nondecreasing, equivalently r1 <= r2 pointwise
///   kLr  : f2/f1 nondecreasing
///   kRRh : r1/r2 nonincreasing (ageing faster in reversed hazard)
enum class OrderKind { kSt, kRh, kLr, kRRh };

std::string_view to_string(OrderKind kind);
OrderKind parse_order_kind(std::string_view text);

enum class Spacing { kLogarithmic, kLinear };

/// Evaluation points for a grid check. Nodes are a + k*step in log or
/// linear space with both endpoints pinned, so refined() reproduces every
/// node of the coarser grid bit for bit.
struct Grid {
  double x_min = 1e-4;
  double x_max = 1e4;
  std::size_t points = 2000;
  Spacing spacing = Spacing::kLogarithmic;

  static Grid default_grid() { return {}; }

  /// Throws InvalidInput unless 0 < x_min < x_max and points >= 2.
  void validate() const;
  std::vector<double> nodes() const;
  /// 2n-1 points: the current nodes plus one between each neighbour pair.
  Grid refined() const;
};

/// Grid from "xmin,xmax,points[,log|linear]"; throws InvalidInput.
Grid parse_grid(std::string_view spec);

enum class VerdictStatus { kHoldsOnGrid, kViolated, kInconclusive };

std::string_view to_string(VerdictStatus status);

/// The first failing grid point. For pointwise comparisons lhs/rhs are the
/// two compared values at x; for monotonicity checks they are the deciding
/// ratio at the previous node and at x.
struct Witness {
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// holds_on_grid is grid evidence only, not a proof.
struct OrderVerdict {
  OrderKind kind = OrderKind::kSt;
  VerdictStatus status = VerdictStatus::kHoldsOnGrid;
  std::optional<Witness> witness;
  /// Where the deciding function changes sign, bracketed by the witness and
  /// its grid neighbour(s), bisected to relative width 1e-9.
  std::optional<double> refined_crossing;
  std::string reason;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
};

/// Values below this are treated as underflowed; ratios of two such values
/// are skipped, and more than 10% skipped points make a check inconclusive.
inline constexpr double kUnderflowFloor = 1e-300;
inline constexpr double kMaxSkippedFraction = 0.10;

/// tau = 1e-12 (1 + |value|).
inline double order_tolerance(double value) {
  return 1e-12 * (1.0 + (value < 0 ? -value : value));
}

OrderVerdict check_st(const FiniteMixture& m1, const FiniteMixture& m2,
                      const Grid& grid);
OrderVerdict check_rh(const FiniteMixture& m1, const FiniteMixture& m2,
                      const Grid& grid);
OrderVerdict check_lr(const FiniteMixture& m1, const FiniteMixture& m2,
                      const Grid& grid);
OrderVerdict check_r_rh(const FiniteMixture& m1, const FiniteMixture& m2,
                        const Grid& grid);

OrderVerdict check_order(OrderKind kind, const FiniteMixture& m1,
                         const FiniteMixture& m2, const Grid& grid);

/// Curves behind the plots: S1 - S2, F1/F2, f1/f2 and r1/r2.
enum class CurveKind { kSfDiff, kCdfRatio, kPdfRatio, kRhRatio };

std::string_view to_string(CurveKind kind);
CurveKind parse_curve_kind(std::string_view text);

struct CurvePoint {
  double x = 0.0;
  double value = 0.0;
  bool defined = true;
};

/// One row per grid node in ascending x. A ratio whose numerator and
/// denominator both underflow (0/0) is marked undefined.
std::vector<CurvePoint> difference_curve(const FiniteMixture& m1,
                                         const FiniteMixture& m2,
                                         const Grid& grid, CurveKind which);

/// S(x) of a single mixture on the grid.
std::vector<CurvePoint> survival_curve(const FiniteMixture& m,
                                       const Grid& grid);

/// CSV with header `x,value,defined`, 17 significant digits.
void write_curve_csv(std::ostream& os, std::span<const CurvePoint> curve);

}  // namespace ikmix
