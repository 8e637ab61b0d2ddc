#include "ikmix/ordercheck.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "ikmix/errors.hpp"

namespace ikmix {
namespace {

constexpr double kCrossingRelWidth = 1e-9;

// Numerator/denominator of a ratio at x. Either may underflow.
struct RatioTerms {
  double num = 0.0;
  double den = 0.0;
};

using TermsFn = std::function<RatioTerms(double)>;

bool both_underflow(double a, double b) {
  return std::abs(a) < kUnderflowFloor && std::abs(b) < kUnderflowFloor;
}

std::optional<double> ratio_of(const RatioTerms& t) {
  if (both_underflow(t.num, t.den)) return std::nullopt;
  const double r = t.num / t.den;
  if (!std::isfinite(r)) return std::nullopt;
  return r;
}

double fd_step(double x) {
  return x * std::cbrt(std::numeric_limits<double>::epsilon());
}

// Bisects [lo, hi] with bad(lo) false and bad(hi) true.
double bisect_crossing(double lo, double hi,
                       const std::function<bool(double)>& bad) {
  while (hi - lo > kCrossingRelWidth * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (bad(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

bool too_many_skipped(const OrderVerdict& v) {
  const auto total = v.evaluated + v.skipped;
  return total > 0 &&
         static_cast<double>(v.skipped) > kMaxSkippedFraction * total;
}

void settle_without_violation(OrderVerdict& v) {
  if (too_many_skipped(v)) {
    v.status = VerdictStatus::kInconclusive;
    std::ostringstream os;
    os << v.skipped << " of " << v.evaluated + v.skipped
       << " grid points underflowed";
    v.reason = os.str();
  } else {
    v.status = VerdictStatus::kHoldsOnGrid;
  }
}

// direction = +1: ratio must be nondecreasing; -1: nonincreasing.
OrderVerdict monotone_ratio_check(OrderKind kind, const Grid& grid,
                                  const TermsFn& terms, int direction) {
  grid.validate();
  OrderVerdict v;
  v.kind = kind;
  const auto xs = grid.nodes();

  struct Node {
    double x;
    double r;
  };
  std::optional<Node> prev;
  std::optional<Node> before_prev;
  std::optional<Node> bad_prev;
  for (double x : xs) {
    const auto r = ratio_of(terms(x));
    if (!r) {
      ++v.skipped;
      continue;
    }
    ++v.evaluated;
    if (prev && !v.witness) {
      const double inc = direction * (*r - prev->r);
      const double tol =
          order_tolerance(std::max(std::abs(*r), std::abs(prev->r)));
      if (inc < -tol) {
        v.witness = Witness{x, prev->r, *r};
        bad_prev = prev;
        if (before_prev) {
          // Slope sign flips somewhere between the last good increment and
          // the failing one.
          const auto slope_bad = [&](double at) {
            const double h = fd_step(at);
            const auto up = ratio_of(terms(at + h));
            const auto down = ratio_of(terms(at - h));
            if (!up || !down) return false;
            return direction * (*up - *down) < 0.0;
          };
          const double lo = before_prev->x;
          if (!slope_bad(lo)) {
            for (double hi : {x, std::sqrt(prev->x * x), prev->x}) {
              if (slope_bad(hi)) {
                v.refined_crossing = bisect_crossing(lo, hi, slope_bad);
                break;
              }
            }
          }
        }
      }
    }
    before_prev = prev;
    prev = Node{x, *r};
  }
  if (v.witness) {
    v.status = VerdictStatus::kViolated;
    std::ostringstream os;
    os.precision(17);
    os << "ratio " << (direction > 0 ? "decreases" : "increases")
       << " between x=" << bad_prev->x << " and x=" << v.witness->x;
    v.reason = os.str();
  } else {
    settle_without_violation(v);
  }
  return v;
}

// Pointwise lhs(x) <= rhs(x) + tau.
OrderVerdict pointwise_check(OrderKind kind, const Grid& grid,
                             const TermsFn& pair, const char* what) {
  grid.validate();
  OrderVerdict v;
  v.kind = kind;
  const auto bad_at = [&](double x) {
    const auto t = pair(x);
    return t.num - t.den >
           order_tolerance(std::max(std::abs(t.num), std::abs(t.den)));
  };
  std::optional<double> last_good;
  for (double x : grid.nodes()) {
    const auto t = pair(x);
    if (both_underflow(t.num, t.den) || !std::isfinite(t.num) ||
        !std::isfinite(t.den)) {
      ++v.skipped;
      continue;
    }
    ++v.evaluated;
    if (v.witness) continue;
    if (bad_at(x)) {
      v.witness = Witness{x, t.num, t.den};
      if (last_good) v.refined_crossing = bisect_crossing(*last_good, x, bad_at);
    } else {
      last_good = x;
    }
  }
  if (v.witness) {
    v.status = VerdictStatus::kViolated;
    std::ostringstream os;
    os.precision(17);
    os << what << " at x=" << v.witness->x << ": " << v.witness->lhs << " > "
       << v.witness->rhs;
    v.reason = os.str();
  } else {
    settle_without_violation(v);
  }
  return v;
}

RatioTerms reversed_hazards(double x, const FiniteMixture& m1,
                            const FiniteMixture& m2) {
  const double f1 = mixture_pdf(x, m1).value;
  const double f2 = mixture_pdf(x, m2).value;
  const double c1 = mixture_cdf(x, m1);
  const double c2 = mixture_cdf(x, m2);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {c1 < kUnderflowFloor ? nan : f1 / c1,
          c2 < kUnderflowFloor ? nan : f2 / c2};
}

}  // namespace

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::kSt: return "st";
    case OrderKind::kRh: return "rh";
    case OrderKind::kLr: return "lr";
    case OrderKind::kRRh: return "r-rh";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "st") return OrderKind::kSt;
  if (text == "rh") return OrderKind::kRh;
  if (text == "lr") return OrderKind::kLr;
  if (text == "r-rh" || text == "r_rh" || text == "rrh") return OrderKind::kRRh;
  throw InvalidInput("unknown order kind '" + std::string(text) + "'");
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kHoldsOnGrid: return "holds_on_grid";
    case VerdictStatus::kViolated: return "violated";
    case VerdictStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

void Grid::validate() const {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_min > 0.0 &&
        x_min < x_max)) {
    throw InvalidInput("grid: need 0 < x_min < x_max");
  }
  if (points < 2) throw InvalidInput("grid: need at least 2 points");
}

std::vector<double> Grid::nodes() const {
  validate();
  std::vector<double> xs(points);
  const bool log_space = spacing == Spacing::kLogarithmic;
  const double a = log_space ? std::log(x_min) : x_min;
  const double b = log_space ? std::log(x_max) : x_max;
  const double step = (b - a) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    const double t = a + static_cast<double>(k) * step;
    xs[k] = log_space ? std::exp(t) : t;
  }
  xs.front() = x_min;
  xs.back() = x_max;
  return xs;
}

Grid Grid::refined() const {
  Grid g = *this;
  g.points = 2 * points - 1;
  return g;
}

Grid parse_grid(std::string_view spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() < 3 || parts.size() > 4) {
    throw InvalidInput("grid spec must be xmin,xmax,points[,log|linear]");
  }
  Grid g;
  try {
    g.x_min = std::stod(parts[0]);
    g.x_max = std::stod(parts[1]);
    const long n = std::stol(parts[2]);
    if (n < 2) throw InvalidInput("grid: need at least 2 points");
    g.points = static_cast<std::size_t>(n);
  } catch (const std::logic_error&) {
    throw InvalidInput("grid spec '" + std::string(spec) + "' is not numeric");
  }
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.spacing = Spacing::kLogarithmic;
    } else if (parts[3] == "linear") {
      g.spacing = Spacing::kLinear;
    } else {
      throw InvalidInput("grid spacing must be log or linear");
    }
  }
  g.validate();
  return g;
}

OrderVerdict check_st(const FiniteMixture& m1, const FiniteMixture& m2,
                      const Grid& grid) {
  return pointwise_check(
      OrderKind::kSt, grid,
      [&](double x) {
        return RatioTerms{mixture_sf(x, m1), mixture_sf(x, m2)};
      },
      "S1 exceeds S2");
}

OrderVerdict check_rh(const FiniteMixture& m1, const FiniteMixture& m2,
                      const Grid& grid) {
  auto by_ratio = monotone_ratio_check(
      OrderKind::kRh, grid,
      [&](double x) {
        return RatioTerms{mixture_cdf(x, m2), mixture_cdf(x, m1)};
      },
      +1);
  const auto by_rate = pointwise_check(
      OrderKind::kRh, grid,
      [&](double x) { return reversed_hazards(x, m1, m2); },
      "r1 exceeds r2");

  const auto combined_skips = std::max(by_ratio.skipped, by_rate.skipped);
  if (by_ratio.status == by_rate.status) {
    by_ratio.skipped = combined_skips;
    return by_ratio;
  }
  OrderVerdict v = by_ratio.status == VerdictStatus::kViolated ? by_ratio
                                                               : by_rate;
  if (by_ratio.status == VerdictStatus::kInconclusive ||
      by_rate.status == VerdictStatus::kInconclusive) {
    v.status = VerdictStatus::kInconclusive;
    v.reason = "underflow: " + (by_ratio.status == VerdictStatus::kInconclusive
                                    ? by_ratio.reason
                                    : by_rate.reason);
  } else {
    v.status = VerdictStatus::kInconclusive;
    v.reason = "cdf-ratio criterion says " +
               std::string(to_string(by_ratio.status)) +
               " but pointwise reversed-hazard criterion says " +
               std::string(to_string(by_rate.status));
  }
  v.skipped = combined_skips;
  return v;
}

OrderVerdict check_lr(const FiniteMixture& m1, const FiniteMixture& m2,
                      const Grid& grid) {
  return monotone_ratio_check(
      OrderKind::kLr, grid,
      [&](double x) {
        return RatioTerms{mixture_pdf(x, m2).value, mixture_pdf(x, m1).value};
      },
      +1);
}

OrderVerdict check_r_rh(const FiniteMixture& m1, const FiniteMixture& m2,
                        const Grid& grid) {
  return monotone_ratio_check(
      OrderKind::kRRh, grid,
      [&](double x) { return reversed_hazards(x, m1, m2); }, -1);
}

OrderVerdict check_order(OrderKind kind, const FiniteMixture& m1,
                         const FiniteMixture& m2, const Grid& grid) {
  switch (kind) {
    case OrderKind::kSt: return check_st(m1, m2, grid);
    case OrderKind::kRh: return check_rh(m1, m2, grid);
    case OrderKind::kLr: return check_lr(m1, m2, grid);
    case OrderKind::kRRh: return check_r_rh(m1, m2, grid);
  }
  throw InvalidInput("unknown order kind");
}

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kSfDiff: return "sfdiff";
    case CurveKind::kCdfRatio: return "cdfratio";
    case CurveKind::kPdfRatio: return "pdfratio";
    case CurveKind::kRhRatio: return "rhratio";
  }
  return "?";
}

CurveKind parse_curve_kind(std::string_view text) {
  if (text == "sfdiff" || text == "sf") return CurveKind::kSfDiff;
  if (text == "cdfratio" || text == "cdf_ratio") return CurveKind::kCdfRatio;
  if (text == "pdfratio" || text == "pdf_ratio") return CurveKind::kPdfRatio;
  if (text == "rhratio" || text == "rh_ratio") return CurveKind::kRhRatio;
  throw InvalidInput("unknown curve '" + std::string(text) + "'");
}

std::vector<CurvePoint> difference_curve(const FiniteMixture& m1,
                                         const FiniteMixture& m2,
                                         const Grid& grid, CurveKind which) {
  std::vector<CurvePoint> out;
  for (double x : grid.nodes()) {
    RatioTerms t;
    switch (which) {
      case CurveKind::kSfDiff:
        out.push_back({x, mixture_sf(x, m1) - mixture_sf(x, m2), true});
        continue;
      case CurveKind::kCdfRatio:
        t = {mixture_cdf(x, m1), mixture_cdf(x, m2)};
        break;
      case CurveKind::kPdfRatio:
        t = {mixture_pdf(x, m1).value, mixture_pdf(x, m2).value};
        break;
      case CurveKind::kRhRatio:
        t = reversed_hazards(x, m1, m2);
        break;
    }
    const auto r = ratio_of(t);
    out.push_back({x, r.value_or(std::numeric_limits<double>::quiet_NaN()),
                   r.has_value()});
  }
  return out;
}

std::vector<CurvePoint> survival_curve(const FiniteMixture& m,
                                       const Grid& grid) {
  std::vector<CurvePoint> out;
  for (double x : grid.nodes()) out.push_back({x, mixture_sf(x, m), true});
  return out;
}

void write_curve_csv(std::ostream& os, std::span<const CurvePoint> curve) {
  os << "x,value,defined\n";
  char buf[96];
  for (const auto& p : curve) {
    if (p.defined) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,1\n", p.x, p.value);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g,nan,0\n", p.x);
    }
    os << buf;
  }
}

}  // namespace ikmix
