#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Closed-form derivative expressions from the proofs, evaluated directly and
// checked against finite differences. Notation: s = (1+x)^-alpha,
// u = 1 - s, L = log(1+x), eta = 1 - u^beta.
namespace ikmix {

/// (p1-p2)(eta(a1) - eta(a2)) + beta L (a1-a2)(p2 s2 u2^(beta-1)
/// - p1 s1 u1^(beta-1)). Nonnegative when (p, alpha) is in L_2, beta < 1.
double delta1(std::span<const double> p, std::span<const double> alpha,
              double beta, double x);

/// (p1-p2)(eta(b1) - eta(b2)) + (b1-b2) log u (p2 u^b2 - p1 u^b1).
/// Nonpositive when (p, beta) is in L_2.
double delta2(std::span<const double> p, std::span<const double> beta,
              double alpha, double x);

/// f1' F1 f2 F2 + f1 F1 f2^2 - f1^2 f2 F2 - f1 F1 f2' F2 for the common-alpha
/// pair (beta; p) and (beta*; p*), evaluated as the quadruple sum over
/// (i,j,k,l). Same sign as d/dx (r1/r2).
double xi_310(std::span<const double> p, std::span<const double> beta,
              std::span<const double> p_star,
              std::span<const double> beta_star, double alpha, double x);

/// F1' F2 - F1 F2' as the double sum over (i,j). Same sign as d/dx (F1/F2).
double xi_311(std::span<const double> p, std::span<const double> alpha,
              std::span<const double> beta, std::span<const double> p_star,
              std::span<const double> alpha_star,
              std::span<const double> beta_star, double x);

/// f1' f2 - f1 f2'. Same sign as d/dx (f1/f2).
double xi_312_prime(std::span<const double> p, std::span<const double> alpha,
                    std::span<const double> beta,
                    std::span<const double> p_star,
                    std::span<const double> alpha_star,
                    std::span<const double> beta_star, double x);

/// Survival difference S(p*) - S(p) for the fixed three-component set
/// p = (0.2,0.6,0.2), p* = (0.2,0.5,0.3), beta = (5.2,15.8,5.6), alpha = 1.
double k1(double x);

enum class OracleId { kDelta1, kDelta2, kXi310, kXi311, kXi312Prime };

std::string_view to_string(OracleId id);
OracleId parse_oracle_id(std::string_view text);

/// Inputs for any oracle. A length-1 shape vector stands for the scalar the
/// oracle expects (beta for delta1, alpha for delta2 and xi_310).
struct OracleArgs {
  std::vector<double> p;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> p_star;
  std::vector<double> alpha_star;
  std::vector<double> beta_star;
};

double evaluate(OracleId id, const OracleArgs& args, double x);

/// The same quantity from central differences of mixture functions (or of
/// the parameter partials, for the deltas), step x * eps^(1/3).
double finite_difference(OracleId id, const OracleArgs& args, double x);

/// Magnitude below which a sign is treated as indeterminate.
inline constexpr double kSignFloor = 1e-8;
inline constexpr double kSignTol = 1e-12;

struct SignReport {
  OracleId id;
  std::vector<double> xs;
  std::vector<double> analytic;
  std::vector<double> numeric;
  double min_value = 0.0;
  double max_value = 0.0;
  /// min and max share a sign, or one of them is within 1e-12 of zero.
  bool sign_constant = true;
  /// Largest |a - n| / max(|a|, |n|) over points where both exceed 1e-8.
  double fd_agreement = 0.0;
  /// Points where both exceed 1e-8 in magnitude and the signs differ.
  std::size_t sign_mismatches = 0;
};

SignReport sign_sweep(OracleId id, const OracleArgs& args,
                      std::span<const double> xs);

}  // namespace ikmix
