#pragma once

// Inverted-Kumaraswamy distribution IK(alpha, beta) on (0, inf):
//   F(x) = (1 - (1+x)^-alpha)^beta
//   f(x) = alpha beta (1+x)^(-alpha-1) (1 - (1+x)^-alpha)^(beta-1)
// All evaluations go through log1p/expm1 so that tails and the region near
// the origin keep full relative precision.

namespace ikmix {

class IKParams {
 public:
  /// Throws DomainError unless both shapes are finite and strictly positive.
  IKParams(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  friend bool operator==(const IKParams&, const IKParams&) = default;

 private:
  double alpha_;
  double beta_;
};

/// A density value. At x = 0 with beta < 1 the density diverges; that case is
/// reported as value = +inf with boundary_infinite set, never as an overflow.
struct Density {
  double value = 0.0;
  bool boundary_infinite = false;
};

double ik_cdf(double x, const IKParams& params);
double ik_sf(double x, const IKParams& params);
Density ik_pdf(double x, const IKParams& params);

/// f/F. Undefined at x = 0 (F vanishes), so requires x > 0.
double ik_reversed_hazard(double x, const IKParams& params);

/// Closed-form inverse of ik_cdf for u in (0, 1).
double ik_quantile(double u, const IKParams& params);

namespace detail {

// log(1 - (1+x)^-alpha) given L = log1p(x), accurate for tiny and huge alpha*L.
double log_one_minus_pow(double log1p_x, double alpha);

}  // namespace detail
}  // namespace ikmix
