#include "ikmix/ikdist.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ikmix/errors.hpp"

namespace ikmix {
namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require_support(double x, const char* fn) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(fn) + ": x must be finite and >= 0, got " +
                      std::to_string(x));
  }
}

// log(1 - exp(-t)) for t >= 0.
double log1mexp(double t) {
  if (t > kLn2) return std::log1p(-std::exp(-t));
  return std::log(-std::expm1(-t));
}

}  // namespace

IKParams::IKParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha <= 0.0 ||
      beta <= 0.0) {
    throw DomainError("IK shapes must be finite and > 0 (alpha=" +
                      std::to_string(alpha) + ", beta=" +
                      std::to_string(beta) + ")");
  }
}

namespace detail {

double log_one_minus_pow(double log1p_x, double alpha) {
  return log1mexp(alpha * log1p_x);
}

}  // namespace detail

double ik_cdf(double x, const IKParams& params) {
  require_support(x, "ik_cdf");
  if (x == 0.0) return 0.0;
  const double log_u = detail::log_one_minus_pow(std::log1p(x), params.alpha());
  return std::exp(params.beta() * log_u);
}

double ik_sf(double x, const IKParams& params) {
  require_support(x, "ik_sf");
  if (x == 0.0) return 1.0;
  const double log_u = detail::log_one_minus_pow(std::log1p(x), params.alpha());
  return -std::expm1(params.beta() * log_u);
}

Density ik_pdf(double x, const IKParams& params) {
  require_support(x, "ik_pdf");
  const double a = params.alpha();
  const double b = params.beta();
  if (x == 0.0) {
    if (b < 1.0) {
      return {std::numeric_limits<double>::infinity(), true};
    }
    return {b == 1.0 ? a * b : 0.0, false};
  }
  const double l = std::log1p(x);
  const double log_u = detail::log_one_minus_pow(l, a);
  return {a * b * std::exp(-(a + 1.0) * l + (b - 1.0) * log_u), false};
}

double ik_reversed_hazard(double x, const IKParams& params) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("ik_reversed_hazard: x must be finite and > 0");
  }
  const double a = params.alpha();
  const double l = std::log1p(x);
  const double log_u = detail::log_one_minus_pow(l, a);
  return a * params.beta() * std::exp(-(a + 1.0) * l - log_u);
}

double ik_quantile(double u, const IKParams& params) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("ik_quantile: u must lie in (0, 1)");
  }
  // t = u^(1/beta); x = (1 - t)^(-1/alpha) - 1
  const double log_t = std::log(u) / params.beta();
  const double log_one_minus_t = log1mexp(-log_t);
  return std::expm1(-log_one_minus_t / params.alpha());
}

}  // namespace ikmix
