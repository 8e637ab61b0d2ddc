#include "ikmix/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "ikmix/errors.hpp"
#include "ikmix/ikdist.hpp"
#include "ikmix/mixture.hpp"

namespace ikmix {
namespace {

// Pieces of one component at x.
struct Parts {
  double log1p_x;  // L
  double s;        // (1+x)^-a
  double u;        // 1 - s
  double log_u;
};

Parts parts(double x, double a) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x must be > 0");
  const double L = std::log1p(x);
  const double log_u = detail::log_one_minus_pow(L, a);
  return {L, std::exp(-a * L), std::exp(log_u), log_u};
}

// Component density without the weight, and its x-derivative.
double dens(const Parts& c, double a, double b) {
  return a * b * std::exp(-(a + 1.0) * c.log1p_x + (b - 1.0) * c.log_u);
}

double dens_prime(const Parts& c, double a, double b) {
  const double t1 = a * (b - 1.0) *
                    std::exp(-2.0 * (a + 1.0) * c.log1p_x + (b - 2.0) * c.log_u);
  const double t2 =
      (a + 1.0) * std::exp(-(a + 2.0) * c.log1p_x + (b - 1.0) * c.log_u);
  return a * b * (t1 - t2);
}

void require_n(std::span<const double> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(n) +
                       " entries");
  }
}

std::vector<double> expand(const std::vector<double>& v, std::size_t n) {
  if (v.size() == 1 && n > 1) return std::vector<double>(n, v[0]);
  return v;
}

double scalar(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw InvalidInput(std::string(what) + " is missing");
  return v[0];
}

double fd_step(double at) {
  return std::abs(at) * std::cbrt(std::numeric_limits<double>::epsilon());
}

double central(const std::function<double(double)>& g, double at) {
  const double h = fd_step(at);
  return (g(at + h) - g(at - h)) / (2.0 * h);
}

// Partial derivative of g with respect to coordinate k of theta.
double partial(const std::function<double(const std::array<double, 4>&)>& g,
               std::array<double, 4> theta, std::size_t k) {
  const double h = fd_step(theta[k]);
  auto up = theta;
  auto down = theta;
  up[k] += h;
  down[k] -= h;
  return (g(up) - g(down)) / (2.0 * h);
}

double eta(double x, double a, double b) { return ik_sf(x, IKParams(a, b)); }

FiniteMixture build(const std::vector<double>& p, const std::vector<double>& a,
                    const std::vector<double>& b) {
  const auto n = p.size();
  return FiniteMixture::from_vectors(p, expand(a, n), expand(b, n));
}

}  // namespace

double delta1(std::span<const double> p, std::span<const double> alpha,
              double beta, double x) {
  require_n(p, 2, "delta1 p");
  require_n(alpha, 2, "delta1 alpha");
  const Parts c1 = parts(x, alpha[0]);
  const Parts c2 = parts(x, alpha[1]);
  const double zeta1 = c1.s * std::exp((beta - 1.0) * c1.log_u);
  const double zeta2 = c2.s * std::exp((beta - 1.0) * c2.log_u);
  return (p[0] - p[1]) * (eta(x, alpha[0], beta) - eta(x, alpha[1], beta)) +
         beta * c1.log1p_x * (alpha[0] - alpha[1]) *
             (p[1] * zeta2 - p[0] * zeta1);
}

double delta2(std::span<const double> p, std::span<const double> beta,
              double alpha, double x) {
  require_n(p, 2, "delta2 p");
  require_n(beta, 2, "delta2 beta");
  const Parts c = parts(x, alpha);
  return (p[0] - p[1]) * (eta(x, alpha, beta[0]) - eta(x, alpha, beta[1])) +
         (beta[0] - beta[1]) * c.log_u *
             (p[1] * std::exp(beta[1] * c.log_u) -
              p[0] * std::exp(beta[0] * c.log_u));
}

double xi_310(std::span<const double> p, std::span<const double> beta,
              std::span<const double> p_star,
              std::span<const double> beta_star, double alpha, double x) {
  const auto n = p.size();
  require_n(beta, n, "xi_310 beta");
  require_n(p_star, n, "xi_310 p*");
  require_n(beta_star, n, "xi_310 beta*");
  const Parts c = parts(x, alpha);
  const double lead_log = -(2.0 * alpha + 3.0) * c.log1p_x;
  const double kernel_scale = alpha * c.s / c.u;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const double kernel =
              kernel_scale * (beta[i] - beta[j] + beta_star[l] - beta_star[k]);
          const double expo =
              beta[i] + beta[j] + beta_star[k] + beta_star[l] - 2.0;
          sum += p[i] * p[j] * p_star[k] * p_star[l] * alpha * alpha *
                 beta[i] * beta_star[k] *
                 std::exp(lead_log + expo * c.log_u) * kernel;
        }
      }
    }
  }
  return sum;
}

double xi_311(std::span<const double> p, std::span<const double> alpha,
              std::span<const double> beta, std::span<const double> p_star,
              std::span<const double> alpha_star,
              std::span<const double> beta_star, double x) {
  const auto n = p.size();
  require_n(alpha, n, "xi_311 alpha");
  require_n(beta, n, "xi_311 beta");
  const auto m = p_star.size();
  require_n(alpha_star, m, "xi_311 alpha*");
  require_n(beta_star, m, "xi_311 beta*");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Parts ci = parts(x, alpha[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const Parts cj = parts(x, alpha_star[j]);
      const double lead = std::exp((beta[i] - 1.0) * ci.log_u +
                                   (beta_star[j] - 1.0) * cj.log_u);
      const double a = alpha[i] * beta[i] *
                       std::exp(-(alpha[i] + 1.0) * ci.log1p_x) * cj.u;
      const double b = alpha_star[j] * beta_star[j] *
                       std::exp(-(alpha_star[j] + 1.0) * cj.log1p_x) * ci.u;
      sum += p[i] * p_star[j] * lead * (a - b);
    }
  }
  return sum;
}

double xi_312_prime(std::span<const double> p, std::span<const double> alpha,
                    std::span<const double> beta,
                    std::span<const double> p_star,
                    std::span<const double> alpha_star,
                    std::span<const double> beta_star, double x) {
  const auto n = p.size();
  require_n(alpha, n, "xi_312' alpha");
  require_n(beta, n, "xi_312' beta");
  const auto m = p_star.size();
  require_n(alpha_star, m, "xi_312' alpha*");
  require_n(beta_star, m, "xi_312' beta*");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Parts ci = parts(x, alpha[i]);
    const double fi = dens(ci, alpha[i], beta[i]);
    const double dfi = dens_prime(ci, alpha[i], beta[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const Parts cj = parts(x, alpha_star[j]);
      const double fj = dens(cj, alpha_star[j], beta_star[j]);
      const double dfj = dens_prime(cj, alpha_star[j], beta_star[j]);
      sum += p[i] * p_star[j] * (dfi * fj - fi * dfj);
    }
  }
  return sum;
}

double k1(double x) {
  static constexpr std::array<double, 3> kP{0.2, 0.6, 0.2};
  static constexpr std::array<double, 3> kPStar{0.2, 0.5, 0.3};
  static constexpr std::array<double, 3> kBeta{5.2, 15.8, 5.6};
  double star = 0.0;
  double plain = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double sf = ik_sf(x, IKParams(1.0, kBeta[i]));
    star += kPStar[i] * sf;
    plain += kP[i] * sf;
  }
  return star - plain;
}

std::string_view to_string(OracleId id) {
  switch (id) {
    case OracleId::kDelta1: return "delta1";
    case OracleId::kDelta2: return "delta2";
    case OracleId::kXi310: return "xi_310";
    case OracleId::kXi311: return "xi_311";
    case OracleId::kXi312Prime: return "xi_312_prime";
  }
  return "?";
}

OracleId parse_oracle_id(std::string_view text) {
  for (auto id : {OracleId::kDelta1, OracleId::kDelta2, OracleId::kXi310,
                  OracleId::kXi311, OracleId::kXi312Prime}) {
    if (to_string(id) == text) return id;
  }
  throw InvalidInput("unknown oracle '" + std::string(text) + "'");
}

double evaluate(OracleId id, const OracleArgs& a, double x) {
  switch (id) {
    case OracleId::kDelta1:
      return delta1(a.p, a.alpha, scalar(a.beta, "beta"), x);
    case OracleId::kDelta2:
      return delta2(a.p, a.beta, scalar(a.alpha, "alpha"), x);
    case OracleId::kXi310:
      return xi_310(a.p, a.beta, a.p_star, a.beta_star,
                    scalar(a.alpha, "alpha"), x);
    case OracleId::kXi311:
      return xi_311(a.p, expand(a.alpha, a.p.size()),
                    expand(a.beta, a.p.size()), a.p_star,
                    expand(a.alpha_star, a.p_star.size()),
                    expand(a.beta_star, a.p_star.size()), x);
    case OracleId::kXi312Prime:
      return xi_312_prime(a.p, expand(a.alpha, a.p.size()),
                          expand(a.beta, a.p.size()), a.p_star,
                          expand(a.alpha_star, a.p_star.size()),
                          expand(a.beta_star, a.p_star.size()), x);
  }
  throw InvalidInput("unknown oracle");
}

double finite_difference(OracleId id, const OracleArgs& a, double x) {
  switch (id) {
    case OracleId::kDelta1: {
      require_n(a.p, 2, "delta1 p");
      require_n(a.alpha, 2, "delta1 alpha");
      const double beta = scalar(a.beta, "beta");
      // theta = (p1, p2, alpha1, alpha2)
      const auto sf = [&](const std::array<double, 4>& t) {
        return t[0] * eta(x, t[2], beta) + t[1] * eta(x, t[3], beta);
      };
      const std::array<double, 4> th{a.p[0], a.p[1], a.alpha[0], a.alpha[1]};
      return (th[0] - th[1]) * (partial(sf, th, 0) - partial(sf, th, 1)) +
             (th[2] - th[3]) * (partial(sf, th, 2) - partial(sf, th, 3));
    }
    case OracleId::kDelta2: {
      require_n(a.p, 2, "delta2 p");
      require_n(a.beta, 2, "delta2 beta");
      const double alpha = scalar(a.alpha, "alpha");
      const auto sf = [&](const std::array<double, 4>& t) {
        return t[0] * eta(x, alpha, t[2]) + t[1] * eta(x, alpha, t[3]);
      };
      const std::array<double, 4> th{a.p[0], a.p[1], a.beta[0], a.beta[1]};
      return (th[0] - th[1]) * (partial(sf, th, 0) - partial(sf, th, 1)) +
             (th[2] - th[3]) * (partial(sf, th, 2) - partial(sf, th, 3));
    }
    case OracleId::kXi310: {
      const auto m1 = build(a.p, a.alpha, a.beta);
      const auto m2 = build(a.p_star, a.alpha, a.beta_star);
      const auto ratio = [&](double t) {
        return mixture_reversed_hazard(t, m1) / mixture_reversed_hazard(t, m2);
      };
      const double f2 = mixture_pdf(x, m2).value;
      const double F1 = mixture_cdf(x, m1);
      return central(ratio, x) * f2 * f2 * F1 * F1;
    }
    case OracleId::kXi311: {
      const auto m1 = build(a.p, a.alpha, a.beta);
      const auto m2 = build(a.p_star, a.alpha_star, a.beta_star);
      const auto ratio = [&](double t) {
        return mixture_cdf(t, m1) / mixture_cdf(t, m2);
      };
      const double F2 = mixture_cdf(x, m2);
      return central(ratio, x) * F2 * F2;
    }
    case OracleId::kXi312Prime: {
      const auto m1 = build(a.p, a.alpha, a.beta);
      const auto m2 = build(a.p_star, a.alpha_star, a.beta_star);
      const auto ratio = [&](double t) {
        return mixture_pdf(t, m1).value / mixture_pdf(t, m2).value;
      };
      const double f2 = mixture_pdf(x, m2).value;
      return central(ratio, x) * f2 * f2;
    }
  }
  throw InvalidInput("unknown oracle");
}

SignReport sign_sweep(OracleId id, const OracleArgs& args,
                      std::span<const double> xs) {
  if (xs.empty()) throw InvalidInput("sign sweep needs at least one point");
  SignReport r{id, {xs.begin(), xs.end()}, {}, {}};
  r.min_value = std::numeric_limits<double>::infinity();
  r.max_value = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    const double an = evaluate(id, args, x);
    const double nu = finite_difference(id, args, x);
    r.analytic.push_back(an);
    r.numeric.push_back(nu);
    r.min_value = std::min(r.min_value, an);
    r.max_value = std::max(r.max_value, an);
    if (std::abs(an) > kSignFloor && std::abs(nu) > kSignFloor) {
      r.fd_agreement = std::max(
          r.fd_agreement,
          std::abs(an - nu) / std::max(std::abs(an), std::abs(nu)));
      if ((an > 0) != (nu > 0)) ++r.sign_mismatches;
    }
  }
  r.sign_constant = r.min_value >= -kSignTol || r.max_value <= kSignTol;
  return r;
}

}  // namespace ikmix
