#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>

#include "ikmix/errors.hpp"

namespace ikmix::testing {

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::vector<double> Rng::proportions(std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& v : w) total += (v = uniform(0.05, 1.0));
  for (auto& v : w) v /= total;
  return w;
}

std::vector<double> Rng::shapes(std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& e : v) e = log_uniform(lo, hi);
  return v;
}

FiniteMixture random_mixture(Rng& rng, std::size_t n) {
  return FiniteMixture::from_vectors(rng.proportions(n), rng.shapes(n, 0.2, 8),
                                     rng.shapes(n, 0.2, 8));
}

std::vector<double> sorted(std::vector<double> v, bool ascending) {
  if (ascending) {
    std::sort(v.begin(), v.end());
  } else {
    std::sort(v.begin(), v.end(), std::greater<>());
  }
  return v;
}

ParamMatrix2xN random_script_l(Rng& rng, std::size_t n, double lo, double hi) {
  return ParamMatrix2xN(sorted(rng.proportions(n), true),
                        sorted(rng.shapes(n, lo, hi), false));
}

std::vector<double> average_adjacent(Rng& rng, std::vector<double> v,
                                     int steps) {
  if (v.size() < 2) return v;
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = rng.index(v.size() - 1);
    const double w = rng.uniform(0.5, 1.0);
    const double a = v[i];
    const double b = v[i + 1];
    v[i] = w * a + (1 - w) * b;
    v[i + 1] = (1 - w) * a + w * b;
  }
  return v;
}

ConditionReport random_satisfying_instance(TheoremId id, Rng& rng,
                                           std::size_t n) {
  using Vec = std::vector<double>;
  // Descending weights pair with ascending shapes for L_n membership.
  const Vec p = sorted(rng.proportions(n), false);
  const Vec p_star = average_adjacent(rng, p, 3);
  switch (id) {
    case TheoremId::kT3_1:
    case TheoremId::kC3_1: {
      const Vec alpha = sorted(rng.shapes(n, 0.2, 8), true);
      const double beta = rng.log_uniform(0.2, 8);
      return id == TheoremId::kT3_1
                 ? check_theorem_3_1(alpha, beta, p, p_star)
                 : check_corollary_3_1(alpha, beta, p, p_star);
    }
    case TheoremId::kT3_2: {
      const Vec beta = sorted(rng.shapes(n, 0.2, 8), true);
      return check_theorem_3_2(beta, rng.log_uniform(0.2, 8), p, p_star);
    }
    case TheoremId::kT3_3: {
      const Vec alpha = sorted(rng.shapes(n, 0.2, 6), true);
      // Averaging, then adding ascending increments, raises every ascending
      // prefix sum while keeping the order.
      Vec alpha_star = average_adjacent(rng, alpha, 3);
      double bump = 0.0;
      for (auto& a : alpha_star) a += (bump += rng.uniform(0.0, 0.3));
      return check_theorem_3_3(alpha, alpha_star, rng.uniform(0.05, 0.95), p);
    }
    case TheoremId::kT3_10: {
      const double gap = rng.uniform(0.05, 1.0);
      const double base = rng.log_uniform(0.1, 3);
      Vec beta(n);
      for (auto& b : beta) b = base + gap * rng.unit();
      Vec beta_star(n);
      double b = rng.log_uniform(0.1, 3);
      for (auto& s : beta_star) {
        s = b;
        b += gap * rng.uniform(1.0, 3.0);
      }
      return check_theorem_3_10(beta, beta_star, rng.log_uniform(0.2, 5),
                                rng.proportions(n), rng.proportions(n));
    }
    case TheoremId::kT3_11: {
      const Vec alpha_star = rng.shapes(n, 0.3, 3);
      const double top = *std::max_element(alpha_star.begin(), alpha_star.end());
      Vec alpha(n);
      for (auto& a : alpha) a = top * rng.uniform(1.0, 3.0);
      const double c = rng.log_uniform(0.5, 20);
      Vec beta(n), beta_star(n);
      for (std::size_t i = 0; i < n; ++i) {
        beta[i] = c / alpha[i] * rng.uniform(0.3, 1.0);
        beta_star[i] = c / alpha_star[i] * rng.uniform(1.0, 3.0);
      }
      return check_theorem_3_11(alpha, beta, alpha_star, beta_star,
                                rng.proportions(n), rng.proportions(n));
    }
    case TheoremId::kT3_12: {
      const Vec alpha = rng.shapes(n, 0.3, 3);
      const double top = *std::max_element(alpha.begin(), alpha.end());
      Vec alpha_star(n);
      for (auto& a : alpha_star) a = top * rng.uniform(1.0, 3.0);
      const double c = rng.log_uniform(0.5, 20);
      Vec beta(n), beta_star(n);
      for (std::size_t i = 0; i < n; ++i) {
        beta[i] = c / alpha[i] * rng.uniform(1.0, 3.0);
        beta_star[i] = c / alpha_star[i] * rng.uniform(0.3, 1.0);
      }
      return check_theorem_3_12(alpha, beta, alpha_star, beta_star,
                                rng.proportions(n), rng.proportions(n));
    }
    default:
      throw InvalidInput("no generator for " + std::string(to_string(id)));
  }
}

std::string explain_implication_exception(const FiniteMixture& m1,
                                          const FiniteMixture& m2,
                                          OrderKind stronger,
                                          const OrderVerdict& weaker) {
  const Grid wide{1e-8, 1e8, 8000};
  if (check_order(stronger, m1, m2, wide).status == VerdictStatus::kViolated) {
    return "range";
  }
  if (weaker.witness && std::abs(weaker.witness->lhs - weaker.witness->rhs) < 1e-11) {
    return "resolution";
  }
  return {};
}

double mass_by_quantile_substitution(const IKParams& p, int cells) {
  const double a = p.alpha();
  const double b = p.beta();
  double total = 0.0;
  for (int k = 0; k < cells; ++k) {
    const double u = (k + 0.5) / cells;
    const double log_v = std::log(u) / b;  // v = u^(1/beta)
    // Q'(u) = u^(1/beta - 1) (1 - v)^(-1/alpha - 1) / (alpha beta)
    const double log_dq = (1.0 / b - 1.0) * std::log(u) -
                          (1.0 / a + 1.0) * std::log(-std::expm1(log_v)) -
                          std::log(a * b);
    total += ik_pdf(ik_quantile(u, p), p).value * std::exp(log_dq);
  }
  return total / cells;
}

const FixtureCatalog& catalog() {
  static const FixtureCatalog cat =
      load_catalog(std::filesystem::path(IKMIX_DATA_DIR) / "fixtures");
  return cat;
}

ConditionReport fixture_report(const std::string& id) {
  const auto& f = catalog().find(id);
  return run_checker(f.theorem, f.inputs);
}

}  // namespace ikmix::testing
