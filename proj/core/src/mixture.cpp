#include "ikmix/mixture.hpp"

#include <cmath>
#include <sstream>

#include "ikmix/errors.hpp"

namespace ikmix {
namespace {

constexpr double kWeightSumTol = 1e-6;

// Neumaier summation, always in index order so results are reproducible.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

void require_support(double x, const char* fn) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(fn) + ": x must be finite and >= 0");
  }
}

}  // namespace

FiniteMixture::FiniteMixture(std::vector<double> weights,
                             std::vector<IKParams> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
  if (weights_.empty() || weights_.size() != components_.size()) {
    throw InvalidInput("FiniteMixture: need n >= 1 weights and as many "
                       "components");
  }
  CompensatedSum total;
  for (double w : weights_) {
    if (!std::isfinite(w) || w <= 0.0) {
      throw InvalidInput("FiniteMixture: weights must be finite and > 0");
    }
    total.add(w);
  }
  const double s = total.value();
  if (std::abs(s - 1.0) > kWeightSumTol) {
    std::ostringstream os;
    os << "FiniteMixture: weights sum to " << s << ", expected 1";
    throw InvalidInput(os.str());
  }
  if (s != 1.0) {
    for (double& w : weights_) w /= s;
  }
}

FiniteMixture FiniteMixture::single(const IKParams& params) {
  return FiniteMixture({1.0}, {params});
}

FiniteMixture FiniteMixture::from_vectors(std::vector<double> weights,
                                          std::span<const double> alpha,
                                          std::span<const double> beta) {
  if (alpha.size() != weights.size() || beta.size() != weights.size()) {
    throw InvalidInput("FiniteMixture: weights, alpha and beta lengths differ");
  }
  std::vector<IKParams> comps;
  comps.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    comps.emplace_back(alpha[i], beta[i]);
  }
  return FiniteMixture(std::move(weights), std::move(comps));
}

std::vector<double> FiniteMixture::alphas() const {
  std::vector<double> out;
  for (const auto& c : components_) out.push_back(c.alpha());
  return out;
}

std::vector<double> FiniteMixture::betas() const {
  std::vector<double> out;
  for (const auto& c : components_) out.push_back(c.beta());
  return out;
}

double mixture_sf(double x, const FiniteMixture& m) {
  require_support(x, "mixture_sf");
  CompensatedSum s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s.add(m.weights()[i] * ik_sf(x, m.components()[i]));
  }
  return s.value();
}

double mixture_cdf(double x, const FiniteMixture& m) {
  require_support(x, "mixture_cdf");
  CompensatedSum s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s.add(m.weights()[i] * ik_cdf(x, m.components()[i]));
  }
  return s.value();
}

Density mixture_pdf(double x, const FiniteMixture& m) {
  require_support(x, "mixture_pdf");
  CompensatedSum s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Density d = ik_pdf(x, m.components()[i]);
    if (d.boundary_infinite) return d;
    s.add(m.weights()[i] * d.value);
  }
  return {s.value(), false};
}

double mixture_reversed_hazard(double x, const FiniteMixture& m) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("mixture_reversed_hazard: x must be finite and > 0");
  }
  return mixture_pdf(x, m).value / mixture_cdf(x, m);
}

FiniteMixture mixture_from_matrix(const ParamMatrix2xN& pm, ShapeRow row,
                                  double fixed_shape) {
  std::vector<IKParams> comps;
  comps.reserve(pm.size());
  for (double shape : pm.row2()) {
    comps.push_back(row == ShapeRow::kAlpha ? IKParams(shape, fixed_shape)
                                            : IKParams(fixed_shape, shape));
  }
  return FiniteMixture(pm.row1(), std::move(comps));
}

std::string describe(const FiniteMixture& m) {
  std::ostringstream os;
  os << "p=(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << m.weights()[i];
  }
  os << ") alpha=(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << m.components()[i].alpha();
  }
  os << ") beta=(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << m.components()[i].beta();
  }
  os << ')';
  return os.str();
}

}  // namespace ikmix
