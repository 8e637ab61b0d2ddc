#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ikmix/ikdist.hpp"
#include "ikmix/majorization.hpp"

namespace ikmix {

/// Finite mixture of IK components with survival function
///   S(x) = sum_i p_i [1 - (1 - (1+x)^-alpha_i)^beta_i].
/// Immutable once built. Weights are renormalized to sum to one; raw sums
/// further than 1e-6 from one are rejected.
class FiniteMixture {
 public:
  FiniteMixture(std::vector<double> weights, std::vector<IKParams> components);

  static FiniteMixture single(const IKParams& params);

  /// Per-component shapes; alpha and beta must have the weights' length.
  static FiniteMixture from_vectors(std::vector<double> weights,
                                    std::span<const double> alpha,
                                    std::span<const double> beta);

  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<IKParams>& components() const { return components_; }

  std::vector<double> alphas() const;
  std::vector<double> betas() const;

 private:
  std::vector<double> weights_;
  std::vector<IKParams> components_;
};

double mixture_sf(double x, const FiniteMixture& m);
double mixture_cdf(double x, const FiniteMixture& m);

/// Weighted component densities. boundary_infinite when x = 0 and some
/// component has beta < 1.
Density mixture_pdf(double x, const FiniteMixture& m);

/// mixture_pdf / mixture_cdf for x > 0.
double mixture_reversed_hazard(double x, const FiniteMixture& m);

/// Which shape a ParamMatrix2xN's second row carries.
enum class ShapeRow { kAlpha, kBeta };

/// Row 1 of pm is the weight row. With ShapeRow::kAlpha the second row holds
/// alpha_i and every component shares beta = fixed_shape; kBeta swaps roles.
FiniteMixture mixture_from_matrix(const ParamMatrix2xN& pm, ShapeRow row,
                                  double fixed_shape);

std::string describe(const FiniteMixture& m);

}  // namespace ikmix
