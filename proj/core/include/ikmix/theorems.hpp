#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ikmix/majorization.hpp"
#include "ikmix/mixture.hpp"
#include "ikmix/ordercheck.hpp"

namespace ikmix {

enum class TheoremId {
  kT3_1, kT3_2, kT3_3, kT3_4, kT3_5, kT3_6, kT3_7, kT3_8, kT3_9, kT3_10,
  kT3_11, kT3_12, kC3_1, kC3_2, kC3_3
};

/// "T3.1" ... "T3.12", "C3.1" ... "C3.3".
std::string_view to_string(TheoremId id);
TheoremId parse_theorem_id(std::string_view text);

struct Hypothesis {
  std::string name;
  bool held = false;
  std::string detail;
};

/// The conclusion a theorem draws: smaller <=_kind larger.
struct OrderClaim {
  OrderKind kind;
  FiniteMixture smaller;
  FiniteMixture larger;
  std::string statement;
};

/// Hypotheses are sufficient conditions only. When one fails the report
/// says nothing about the order; claim is still filled in so callers can
/// check the conclusion numerically anyway (that is what counterexamples do).
struct ConditionReport {
  TheoremId id;
  std::vector<Hypothesis> hypotheses;
  bool all_held = false;
  OrderClaim claim;

  /// The claim, only when every hypothesis holds.
  std::optional<OrderClaim> predicted_order() const;
};

/// Slack for the max/min comparisons between parameter sets.
inline constexpr double kHypothesisTol = 1e-12;

// Heterogeneous proportions, common alpha vector, scalar beta.
ConditionReport check_theorem_3_1(std::span<const double> alpha, double beta,
                                  std::span<const double> p,
                                  std::span<const double> p_star);
// Heterogeneous proportions, common beta vector, scalar alpha.
ConditionReport check_theorem_3_2(std::span<const double> beta, double alpha,
                                  std::span<const double> p,
                                  std::span<const double> p_star);
ConditionReport check_theorem_3_3(std::span<const double> alpha,
                                  std::span<const double> alpha_star,
                                  double beta, std::span<const double> p);

/// Rows of p_mat/q_mat: proportions over alpha. T3.4 when n = 2, else T3.5.
ConditionReport check_theorem_3_4_or_3_5(const ParamMatrix2xN& p_mat,
                                         const ParamMatrix2xN& q_mat,
                                         std::span<const TTransform> ts,
                                         double beta);
/// Q is p_mat times the chain; every partial product before the last must
/// stay in L_n.
ConditionReport check_theorem_3_6(const ParamMatrix2xN& p_mat,
                                  std::span<const TTransform> ts, double beta);

enum class ChainVariant { kCommonStructure, kDifferentStructure };

/// Rows: proportions over beta. kCommonStructure gives T3.7 (n = 2) or T3.8;
/// kDifferentStructure gives T3.9 with the intermediate memberships.
ConditionReport check_theorem_3_7_to_3_9(const ParamMatrix2xN& p_mat,
                                         const ParamMatrix2xN& q_mat,
                                         std::span<const TTransform> ts,
                                         double alpha, ChainVariant variant);

ConditionReport check_theorem_3_10(std::span<const double> beta,
                                   std::span<const double> beta_star,
                                   double alpha, std::span<const double> p,
                                   std::span<const double> p_star);

ConditionReport check_theorem_3_11(std::span<const double> alpha,
                                   std::span<const double> beta,
                                   std::span<const double> alpha_star,
                                   std::span<const double> beta_star,
                                   std::span<const double> p,
                                   std::span<const double> p_star);

ConditionReport check_theorem_3_12(std::span<const double> alpha,
                                   std::span<const double> beta,
                                   std::span<const double> alpha_star,
                                   std::span<const double> beta_star,
                                   std::span<const double> p,
                                   std::span<const double> p_star);

/// As T3.1 with p majorizing p* in place of weak submajorization.
ConditionReport check_corollary_3_1(std::span<const double> alpha,
                                    double beta, std::span<const double> p,
                                    std::span<const double> p_star);
/// As T3.5 with every T-transform acting on the same coordinate pair.
ConditionReport check_corollary_3_2(const ParamMatrix2xN& p_mat,
                                    const ParamMatrix2xN& q_mat,
                                    std::span<const TTransform> ts,
                                    double beta);
/// As T3.8 with every T-transform acting on the same coordinate pair.
ConditionReport check_corollary_3_3(const ParamMatrix2xN& p_mat,
                                    const ParamMatrix2xN& q_mat,
                                    std::span<const TTransform> ts,
                                    double alpha);

enum class PredictionStatus {
  kConsistent,
  kContradiction,
  kNotApplicable,
  kInconclusive
};

std::string_view to_string(PredictionStatus status);

struct PredictionOutcome {
  PredictionStatus status = PredictionStatus::kNotApplicable;
  std::optional<OrderVerdict> verdict;
};

/// Runs the claimed order check on the grid. Not applicable unless every
/// hypothesis held.
PredictionOutcome verify_prediction(const ConditionReport& report,
                                    const Grid& grid);

/// The grid verdict for the claim regardless of the hypotheses.
OrderVerdict check_claim(const OrderClaim& claim, const Grid& grid);

}  // namespace ikmix
