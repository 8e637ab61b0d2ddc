#include "ikmix/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "ikmix/errors.hpp"

namespace ikmix {
namespace {

using Vec = std::vector<double>;

Vec to_vec(std::span<const double> s) { return Vec(s.begin(), s.end()); }

Vec filled(std::size_t n, double v) { return Vec(n, v); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_set(std::span<const double> v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += fmt(v[i]);
  }
  return s + "}";
}

Vec products(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidInput("parameter length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Hypothesis script_l(std::string name, const ParamMatrix2xN& pm) {
  const auto bad = script_l_violations(pm);
  if (bad.empty()) return {std::move(name), true, "rows oppositely ordered"};
  std::string detail = "similarly ordered at columns";
  for (const auto& [i, j] : bad) {
    detail += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  }
  return {std::move(name), false, detail};
}

// max(a) <= min(b), with the sets printed as the paper writes them.
Hypothesis max_le_min(std::string name, std::span<const double> a,
                      std::span<const double> b) {
  const double mx = *std::max_element(a.begin(), a.end());
  const double mn = *std::min_element(b.begin(), b.end());
  const bool held = mx <= mn + kHypothesisTol;
  return {std::move(name), held,
          "max" + fmt_set(a) + (held ? " <= " : " > ") + "min" + fmt_set(b)};
}

Hypothesis beta_in_unit(double beta) {
  const bool held = beta > 0.0 && beta < 1.0;
  return {"beta in (0,1)", held,
          "beta = " + fmt(beta) + (held ? "" : " is outside (0,1)")};
}

Hypothesis vector_relation(std::string name, bool held,
                           std::span<const double> a,
                           std::span<const double> b) {
  return {std::move(name), held,
          fmt_set(a) + " vs " + fmt_set(b) + (held ? ": holds" : ": fails")};
}

std::string omegas(std::span<const TTransform> ts) {
  if (ts.empty()) return "empty chain";
  std::string s;
  for (const auto& t : ts) {
    if (!s.empty()) s += " ";
    s += "T" + fmt(t.omega) + "(" + std::to_string(t.first + 1) + "," +
         std::to_string(t.second + 1) + ")";
  }
  return s;
}

Hypothesis chain(const ParamMatrix2xN& p, const ParamMatrix2xN& q,
                 std::span<const TTransform> ts) {
  const bool held = chain_majorization_verify(p, q, ts);
  return {"P >> Q via chain", held,
          omegas(ts) + (held ? " maps P to Q" : " does not map P to Q")};
}

Hypothesis intermediates(const ParamMatrix2xN& p,
                         std::span<const TTransform> ts) {
  const auto stages = chain_products(p, ts);
  if (stages.size() < 2) {
    return {"intermediate products in L_n", true, "no intermediate products"};
  }
  std::string failing;
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    if (!in_script_l(stages[i])) {
      if (!failing.empty()) failing += ", ";
      failing += "stage " + std::to_string(i + 1);
    }
  }
  if (failing.empty()) {
    return {"intermediate products in L_n", true,
            std::to_string(stages.size() - 1) + " intermediate(s) in L_n"};
  }
  return {"intermediate products in L_n", false, failing + " leaves L_n"};
}

Hypothesis common_structure(std::span<const TTransform> ts) {
  for (const auto& t : ts) {
    const bool same = (t.first == ts[0].first && t.second == ts[0].second) ||
                      (t.first == ts[0].second && t.second == ts[0].first);
    if (!same) {
      return {"common T structure", false, "chain mixes different pairs"};
    }
  }
  return {"common T structure", true,
          ts.empty() ? "empty chain" : "all transforms share one pair"};
}

ConditionReport make_report(TheoremId id, std::vector<Hypothesis> hyps,
                            OrderClaim claim) {
  const bool all = std::all_of(hyps.begin(), hyps.end(),
                               [](const Hypothesis& h) { return h.held; });
  return {id, std::move(hyps), all, std::move(claim)};
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b || a == 0) throw InvalidInput("parameter length mismatch");
}

// Largest and smallest pairwise gap |v_i - v_j| over i != j.
std::pair<double, double> gap_range(std::span<const double> v) {
  double lo = INFINITY;
  double hi = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double g = std::abs(v[i] - v[j]);
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }
  }
  return {hi, lo};
}

ConditionReport alpha_chain_report(TheoremId id, const ParamMatrix2xN& p_mat,
                                   const ParamMatrix2xN& q_mat,
                                   std::vector<Hypothesis> hyps, double beta) {
  auto claim = OrderClaim{
      OrderKind::kSt, mixture_from_matrix(q_mat, ShapeRow::kAlpha, beta),
      mixture_from_matrix(p_mat, ShapeRow::kAlpha, beta),
      "R(alpha*,beta;p*) <=_st R(alpha,beta;p)"};
  return make_report(id, std::move(hyps), std::move(claim));
}

ConditionReport beta_chain_report(TheoremId id, const ParamMatrix2xN& p_mat,
                                  const ParamMatrix2xN& q_mat,
                                  std::vector<Hypothesis> hyps, double alpha) {
  auto claim = OrderClaim{
      OrderKind::kSt, mixture_from_matrix(p_mat, ShapeRow::kBeta, alpha),
      mixture_from_matrix(q_mat, ShapeRow::kBeta, alpha),
      "R(alpha,beta;p) <=_st R(alpha,beta*;p*)"};
  return make_report(id, std::move(hyps), std::move(claim));
}

}  // namespace

std::optional<OrderClaim> ConditionReport::predicted_order() const {
  if (!all_held) return std::nullopt;
  return claim;
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT3_1: return "T3.1";
    case TheoremId::kT3_2: return "T3.2";
    case TheoremId::kT3_3: return "T3.3";
    case TheoremId::kT3_4: return "T3.4";
    case TheoremId::kT3_5: return "T3.5";
    case TheoremId::kT3_6: return "T3.6";
    case TheoremId::kT3_7: return "T3.7";
    case TheoremId::kT3_8: return "T3.8";
    case TheoremId::kT3_9: return "T3.9";
    case TheoremId::kT3_10: return "T3.10";
    case TheoremId::kT3_11: return "T3.11";
    case TheoremId::kT3_12: return "T3.12";
    case TheoremId::kC3_1: return "C3.1";
    case TheoremId::kC3_2: return "C3.2";
    case TheoremId::kC3_3: return "C3.3";
  }
  return "?";
}

TheoremId parse_theorem_id(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(TheoremId::kC3_3); ++i) {
    const auto id = static_cast<TheoremId>(i);
    if (to_string(id) == text) return id;
  }
  throw InvalidInput("unknown theorem id '" + std::string(text) + "'");
}

ConditionReport check_theorem_3_1(std::span<const double> alpha, double beta,
                                  std::span<const double> p,
                                  std::span<const double> p_star) {
  require_same_size(alpha.size(), p.size());
  require_same_size(alpha.size(), p_star.size());
  const auto a = to_vec(alpha);
  std::vector<Hypothesis> hyps{
      {"common beta", beta > 0.0, "beta = " + fmt(beta)},
      script_l("(alpha,p) in L_n", ParamMatrix2xN(to_vec(p), a)),
      script_l("(alpha,p*) in L_n", ParamMatrix2xN(to_vec(p_star), a)),
      vector_relation("p* <=_w p", weak_submajorizes(p, p_star), p_star, p)};
  const auto b = filled(a.size(), beta);
  return make_report(
      TheoremId::kT3_1, std::move(hyps),
      {OrderKind::kSt, FiniteMixture::from_vectors(to_vec(p_star), a, b),
       FiniteMixture::from_vectors(to_vec(p), a, b),
       "R(alpha,beta;p*) <=_st R(alpha,beta;p)"});
}

ConditionReport check_corollary_3_1(std::span<const double> alpha,
                                    double beta, std::span<const double> p,
                                    std::span<const double> p_star) {
  auto r = check_theorem_3_1(alpha, beta, p, p_star);
  r.id = TheoremId::kC3_1;
  r.hypotheses.back() =
      vector_relation("p* <=^m p", majorizes(p, p_star), p_star, p);
  r.all_held = std::all_of(r.hypotheses.begin(), r.hypotheses.end(),
                           [](const Hypothesis& h) { return h.held; });
  return r;
}

ConditionReport check_theorem_3_2(std::span<const double> beta, double alpha,
                                  std::span<const double> p,
                                  std::span<const double> p_star) {
  require_same_size(beta.size(), p.size());
  require_same_size(beta.size(), p_star.size());
  const auto b = to_vec(beta);
  std::vector<Hypothesis> hyps{
      script_l("(beta,p) in L_n", ParamMatrix2xN(to_vec(p), b)),
      script_l("(beta,p*) in L_n", ParamMatrix2xN(to_vec(p_star), b)),
      vector_relation("p* <=^w p", weak_supermajorizes(p, p_star), p_star,
                      p)};
  const auto a = filled(b.size(), alpha);
  return make_report(
      TheoremId::kT3_2, std::move(hyps),
      {OrderKind::kSt, FiniteMixture::from_vectors(to_vec(p), a, b),
       FiniteMixture::from_vectors(to_vec(p_star), a, b),
       "R(alpha,beta;p) <=_st R(alpha,beta;p*)"});
}

ConditionReport check_theorem_3_3(std::span<const double> alpha,
                                  std::span<const double> alpha_star,
                                  double beta, std::span<const double> p) {
  require_same_size(alpha.size(), p.size());
  require_same_size(alpha_star.size(), p.size());
  const auto pv = to_vec(p);
  std::vector<Hypothesis> hyps{
      beta_in_unit(beta),
      script_l("(alpha,p) in L_n", ParamMatrix2xN(pv, to_vec(alpha))),
      script_l("(alpha*,p) in L_n", ParamMatrix2xN(pv, to_vec(alpha_star))),
      vector_relation("alpha* <=^w alpha",
                      weak_supermajorizes(alpha, alpha_star), alpha_star,
                      alpha)};
  const auto b = filled(pv.size(), beta);
  return make_report(
      TheoremId::kT3_3, std::move(hyps),
      {OrderKind::kSt, FiniteMixture::from_vectors(pv, alpha_star, b),
       FiniteMixture::from_vectors(pv, alpha, b),
       "R(alpha*,beta;p) <=_st R(alpha,beta;p)"});
}

ConditionReport check_theorem_3_4_or_3_5(const ParamMatrix2xN& p_mat,
                                         const ParamMatrix2xN& q_mat,
                                         std::span<const TTransform> ts,
                                         double beta) {
  std::vector<Hypothesis> hyps{beta_in_unit(beta),
                               script_l("(p,alpha) in L_n", p_mat),
                               chain(p_mat, q_mat, ts)};
  return alpha_chain_report(
      p_mat.size() == 2 ? TheoremId::kT3_4 : TheoremId::kT3_5, p_mat, q_mat,
      std::move(hyps), beta);
}

ConditionReport check_theorem_3_6(const ParamMatrix2xN& p_mat,
                                  std::span<const TTransform> ts,
                                  double beta) {
  const auto stages = chain_products(p_mat, ts);
  const ParamMatrix2xN q_mat = stages.empty() ? p_mat : stages.back();
  std::vector<Hypothesis> hyps{beta_in_unit(beta),
                               script_l("(p,alpha) in L_n", p_mat),
                               intermediates(p_mat, ts)};
  return alpha_chain_report(TheoremId::kT3_6, p_mat, q_mat, std::move(hyps),
                            beta);
}

ConditionReport check_corollary_3_2(const ParamMatrix2xN& p_mat,
                                    const ParamMatrix2xN& q_mat,
                                    std::span<const TTransform> ts,
                                    double beta) {
  std::vector<Hypothesis> hyps{beta_in_unit(beta),
                               script_l("(p,alpha) in L_n", p_mat),
                               common_structure(ts), chain(p_mat, q_mat, ts)};
  return alpha_chain_report(TheoremId::kC3_2, p_mat, q_mat, std::move(hyps),
                            beta);
}

ConditionReport check_theorem_3_7_to_3_9(const ParamMatrix2xN& p_mat,
                                         const ParamMatrix2xN& q_mat,
                                         std::span<const TTransform> ts,
                                         double alpha, ChainVariant variant) {
  std::vector<Hypothesis> hyps{script_l("(p,beta) in L_n", p_mat),
                               chain(p_mat, q_mat, ts)};
  TheoremId id = p_mat.size() == 2 ? TheoremId::kT3_7 : TheoremId::kT3_8;
  if (variant == ChainVariant::kDifferentStructure) {
    hyps.push_back(intermediates(p_mat, ts));
    id = TheoremId::kT3_9;
  }
  return beta_chain_report(id, p_mat, q_mat, std::move(hyps), alpha);
}

ConditionReport check_corollary_3_3(const ParamMatrix2xN& p_mat,
                                    const ParamMatrix2xN& q_mat,
                                    std::span<const TTransform> ts,
                                    double alpha) {
  std::vector<Hypothesis> hyps{script_l("(p,beta) in L_n", p_mat),
                               common_structure(ts), chain(p_mat, q_mat, ts)};
  return beta_chain_report(TheoremId::kC3_3, p_mat, q_mat, std::move(hyps),
                           alpha);
}

ConditionReport check_theorem_3_10(std::span<const double> beta,
                                   std::span<const double> beta_star,
                                   double alpha, std::span<const double> p,
                                   std::span<const double> p_star) {
  require_same_size(beta.size(), p.size());
  require_same_size(beta_star.size(), p_star.size());
  require_same_size(beta.size(), beta_star.size());
  Hypothesis gaps{"max gap beta <= min gap beta*", true,
                  "fewer than two components"};
  if (beta.size() >= 2) {
    const double max_gap = gap_range(beta).first;
    const double min_gap = gap_range(beta_star).second;
    gaps.held = max_gap <= min_gap + kHypothesisTol;
    gaps.detail = "max gap of " + fmt_set(beta) + " is " + fmt(max_gap) +
                  (gaps.held ? " <= " : " > ") + "min gap of " +
                  fmt_set(beta_star) + " = " + fmt(min_gap);
  }
  const auto a = filled(beta.size(), alpha);
  return make_report(
      TheoremId::kT3_10, {gaps},
      {OrderKind::kRRh, FiniteMixture::from_vectors(to_vec(p), a, beta),
       FiniteMixture::from_vectors(to_vec(p_star), a, beta_star),
       "R(alpha,beta;p) <=_R-rh R(alpha,beta*;p*)"});
}

ConditionReport check_theorem_3_11(std::span<const double> alpha,
                                   std::span<const double> beta,
                                   std::span<const double> alpha_star,
                                   std::span<const double> beta_star,
                                   std::span<const double> p,
                                   std::span<const double> p_star) {
  const auto ab = products(alpha, beta);
  const auto ab_star = products(alpha_star, beta_star);
  std::vector<Hypothesis> hyps{
      max_le_min("max alpha* <= min alpha", alpha_star, alpha),
      max_le_min("max(alpha beta) <= min(alpha* beta*)", ab, ab_star)};
  return make_report(
      TheoremId::kT3_11, std::move(hyps),
      {OrderKind::kRh, FiniteMixture::from_vectors(to_vec(p), alpha, beta),
       FiniteMixture::from_vectors(to_vec(p_star), alpha_star, beta_star),
       "R(alpha,beta;p) <=_rh R(alpha*,beta*;p*)"});
}

ConditionReport check_theorem_3_12(std::span<const double> alpha,
                                   std::span<const double> beta,
                                   std::span<const double> alpha_star,
                                   std::span<const double> beta_star,
                                   std::span<const double> p,
                                   std::span<const double> p_star) {
  const auto ab = products(alpha, beta);
  const auto ab_star = products(alpha_star, beta_star);
  std::vector<Hypothesis> hyps{
      max_le_min("max alpha <= min alpha*", alpha, alpha_star),
      max_le_min("max(alpha* beta*) <= min(alpha beta)", ab_star, ab)};
  return make_report(
      TheoremId::kT3_12, std::move(hyps),
      {OrderKind::kLr,
       FiniteMixture::from_vectors(to_vec(p_star), alpha_star, beta_star),
       FiniteMixture::from_vectors(to_vec(p), alpha, beta),
       "R(alpha*,beta*;p*) <=_lr R(alpha,beta;p)"});
}

std::string_view to_string(PredictionStatus status) {
  switch (status) {
    case PredictionStatus::kConsistent: return "consistent";
    case PredictionStatus::kContradiction: return "contradiction";
    case PredictionStatus::kNotApplicable: return "not_applicable";
    case PredictionStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

OrderVerdict check_claim(const OrderClaim& claim, const Grid& grid) {
  return check_order(claim.kind, claim.smaller, claim.larger, grid);
}

PredictionOutcome verify_prediction(const ConditionReport& report,
                                    const Grid& grid) {
  PredictionOutcome out;
  if (!report.all_held) return out;
  out.verdict = check_claim(report.claim, grid);
  switch (out.verdict->status) {
    case VerdictStatus::kHoldsOnGrid:
      out.status = PredictionStatus::kConsistent;
      break;
    case VerdictStatus::kViolated:
      out.status = PredictionStatus::kContradiction;
      break;
    case VerdictStatus::kInconclusive:
      out.status = PredictionStatus::kInconclusive;
      break;
  }
  return out;
}

}  // namespace ikmix
