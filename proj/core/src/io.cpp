#include "ikmix/io.hpp"

#include <cmath>
#include <fstream>

#include "ikmix/errors.hpp"

namespace ikmix {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + " must be a number");
  return j.get<double>();
}

// Non-finite doubles have no JSON spelling; they go out as null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_num(const std::optional<double>& v) {
  return v ? num(*v) : json(nullptr);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::vector<double> number_list(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array() || j.empty()) {
    throw InvalidInput(std::string(what) + " must be a number or a non-empty array");
  }
  std::vector<double> out;
  for (const auto& e : j) out.push_back(number(e, what));
  return out;
}

std::vector<double> number_list(const json& j, std::size_t n,
                                const char* what) {
  auto v = number_list(j, what);
  if (j.is_number()) return std::vector<double>(n, v[0]);
  if (v.size() != n) {
    throw InvalidInput(std::string(what) + " must have " + std::to_string(n) +
                       " entries");
  }
  return v;
}

FiniteMixture mixture_from_json(const json& j) {
  const auto w = number_list(field(j, "weights"), "weights");
  const auto a = number_list(field(j, "alpha"), w.size(), "alpha");
  const auto b = number_list(field(j, "beta"), w.size(), "beta");
  return FiniteMixture::from_vectors(w, a, b);
}

json mixture_to_json(const FiniteMixture& m) {
  return {{"weights", m.weights()}, {"alpha", m.alphas()}, {"beta", m.betas()}};
}

FiniteMixture load_mixture(const std::filesystem::path& path) {
  return mixture_from_json(read_json_file(path));
}

ParamMatrix2xN matrix_from_json(const json& j) {
  return ParamMatrix2xN(number_list(field(j, "row1"), "row1"),
                        number_list(field(j, "row2"), "row2"));
}

json matrix_to_json(const ParamMatrix2xN& pm) {
  return {{"row1", pm.row1()}, {"row2", pm.row2()}};
}

TTransform ttransform_from_json(const json& j) {
  TTransform t;
  t.omega = number(field(j, "omega"), "omega");
  const auto& pair = field(j, "pair");
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
      !pair[1].is_number_integer() || pair[0].get<long>() < 1 ||
      pair[1].get<long>() < 1) {
    throw InvalidInput("pair must be two one-based indices");
  }
  t.first = pair[0].get<std::size_t>() - 1;
  t.second = pair[1].get<std::size_t>() - 1;
  return t;
}

json ttransform_to_json(const TTransform& t) {
  return {{"omega", t.omega}, {"pair", {t.first + 1, t.second + 1}}};
}

std::vector<TTransform> chain_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("chain must be an array");
  std::vector<TTransform> ts;
  for (const auto& e : j) ts.push_back(ttransform_from_json(e));
  return ts;
}

json verdict_to_json(const OrderVerdict& v) {
  json j{{"kind", to_string(v.kind)},
         {"status", to_string(v.status)},
         {"evaluated", v.evaluated},
         {"skipped", v.skipped},
         {"refined_crossing", optional_num(v.refined_crossing)},
         {"reason", v.reason}};
  if (v.witness) {
    j["witness"] = {{"x", num(v.witness->x)},
                    {"lhs", num(v.witness->lhs)},
                    {"rhs", num(v.witness->rhs)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json report_to_json(const ConditionReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) {
    hyps.push_back({{"name", h.name}, {"held", h.held}, {"detail", h.detail}});
  }
  json j{{"theorem", to_string(r.id)},
         {"hypotheses", hyps},
         {"all_held", r.all_held},
         {"claim", {{"kind", to_string(r.claim.kind)},
                    {"statement", r.claim.statement},
                    {"smaller", mixture_to_json(r.claim.smaller)},
                    {"larger", mixture_to_json(r.claim.larger)}}}};
  j["predicted_order"] =
      r.all_held ? json(r.claim.statement) : json(nullptr);
  return j;
}

json outcome_to_json(const PredictionOutcome& o) {
  json j{{"status", to_string(o.status)}};
  j["verdict"] = o.verdict ? verdict_to_json(*o.verdict) : json(nullptr);
  return j;
}

json sign_report_to_json(const SignReport& r) {
  json pts = json::array();
  for (std::size_t i = 0; i < r.xs.size(); ++i) {
    pts.push_back({{"x", num(r.xs[i])},
                   {"analytic", num(r.analytic[i])},
                   {"finite_difference", num(r.numeric[i])}});
  }
  return {{"function", to_string(r.id)},
          {"min", num(r.min_value)},
          {"max", num(r.max_value)},
          {"sign_constant", r.sign_constant},
          {"fd_agreement", num(r.fd_agreement)},
          {"sign_mismatches", r.sign_mismatches},
          {"points", pts}};
}

ConditionReport run_checker(TheoremId id, const json& in) {
  const auto vec = [&](const char* key) {
    return number_list(field(in, key), key);
  };
  const auto scalar = [&](const char* key) {
    return number(field(in, key), key);
  };
  const auto chain = [&] {
    return in.contains("chain") ? chain_from_json(in.at("chain"))
                                : std::vector<TTransform>{};
  };
  switch (id) {
    case TheoremId::kT3_1:
      return check_theorem_3_1(vec("alpha"), scalar("beta"), vec("p"),
                               vec("p_star"));
    case TheoremId::kC3_1:
      return check_corollary_3_1(vec("alpha"), scalar("beta"), vec("p"),
                                 vec("p_star"));
    case TheoremId::kT3_2:
      return check_theorem_3_2(vec("beta"), scalar("alpha"), vec("p"),
                               vec("p_star"));
    case TheoremId::kT3_3:
      return check_theorem_3_3(vec("alpha"), vec("alpha_star"),
                               scalar("beta"), vec("p"));
    case TheoremId::kT3_4:
    case TheoremId::kT3_5: {
      auto r = check_theorem_3_4_or_3_5(
          matrix_from_json(field(in, "p_mat")),
          matrix_from_json(field(in, "q_mat")), chain(), scalar("beta"));
      if (r.id != id) {
        throw InvalidInput(std::string(to_string(id)) +
                           " does not match the matrix size");
      }
      return r;
    }
    case TheoremId::kT3_6:
      return check_theorem_3_6(matrix_from_json(field(in, "p_mat")), chain(),
                               scalar("beta"));
    case TheoremId::kC3_2:
      return check_corollary_3_2(matrix_from_json(field(in, "p_mat")),
                                 matrix_from_json(field(in, "q_mat")), chain(),
                                 scalar("beta"));
    case TheoremId::kT3_7:
    case TheoremId::kT3_8:
    case TheoremId::kT3_9: {
      auto r = check_theorem_3_7_to_3_9(
          matrix_from_json(field(in, "p_mat")),
          matrix_from_json(field(in, "q_mat")), chain(), scalar("alpha"),
          id == TheoremId::kT3_9 ? ChainVariant::kDifferentStructure
                                 : ChainVariant::kCommonStructure);
      if (r.id != id) {
        throw InvalidInput(std::string(to_string(id)) +
                           " does not match the matrix size");
      }
      return r;
    }
    case TheoremId::kC3_3:
      return check_corollary_3_3(matrix_from_json(field(in, "p_mat")),
                                 matrix_from_json(field(in, "q_mat")), chain(),
                                 scalar("alpha"));
    case TheoremId::kT3_10:
      return check_theorem_3_10(vec("beta"), vec("beta_star"),
                                scalar("alpha"), vec("p"), vec("p_star"));
    case TheoremId::kT3_11:
      return check_theorem_3_11(vec("alpha"), vec("beta"), vec("alpha_star"),
                                vec("beta_star"), vec("p"), vec("p_star"));
    case TheoremId::kT3_12:
      return check_theorem_3_12(vec("alpha"), vec("beta"), vec("alpha_star"),
                                vec("beta_star"), vec("p"), vec("p_star"));
  }
  throw InvalidInput("unknown theorem");
}

}  // namespace ikmix
