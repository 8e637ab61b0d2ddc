#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "ikmix/majorization.hpp"
#include "ikmix/mixture.hpp"
#include "ikmix/oracles.hpp"
#include "ikmix/ordercheck.hpp"
#include "ikmix/theorems.hpp"

// JSON forms. Malformed documents raise InvalidInput; parameter values that
// are out of range raise DomainError from the constructors as usual.
namespace ikmix {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);

/// A number or an array of numbers; a number is broadcast to length n.
std::vector<double> number_list(const json& j, std::size_t n,
                                const char* what);
std::vector<double> number_list(const json& j, const char* what);

/// {"weights": [...], "alpha": a | [...], "beta": b | [...]}.
FiniteMixture mixture_from_json(const json& j);
json mixture_to_json(const FiniteMixture& m);
FiniteMixture load_mixture(const std::filesystem::path& path);

/// {"row1": [...], "row2": [...]}.
ParamMatrix2xN matrix_from_json(const json& j);
json matrix_to_json(const ParamMatrix2xN& pm);

/// {"omega": w, "pair": [i, j]} with one-based indices.
TTransform ttransform_from_json(const json& j);
json ttransform_to_json(const TTransform& t);
std::vector<TTransform> chain_from_json(const json& j);

json verdict_to_json(const OrderVerdict& v);
json report_to_json(const ConditionReport& r);
json outcome_to_json(const PredictionOutcome& o);
json sign_report_to_json(const SignReport& r);

/// Runs the checker for id on a theorem-specific input object, e.g. for
/// T3.11 {"alpha", "beta", "alpha_star", "beta_star", "p", "p_star"}; chain
/// theorems take {"p_mat", "q_mat", "chain", "beta" | "alpha"}.
ConditionReport run_checker(TheoremId id, const json& inputs);

}  // namespace ikmix
