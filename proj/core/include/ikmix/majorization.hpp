#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ikmix {

/// Absolute slack on prefix sums and on the L_n sign products.
inline constexpr double kMajorizationTol = 1e-12;

/// a majorizes b: ascending prefix sums of a never exceed those of b and the
/// totals agree. Throws InvalidInput on length mismatch or empty input.
bool majorizes(std::span<const double> a, std::span<const double> b);

/// a weakly supermajorizes b: ascending prefix sums of a <= those of b for
/// every prefix, totals included.
bool weak_supermajorizes(std::span<const double> a, std::span<const double> b);

/// a weakly submajorizes b: descending suffix sums of a >= those of b.
bool weak_submajorizes(std::span<const double> a, std::span<const double> b);

/// A 2 x n matrix of strictly positive entries: a proportion row over a
/// shape-parameter row.
class ParamMatrix2xN {
 public:
  ParamMatrix2xN(std::vector<double> row1, std::vector<double> row2);

  std::size_t size() const { return row1_.size(); }
  const std::vector<double>& row1() const { return row1_; }
  const std::vector<double>& row2() const { return row2_; }

  friend bool operator==(const ParamMatrix2xN&,
                         const ParamMatrix2xN&) = default;

 private:
  std::vector<double> row1_;
  std::vector<double> row2_;
};

/// T = omega I + (1 - omega) Pi, Pi swapping coordinates first and second
/// (zero-based here; the JSON form is one-based).
struct TTransform {
  double omega = 1.0;
  std::size_t first = 0;
  std::size_t second = 1;

  /// Throws InvalidInput if omega is outside [0,1] or the pair is degenerate.
  void validate(std::size_t n) const;
};

/// Column pairs (i, j), i < j, zero-based, where the rows are similarly
/// ordered, i.e. (row1_i - row1_j)(row2_i - row2_j) > slack.
std::vector<std::pair<std::size_t, std::size_t>> script_l_violations(
    const ParamMatrix2xN& pm);

/// Membership in L_n: the two rows are oppositely ordered.
bool in_script_l(const ParamMatrix2xN& pm);

/// pm * T. Only the two mixed columns change.
ParamMatrix2xN apply_t_transform(const ParamMatrix2xN& pm, const TTransform& t);

/// Every partial product pm T_1 ... T_i for i = 1..k.
std::vector<ParamMatrix2xN> chain_products(const ParamMatrix2xN& pm,
                                           std::span<const TTransform> ts);

/// True iff applying ts in order to p reproduces q entrywise within 1e-10,
/// which establishes p >> q.
bool chain_majorization_verify(const ParamMatrix2xN& p,
                               const ParamMatrix2xN& q,
                               std::span<const TTransform> ts);

/// For n = 2, solves q = p T_omega column-wise for a common omega in [0,1].
std::optional<TTransform> infer_t_transform_2x2(const ParamMatrix2xN& p,
                                                const ParamMatrix2xN& q);

/// Whether f(a) >= f(b) on a pair with a majorizing b. Evidence of
/// Schur-convexity on that pair only. Throws InvalidInput if a does not
/// majorize b.
bool schur_probe(const std::function<double(std::span<const double>)>& f,
                 std::span<const double> a, std::span<const double> b);

std::string to_string(const ParamMatrix2xN& pm);

}  // namespace ikmix
