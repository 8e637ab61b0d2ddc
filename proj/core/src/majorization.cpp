#include "ikmix/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ikmix/errors.hpp"

namespace ikmix {
namespace {

std::vector<double> sorted_ascending(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::stable_sort(out.begin(), out.end());
  return out;
}

void require_comparable(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || a.size() != b.size()) {
    throw InvalidInput("majorization: vectors must be nonempty and of equal "
                       "length");
  }
  for (double v : a) {
    if (!std::isfinite(v)) throw InvalidInput("majorization: non-finite entry");
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw InvalidInput("majorization: non-finite entry");
  }
}

// Ascending prefix sums, compared entry by entry up to `count` prefixes.
bool ascending_prefixes_dominated(const std::vector<double>& a,
                                  const std::vector<double>& b,
                                  std::size_t count) {
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb + kMajorizationTol) return false;
  }
  return true;
}

double total(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

bool majorizes(std::span<const double> a, std::span<const double> b) {
  require_comparable(a, b);
  const auto sa = sorted_ascending(a);
  const auto sb = sorted_ascending(b);
  if (std::abs(total(sa) - total(sb)) > kMajorizationTol) return false;
  return ascending_prefixes_dominated(sa, sb, sa.size() - 1);
}

bool weak_supermajorizes(std::span<const double> a, std::span<const double> b) {
  require_comparable(a, b);
  return ascending_prefixes_dominated(sorted_ascending(a), sorted_ascending(b),
                                      a.size());
}

bool weak_submajorizes(std::span<const double> a, std::span<const double> b) {
  require_comparable(a, b);
  const auto sa = sorted_ascending(a);
  const auto sb = sorted_ascending(b);
  double ta = 0.0;
  double tb = 0.0;
  for (std::size_t i = sa.size(); i-- > 0;) {
    ta += sa[i];
    tb += sb[i];
    if (ta < tb - kMajorizationTol) return false;
  }
  return true;
}

ParamMatrix2xN::ParamMatrix2xN(std::vector<double> row1,
                               std::vector<double> row2)
    : row1_(std::move(row1)), row2_(std::move(row2)) {
  if (row1_.empty() || row1_.size() != row2_.size()) {
    throw InvalidInput("ParamMatrix2xN: rows must be nonempty and of equal "
                       "length");
  }
  for (const auto* row : {&row1_, &row2_}) {
    for (double v : *row) {
      if (!std::isfinite(v) || v <= 0.0) {
        throw InvalidInput("ParamMatrix2xN: entries must be finite and > 0");
      }
    }
  }
}

void TTransform::validate(std::size_t n) const {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw InvalidInput("TTransform: omega must lie in [0, 1]");
  }
  if (first == second || first >= n || second >= n) {
    throw InvalidInput("TTransform: index pair must be distinct and < " +
                       std::to_string(n));
  }
}

std::vector<std::pair<std::size_t, std::size_t>> script_l_violations(
    const ParamMatrix2xN& pm) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const auto& r = pm.row1();
  const auto& t = pm.row2();
  for (std::size_t i = 0; i < pm.size(); ++i) {
    for (std::size_t j = i + 1; j < pm.size(); ++j) {
      if ((r[i] - r[j]) * (t[i] - t[j]) > kMajorizationTol) {
        bad.emplace_back(i, j);
      }
    }
  }
  return bad;
}

bool in_script_l(const ParamMatrix2xN& pm) {
  return script_l_violations(pm).empty();
}

ParamMatrix2xN apply_t_transform(const ParamMatrix2xN& pm,
                                 const TTransform& t) {
  t.validate(pm.size());
  auto r1 = pm.row1();
  auto r2 = pm.row2();
  const double w = t.omega;
  for (auto* row : {&r1, &r2}) {
    const double ci = (*row)[t.first];
    const double cj = (*row)[t.second];
    (*row)[t.first] = w * ci + (1.0 - w) * cj;
    (*row)[t.second] = (1.0 - w) * ci + w * cj;
  }
  return ParamMatrix2xN(std::move(r1), std::move(r2));
}

std::vector<ParamMatrix2xN> chain_products(const ParamMatrix2xN& pm,
                                           std::span<const TTransform> ts) {
  std::vector<ParamMatrix2xN> out;
  out.reserve(ts.size());
  const ParamMatrix2xN* current = &pm;
  for (const auto& t : ts) {
    out.push_back(apply_t_transform(*current, t));
    current = &out.back();
  }
  return out;
}

bool chain_majorization_verify(const ParamMatrix2xN& p,
                               const ParamMatrix2xN& q,
                               std::span<const TTransform> ts) {
  if (p.size() != q.size()) return false;
  const auto products = chain_products(p, ts);
  const ParamMatrix2xN& end = products.empty() ? p : products.back();
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (std::abs(end.row1()[j] - q.row1()[j]) > 1e-10 ||
        std::abs(end.row2()[j] - q.row2()[j]) > 1e-10) {
      return false;
    }
  }
  return true;
}

std::optional<TTransform> infer_t_transform_2x2(const ParamMatrix2xN& p,
                                                const ParamMatrix2xN& q) {
  if (p.size() != 2 || q.size() != 2) {
    throw InvalidInput("infer_t_transform_2x2: both matrices must be 2x2");
  }
  // Per row: q0 = w p0 + (1-w) p1. A row with p0 == p1 constrains nothing
  // but must already agree with q.
  std::optional<double> omega;
  using RowFn = const std::vector<double>& (ParamMatrix2xN::*)() const;
  for (RowFn rows : {RowFn{&ParamMatrix2xN::row1}, RowFn{&ParamMatrix2xN::row2}}) {
    const auto& pr = (p.*rows)();
    const auto& qr = (q.*rows)();
    if (std::abs(pr[0] + pr[1] - qr[0] - qr[1]) > 1e-9) return std::nullopt;
    const double spread = pr[0] - pr[1];
    if (std::abs(spread) <= 1e-15) {
      if (std::abs(qr[0] - pr[0]) > 1e-9) return std::nullopt;
      continue;
    }
    const double w = (qr[0] - pr[1]) / spread;
    if (omega && std::abs(*omega - w) > 1e-9) return std::nullopt;
    if (!omega) omega = w;
  }
  const double w = omega.value_or(1.0);
  if (w < -1e-12 || w > 1.0 + 1e-12) return std::nullopt;
  return TTransform{std::clamp(w, 0.0, 1.0), 0, 1};
}

bool schur_probe(const std::function<double(std::span<const double>)>& f,
                 std::span<const double> a, std::span<const double> b) {
  if (!majorizes(a, b)) {
    throw InvalidInput("schur_probe: first vector must majorize the second");
  }
  return f(a) >= f(b);
}

std::string to_string(const ParamMatrix2xN& pm) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < pm.size(); ++j) {
    os << (j ? "," : "") << pm.row1()[j];
  }
  os << "; ";
  for (std::size_t j = 0; j < pm.size(); ++j) {
    os << (j ? "," : "") << pm.row2()[j];
  }
  os << ')';
  return os.str();
}

}  // namespace ikmix
