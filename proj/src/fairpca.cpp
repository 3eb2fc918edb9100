#include "fairdim/fairpca.hpp"

#include <cmath>
#include <map>
#include <string>

#include "fairdim/eigen.hpp"
#include "fairdim/error.hpp"

namespace fairdim {

namespace {

void check_rank(const GroupedData& g, std::size_t r) {
  if (r < 1 || r > g.dims()) {
    throw DimensionError("rank " + std::to_string(r) + " outside [1, " + std::to_string(g.dims()) + "]");
  }
}

FairFitResult make_result(Method method, std::size_t r, double alpha, Matrix u, const GroupedData& g,
                          const PrivilegeAssignment& roles) {
  FairFitResult res;
  res.method = method;
  res.rank = r;
  res.alpha = alpha;
  res.metrics = evaluate(g, roles, u);
  res.u = std::move(u);
  res.roles = roles;
  const OrientedGroups og = orient(g, roles);
  res.label_a = og.label_a;
  res.label_b = og.label_b;
  return res;
}

// Memoized alpha -> (projection, metrics) for one search.
class AlphaEvaluator {
public:
  struct Point {
    Matrix u;
    GroupMetrics metrics;
  };

  AlphaEvaluator(const GroupedData& g, const PrivilegeAssignment& roles, std::size_t r)
      : g_(g), roles_(roles), blend_(g, roles), r_(r) {}

  const Point& at(double alpha) {
    auto it = cache_.find(alpha);
    if (it != cache_.end()) return it->second;
    Matrix u = sym_eig_top_r(blend_.at(TradeoffWeight(alpha)), r_).vectors;
    GroupMetrics m = evaluate(g_, roles_, u);
    return cache_.emplace(alpha, Point{std::move(u), m}).first->second;
  }

  const std::map<double, Point>& evaluated() const { return cache_; }

private:
  const GroupedData& g_;
  PrivilegeAssignment roles_;
  CovarianceBlend blend_;
  std::size_t r_;
  std::map<double, Point> cache_;
};

}  // namespace

TradeoffWeight::TradeoffWeight(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DimensionError("trade-off weight " + std::to_string(alpha) + " outside [0, 1]");
  }
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::pca: return "pca";
    case Method::u_fpca: return "ufpca";
    case Method::c_fpca: return "cfpca";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "pca") return Method::pca;
  if (name == "ufpca") return Method::u_fpca;
  if (name == "cfpca") return Method::c_fpca;
  return std::nullopt;
}

CovarianceBlend::CovarianceBlend(const GroupedData& g, const PrivilegeAssignment& roles)
    : total_(scaled_gram(g.x, g.n)) {
  const OrientedGroups og = orient(g, roles);
  difference_ = scaled_gram(og.x_b, og.n_b) - scaled_gram(og.x_a, og.n_a);
}

Matrix CovarianceBlend::at(TradeoffWeight alpha) const {
  const double w = alpha.value();
  // At w == 1 the second term is exactly zero, so the result equals total().
  return w * total_ + (1.0 - w) * difference_;
}

Matrix weighted_covariance(const GroupedData& g, const PrivilegeAssignment& roles, TradeoffWeight alpha) {
  return CovarianceBlend(g, roles).at(alpha);
}

Matrix fair_projection(const GroupedData& g, const PrivilegeAssignment& roles, TradeoffWeight alpha,
                       std::size_t r) {
  check_rank(g, r);
  return sym_eig_top_r(weighted_covariance(g, roles, alpha), r).vectors;
}

FairFitResult classical_pca(const GroupedData& g, std::size_t r) {
  check_rank(g, r);
  Matrix u = sym_eig_top_r(scaled_gram(g.x, g.n), r).vectors;
  const PrivilegeAssignment roles = identify_privileged(g, u);
  return make_result(Method::pca, r, 1.0, std::move(u), g, roles);
}

GoldenSectionResult golden_section(const std::function<double(double)>& objective,
                                   const std::function<bool(double)>& feasible, const SearchConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw DimensionError("golden_section: tolerance must be positive");
  constexpr double phi = SearchConfig::golden_ratio;

  GoldenSectionResult out;
  double lo = 0.0;
  double hi = 1.0;
  // Interior candidates; the survivor of each step is carried into the next.
  double lower = hi - (hi - lo) / phi;
  double upper = lo + (hi - lo) / phi;
  std::optional<double> f_lower;
  std::optional<double> f_upper;

  while (hi - lo > cfg.tol && out.iterations < cfg.max_iterations) {
    if (!f_lower) f_lower = objective(lower);
    if (!f_upper) f_upper = objective(upper);
    ++out.iterations;

    const bool take_lower = *f_lower <= *f_upper && (!feasible || feasible(lower));
    if (take_lower) {
      hi = upper;
      upper = lower;
      f_upper = f_lower;
      lower = hi - (hi - lo) / phi;
      f_lower.reset();
    } else {
      lo = lower;
      lower = upper;
      f_lower = f_upper;
      upper = lo + (hi - lo) / phi;
      f_upper.reset();
    }
    out.bracket_widths.push_back(hi - lo);
  }
  out.alpha = 0.5 * (lo + hi);
  return out;
}

FairFitResult u_fpca(const GroupedData& g, std::size_t r, const SearchConfig& cfg) {
  const FairFitResult pca = classical_pca(g, r);
  AlphaEvaluator eval(g, pca.roles, r);

  const auto search = golden_section([&](double a) { return eval.at(a).metrics.fairness; }, nullptr, cfg);
  FairFitResult res = make_result(Method::u_fpca, r, search.alpha, eval.at(search.alpha).u, g, pca.roles);
  res.iterations = search.iterations;
  return res;
}

FairFitResult c_fpca(const GroupedData& g, std::size_t r, const SearchConfig& cfg) {
  const FairFitResult pca = classical_pca(g, r);
  const double budget = pca.roles.harmed_pca_err;
  AlphaEvaluator eval(g, pca.roles, r);
  const auto is_feasible = [&](double a) {
    const GroupMetrics& m = eval.at(a).metrics;
    return m.err_a <= budget && m.err_b <= budget;
  };

  const auto search =
      golden_section([&](double a) { return eval.at(a).metrics.fairness; }, is_feasible, cfg);

  // The bracket midpoint can sit just past the feasibility boundary, and
  // golden section gives no guarantee against PCA itself. Fall back to the
  // best feasible point seen, with alpha = 1 (PCA, always feasible) included.
  double chosen = search.alpha;
  eval.at(1.0);
  if (!is_feasible(chosen) || eval.at(chosen).metrics.fairness > eval.at(1.0).metrics.fairness) {
    chosen = 1.0;
    for (const auto& [alpha, point] : eval.evaluated()) {
      if (!is_feasible(alpha)) continue;
      if (point.metrics.fairness < eval.at(chosen).metrics.fairness) chosen = alpha;
    }
  }

  FairFitResult res = make_result(Method::c_fpca, r, chosen, eval.at(chosen).u, g, pca.roles);
  res.iterations = search.iterations;
  res.budget = budget;
  return res;
}

FairFitResult fit(Method method, const GroupedData& g, std::size_t r, const SearchConfig& cfg) {
  switch (method) {
    case Method::pca: return classical_pca(g, r);
    case Method::u_fpca: return u_fpca(g, r, cfg);
    case Method::c_fpca: return c_fpca(g, r, cfg);
  }
  throw DimensionError("unknown method");
}

}  // namespace fairdim
