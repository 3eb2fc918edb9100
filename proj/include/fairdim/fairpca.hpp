#ifndef FAIRDIM_FAIRPCA_HPP
#define FAIRDIM_FAIRPCA_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairdim/dataset.hpp"
#include "fairdim/matrix.hpp"
#include "fairdim/metrics.hpp"

/*
 Fair PCA by eigendecomposition of a weighted covariance.

 For a trade-off weight alpha in [0, 1] the projection minimizing

     alpha * err(X) + (1 - alpha) * (err(X_B) - err(X_A))

 over orthonormal U is spanned by the top eigenvectors of

     C_hat = alpha * X^T X / n + (1 - alpha) * (X_B^T X_B / n_B - X_A^T X_A / n_A)

 where A is the privileged group (lower error under plain PCA) and B the
 harmed one. alpha = 1 is classical PCA. C_hat can be indefinite, so "top"
 means algebraically largest.

 The fitting routines search alpha by golden section to minimize the squared
 disparity. c_fpca also keeps both group errors at or below the harmed
 group's classical-PCA error.
*/
namespace fairdim {

class TradeoffWeight {
public:
  explicit TradeoffWeight(double alpha);
  double value() const { return alpha_; }

private:
  double alpha_;
};

struct SearchConfig {
  static constexpr double golden_ratio = 1.6180339887498949;  // (sqrt(5) + 1) / 2
  double tol = 1e-6;
  int max_iterations = 100;
};

enum class Method { pca, u_fpca, c_fpca };

std::string_view method_name(Method m);  // "pca", "ufpca", "cfpca"
std::optional<Method> parse_method(std::string_view name);

struct FairFitResult {
  Method method = Method::pca;
  std::size_t rank = 0;
  double alpha = 1.0;
  Matrix u;
  GroupMetrics metrics;
  int iterations = 0;
  std::optional<double> budget;  // set for c_fpca
  PrivilegeAssignment roles;
  std::string label_a;  // privileged
  std::string label_b;  // harmed
};

// Per-group second-moment matrices, computed once and blended per alpha.
class CovarianceBlend {
public:
  CovarianceBlend(const GroupedData& g, const PrivilegeAssignment& roles);

  const Matrix& total() const { return total_; }
  Matrix at(TradeoffWeight alpha) const;

private:
  Matrix total_;       // X^T X / n
  Matrix difference_;  // X_B^T X_B / n_B - X_A^T X_A / n_A
};

Matrix weighted_covariance(const GroupedData& g, const PrivilegeAssignment& roles, TradeoffWeight alpha);
Matrix fair_projection(const GroupedData& g, const PrivilegeAssignment& roles, TradeoffWeight alpha,
                       std::size_t r);

// Top-r eigenvectors of X^T X / n, roles taken from this projection.
FairFitResult classical_pca(const GroupedData& g, std::size_t r);

struct GoldenSectionResult {
  double alpha = 0.0;
  int iterations = 0;
  std::vector<double> bracket_widths;  // width after each iteration
};

/*
 Golden-section minimization of `objective` over [0, 1].

 Without `feasible`, the lower candidate wins when its value is <= the upper
 one's. With it, the lower candidate must also be feasible; otherwise the
 lower bracket end moves up. Runs while the bracket is wider than cfg.tol
 (capped at cfg.max_iterations) and returns the bracket midpoint.
*/
GoldenSectionResult golden_section(const std::function<double(double)>& objective,
                                   const std::function<bool(double)>& feasible, const SearchConfig& cfg);

FairFitResult u_fpca(const GroupedData& g, std::size_t r, const SearchConfig& cfg = {});
FairFitResult c_fpca(const GroupedData& g, std::size_t r, const SearchConfig& cfg = {});

FairFitResult fit(Method method, const GroupedData& g, std::size_t r, const SearchConfig& cfg = {});

}  // namespace fairdim

#endif
