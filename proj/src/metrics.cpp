#include "fairdim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairdim/error.hpp"

namespace fairdim {

namespace {

// Below this fraction of tr(X^T X) the subtraction form loses too many digits
// and the residual is formed explicitly instead.
constexpr double kCancellationGuard = 1e-6;

void check_shapes(const Matrix& x, const Matrix& u) {
  if (x.cols() != u.rows()) {
    throw DimensionError("reconstruction error: data has " + std::to_string(x.cols()) +
                         " columns, projection has " + std::to_string(u.rows()) + " rows");
  }
  if (u.cols() == 0 || u.cols() > u.rows()) throw DimensionError("reconstruction error: bad projection rank");
}

double residual_sum_direct(const Matrix& x, const Matrix& u) {
  const Matrix reconstructed = matmul(matmul(x, u), u.transpose());
  return frobenius_norm_sq(x - reconstructed);
}

// ||X - X U U^T||_F^2 for orthonormal U.
double residual_sum(const Matrix& x, const Matrix& u) {
  check_shapes(x, u);
  require_orthonormal(u);
  // Square orthonormal U: U U^T = I, nothing is discarded.
  if (u.cols() == u.rows()) return 0.0;
  const double total = frobenius_norm_sq(x);
  const double kept = frobenius_norm_sq(matmul(x, u));
  const double residual = total - kept;
  if (residual < kCancellationGuard * total) return residual_sum_direct(x, u);
  return residual;
}

double average(double sum, std::size_t count) {
  if (count == 0) throw DimensionError("reconstruction error: empty group");
  return sum / static_cast<double>(count);
}

}  // namespace

void require_orthonormal(const Matrix& u, double tolerance) {
  const Matrix gram = matmul_transposed_lhs(u, u);
  double worst = 0.0;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      worst = std::max(worst, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
  if (worst > tolerance) {
    throw NumericError("projection columns are not orthonormal (max deviation " + std::to_string(worst) + ")");
  }
}

double avg_reconstruction_error(const Matrix& x, const Matrix& u) {
  return average(residual_sum(x, u), x.rows());
}

double avg_reconstruction_error_direct(const Matrix& x, const Matrix& u) {
  check_shapes(x, u);
  require_orthonormal(u);
  return average(residual_sum_direct(x, u), x.rows());
}

double disparity(const Matrix& x_a, const Matrix& x_b, std::size_t n_a, std::size_t n_b, const Matrix& u) {
  return average(residual_sum(x_b, u), n_b) - average(residual_sum(x_a, u), n_a);
}

double fairness_measure(const Matrix& x_a, const Matrix& x_b, std::size_t n_a, std::size_t n_b,
                        const Matrix& u) {
  const double d = disparity(x_a, x_b, n_a, n_b, u);
  return d * d;
}

PrivilegeAssignment identify_privileged(const GroupedData& g, const Matrix& u_pca) {
  const double err_first = average(residual_sum(g.x_a, u_pca), g.n_a);
  const double err_second = average(residual_sum(g.x_b, u_pca), g.n_b);
  PrivilegeAssignment roles;
  if (err_first <= err_second) {
    roles.privileged = GroupId::first;
    roles.privileged_pca_err = err_first;
    roles.harmed_pca_err = err_second;
  } else {
    roles.privileged = GroupId::second;
    roles.privileged_pca_err = err_second;
    roles.harmed_pca_err = err_first;
  }
  return roles;
}

OrientedGroups orient(const GroupedData& g, const PrivilegeAssignment& roles) {
  if (roles.privileged == GroupId::first) return {g.x_a, g.x_b, g.n_a, g.n_b, g.label_a, g.label_b};
  return {g.x_b, g.x_a, g.n_b, g.n_a, g.label_b, g.label_a};
}

GroupMetrics evaluate(const GroupedData& g, const PrivilegeAssignment& roles, const Matrix& u) {
  const OrientedGroups og = orient(g, roles);
  GroupMetrics m;
  const double sum_a = residual_sum(og.x_a, u);
  const double sum_b = residual_sum(og.x_b, u);
  m.err_a = average(sum_a, og.n_a);
  m.err_b = average(sum_b, og.n_b);
  // Built from the group sums so the decomposition identity holds to rounding.
  m.overall_err = average(sum_a + sum_b, g.n);
  m.disparity = m.err_b - m.err_a;
  m.fairness = m.disparity * m.disparity;
  return m;
}

}  // namespace fairdim
