#ifndef FAIRDIM_METRICS_HPP
#define FAIRDIM_METRICS_HPP

#include <cstddef>
#include <string>

#include "fairdim/dataset.hpp"
#include "fairdim/matrix.hpp"

namespace fairdim {

// Tolerance on max|U^T U - I| accepted by every metric.
inline constexpr double kOrthonormalityTolerance = 1e-6;

// Errors at one projection. `err_a` belongs to the privileged group and
// `err_b` to the harmed one; disparity = err_b - err_a, fairness = disparity^2.
struct GroupMetrics {
  double overall_err = 0.0;
  double err_a = 0.0;
  double err_b = 0.0;
  double disparity = 0.0;
  double fairness = 0.0;
};

// Throws NumericError unless max|U^T U - I| <= tolerance.
void require_orthonormal(const Matrix& u, double tolerance = kOrthonormalityTolerance);

// ||X - X U U^T||_F^2 / n, computed as (tr(X^T X) - ||X U||_F^2) / n.
double avg_reconstruction_error(const Matrix& x, const Matrix& u);
// Same quantity by forming the residual explicitly.
double avg_reconstruction_error_direct(const Matrix& x, const Matrix& u);

// err(x_b) - err(x_a). Averages use the explicit counts n_a, n_b.
double disparity(const Matrix& x_a, const Matrix& x_b, std::size_t n_a, std::size_t n_b, const Matrix& u);
double fairness_measure(const Matrix& x_a, const Matrix& x_b, std::size_t n_a, std::size_t n_b,
                        const Matrix& u);

enum class GroupId { first, second };

/*
 Which source group is privileged (lower error under classical PCA). Fixed
 once per rank and reused for every candidate projection of a search.
*/
struct PrivilegeAssignment {
  GroupId privileged = GroupId::first;
  double privileged_pca_err = 0.0;
  double harmed_pca_err = 0.0;  // budget for the constrained search

  GroupId harmed() const { return privileged == GroupId::first ? GroupId::second : GroupId::first; }
};

// Ties go to the first group.
PrivilegeAssignment identify_privileged(const GroupedData& g, const Matrix& u_pca);

// Views of the grouped data in (privileged, harmed) order.
struct OrientedGroups {
  const Matrix& x_a;
  const Matrix& x_b;
  std::size_t n_a;
  std::size_t n_b;
  const std::string& label_a;
  const std::string& label_b;
};
OrientedGroups orient(const GroupedData& g, const PrivilegeAssignment& roles);

// All metrics of `u` on `g` with the frozen roles.
GroupMetrics evaluate(const GroupedData& g, const PrivilegeAssignment& roles, const Matrix& u);

}  // namespace fairdim

#endif
