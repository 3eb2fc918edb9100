#include "fairdim/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fairdim/error.hpp"

namespace fairdim {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) sum += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * sum);
}

// Rotate the (p, q) plane so that a_pq becomes zero. `a` is the full symmetric
// matrix, row-major; `vt` holds the eigenvectors as rows.
void rotate(std::vector<double>& a, std::vector<double>& vt, std::size_t n, std::size_t p,
            std::size_t q) {
  const double apq = a[p * n + q];
  const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  double* row_p = &a[p * n];
  double* row_q = &a[q * n];
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = row_p[k];
    const double akq = row_q[k];
    const double new_p = c * akp - s * akq;
    const double new_q = s * akp + c * akq;
    row_p[k] = new_p;
    row_q[k] = new_q;
    a[k * n + p] = new_p;
    a[k * n + q] = new_q;
  }
  row_p[p] -= t * apq;
  row_q[q] += t * apq;
  row_p[q] = 0.0;
  row_q[p] = 0.0;

  double* vp = &vt[p * n];
  double* vq = &vt[q * n];
  for (std::size_t k = 0; k < n; ++k) {
    const double x = vp[k];
    const double y = vq[k];
    vp[k] = c * x - s * y;
    vq[k] = s * x + c * y;
  }
}

}  // namespace

EigenPairs sym_eig(const Matrix& c, const JacobiOptions& options) {
  if (c.rows() != c.cols()) {
    throw DimensionError("sym_eig: matrix is " + std::to_string(c.rows()) + "x" +
                         std::to_string(c.cols()) + ", expected square");
  }
  const std::size_t n = c.rows();
  const double norm = frobenius_norm(c);
  if (max_asymmetry(c) > 1e-9 * norm) throw NumericError("sym_eig: matrix is not symmetric");

  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (c(i, j) + c(j, i));

  std::vector<double> vt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

  const double target = options.relative_tolerance * norm;
  const double negligible = 1e-18 * norm;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p * n + q]) <= negligible) continue;
        rotate(a, vt, n, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });

  EigenPairs out;
  out.values.reserve(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.values.push_back(a[src * n + src]);
    const double* v = &vt[src * n];
    std::size_t pivot = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(v[k]) > std::abs(v[pivot])) pivot = k;
    const double sign = v[pivot] < 0.0 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = sign * v[k];
  }
  return out;
}

EigenPairs sym_eig_top_r(const Matrix& c, std::size_t r, const JacobiOptions& options) {
  if (r < 1 || r > c.rows()) {
    throw DimensionError("sym_eig_top_r: r=" + std::to_string(r) + " outside [1, " +
                         std::to_string(c.rows()) + "]");
  }
  EigenPairs full = sym_eig(c, options);
  full.values.resize(r);
  full.vectors = full.vectors.leading_columns(r);
  return full;
}

}  // namespace fairdim
