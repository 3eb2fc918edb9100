// Test-only reference computations. Nothing here calls into the library's
// eigensolver, covariance blend or search, so these can check them.
#ifndef FAIRDIM_TESTS_ORACLES_HPP
#define FAIRDIM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fairdim/dataset.hpp"
#include "fairdim/matrix.hpp"

namespace oracle {

using fairdim::Matrix;

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  std::vector<double> v(rows * cols);
  for (double& x : v) x = dist(rng);
  return Matrix(rows, cols, std::move(v));
}

inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t d) {
  Matrix a = random_matrix(rng, d, d);
  Matrix s(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

// Modified Gram-Schmidt on the columns of a random Gaussian matrix.
inline Matrix random_orthonormal(std::mt19937_64& rng, std::size_t d, std::size_t r) {
  Matrix q = random_matrix(rng, d, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double dot = 0.0;
      for (std::size_t i = 0; i < d; ++i) dot += q(i, j) * q(i, k);
      for (std::size_t i = 0; i < d; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += q(i, j) * q(i, j);
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < d; ++i) q(i, j) /= norm;
  }
  return q;
}

// tr(Q^T C Q), element by element.
inline double trace_quadratic(const Matrix& c, const Matrix& q) {
  double t = 0.0;
  for (std::size_t j = 0; j < q.cols(); ++j)
    for (std::size_t a = 0; a < c.rows(); ++a)
      for (std::size_t b = 0; b < c.cols(); ++b) t += q(a, j) * c(a, b) * q(b, j);
  return t;
}

// Roots of the characteristic polynomial of [[a, b], [b, c]], larger first.
inline std::pair<double, double> eig2x2(double a, double b, double c) {
  const double mean = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), b);
  return {mean + radius, mean - radius};
}

// Unit eigenvector of the larger eigenvalue of [[a, b], [b, c]].
inline std::pair<double, double> top_vector2x2(double a, double b, double c) {
  const double theta = 0.5 * std::atan2(2.0 * b, a - c);
  return {std::cos(theta), std::sin(theta)};
}

// Row-by-row sums of x_i x_i^T / count.
inline Matrix second_moment(const Matrix& x, std::size_t count) {
  Matrix m(x.cols(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t a = 0; a < x.cols(); ++a)
      for (std::size_t b = 0; b < x.cols(); ++b) m(a, b) += x(i, a) * x(i, b) / static_cast<double>(count);
  return m;
}

// Mean of ||x_i - (x_i . u) u||^2 for a unit vector u.
inline double residual_along(const Matrix& x, std::pair<double, double> u) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double px = x(i, 0);
    const double py = x(i, 1);
    const double dot = px * u.first + py * u.second;
    sum += px * px + py * py - dot * dot;
  }
  return sum / static_cast<double>(x.rows());
}

/*
 Rank-1 fair PCA on 2-D data, from scratch. `privileged` / `harmed` are the
 group matrices. sign = +1 blends (C_B - C_A), sign = -1 the mirrored
 (C_A - C_B). Returns (err_privileged, err_harmed) at alpha.
*/
struct TwoDimFairPca {
  Matrix total;
  Matrix moment_a;
  Matrix moment_b;
  const Matrix* x_a;
  const Matrix* x_b;

  TwoDimFairPca(const Matrix& x, const Matrix& privileged, const Matrix& harmed)
      : total(second_moment(x, x.rows())),
        moment_a(second_moment(privileged, privileged.rows())),
        moment_b(second_moment(harmed, harmed.rows())),
        x_a(&privileged),
        x_b(&harmed) {}

  std::pair<double, double> errors(double alpha, double sign = 1.0) const {
    const auto entry = [&](std::size_t i, std::size_t j) {
      return alpha * total(i, j) + (1.0 - alpha) * sign * (moment_b(i, j) - moment_a(i, j));
    };
    const auto u = top_vector2x2(entry(0, 0), entry(0, 1), entry(1, 1));
    return {residual_along(*x_a, u), residual_along(*x_b, u)};
  }

  double disparity(double alpha, double sign = 1.0) const {
    const auto [ea, eb] = errors(alpha, sign);
    return eb - ea;
  }
};

// alpha_k = k / (points - 1), k = 0..points-1.
inline std::vector<double> alpha_grid(std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t k = 0; k < points; ++k) g[k] = static_cast<double>(k) / static_cast<double>(points - 1);
  return g;
}

// ||P P^T - Q Q^T||_F.
inline double subspace_distance(const Matrix& p, const Matrix& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.rows(); ++j) {
      double pp = 0.0;
      double qq = 0.0;
      for (std::size_t k = 0; k < p.cols(); ++k) pp += p(i, k) * p(j, k);
      for (std::size_t k = 0; k < q.cols(); ++k) qq += q(i, k) * q(j, k);
      sum += (pp - qq) * (pp - qq);
    }
  }
  return std::sqrt(sum);
}

// Random grouped table with `n` rows, `d` features; group sizes roughly split.
inline fairdim::RawTable random_table(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  Matrix x = random_matrix(rng, n, d);
  // Give the columns different scales so the covariance is not isotropic.
  for (std::size_t j = 0; j < d; ++j) {
    const double s = 0.3 + static_cast<double>(j + 1);
    for (std::size_t i = 0; i < n; ++i) x(i, j) *= s;
  }
  std::vector<std::string> labels(n);
  std::bernoulli_distribution coin(0.35);
  for (auto& l : labels) l = coin(rng) ? "g2" : "g1";
  labels[0] = "g1";
  labels[n - 1] = "g2";
  return fairdim::make_table(std::move(x), std::move(labels));
}

}  // namespace oracle

#endif
