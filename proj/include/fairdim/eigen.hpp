#ifndef FAIRDIM_EIGEN_HPP
#define FAIRDIM_EIGEN_HPP

#include <cstddef>
#include <vector>

#include "fairdim/matrix.hpp"

namespace fairdim {

// Eigenvalues in descending algebraic order; column j of `vectors` pairs with values[j].
struct EigenPairs {
  std::vector<double> values;
  Matrix vectors;  // d x k, orthonormal columns
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;  // on off-diagonal Frobenius norm / ||C||_F
  int max_sweeps = 100;
};

/*
 Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

 Eigenvalues are sorted by algebraic value (not magnitude), ties keep the
 order the rotations left them in. Each eigenvector is flipped so its
 largest-magnitude component is positive (first such index on ties), which
 makes the output a pure function of the input bytes.

 Throws DimensionError for non-square input and NumericError when the
 skew max|c_ij - c_ji| exceeds 1e-9 * ||C||_F.
*/
EigenPairs sym_eig(const Matrix& c, const JacobiOptions& options = {});

// The r eigenpairs with the algebraically largest eigenvalues; 1 <= r <= c.rows().
EigenPairs sym_eig_top_r(const Matrix& c, std::size_t r, const JacobiOptions& options = {});

}  // namespace fairdim

#endif
