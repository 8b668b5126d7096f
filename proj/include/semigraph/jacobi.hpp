#pragma once

#include <Eigen/Core>

#include "semigraph/errors.hpp"

namespace semigraph {

struct JacobiResult {
  Eigen::VectorXd values;  // ascending
  int sweeps = 0;
};

// Cyclic Jacobi eigensolver for dense symmetric matrices. Sweeps rotate
// every upper-triangle position in row order until the off-diagonal
// Frobenius norm drops below tol * ||A||_F. Throws ConvergenceError with
// the relative residual if max_sweeps is exhausted. Eigenvectors are not
// accumulated; only the spectrum is needed here.
JacobiResult jacobi_eigenvalues(Eigen::MatrixXd a, double tol, int max_sweeps);

}  // namespace semigraph
