#include "semigraph/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semigraph {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(2.0 * sum);
}

double abs_sum(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) sum += std::abs(a(i, j));
  return sum;
}

}  // namespace

JacobiResult jacobi_eigenvalues(Eigen::MatrixXd a, double tol, int max_sweeps) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw ValidationError("matrix must be square");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");

  JacobiResult result;
  const double scale = a.norm();
  if (n == 0 || scale == 0.0) {
    result.values = Eigen::VectorXd::Zero(n);
    return result;
  }

  double off = off_diagonal_norm(a);
  while (off > tol * scale) {
    if (result.sweeps >= max_sweeps) throw ConvergenceError(off / scale, result.sweeps);
    // Rotate large entries first while the matrix is far from diagonal;
    // once it is nearly converged, entries below rounding relative to
    // their diagonal pair are flushed to zero. Both guards keep the 45
    // degree rotations inside eigenvalue clusters from endlessly
    // reshuffling noise-level coupling between clusters.
    const double thresh = result.sweeps < 3 ? 0.2 * abs_sum(a) / double(n * n) : 0.0;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double g = 100.0 * std::abs(apq);
        if (result.sweeps > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= thresh) continue;

        // Smaller-magnitude root of the angle equation keeps the rotation
        // well conditioned; for extreme angles t collapses to apq/h.
        const double h = a(q, q) - a(p, p);
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = akp - s * (akq + tau * akp);
          a(p, k) = a(k, p);
          a(k, q) = akq + s * (akp - tau * akq);
          a(q, k) = a(k, q);
        }
      }
    }
    ++result.sweeps;
    off = off_diagonal_norm(a);
  }

  result.values = a.diagonal();
  std::sort(result.values.begin(), result.values.end());
  return result;
}

}  // namespace semigraph
