#include "semigraph/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace semigraph {

Spectrum eigenvalues_sym(const SymmetricQMatrix& m, const JacobiOptions& opts) {
  JacobiResult r = jacobi_eigenvalues(m.real_view(), opts.tol, opts.max_sweeps);
  Spectrum s;
  s.values = std::move(r.values);
  s.tol = opts.tol;
  s.sweeps = r.sweeps;
  return s;
}

std::vector<std::pair<double, std::int64_t>> multiplicity_clusters(const Spectrum& s, double gap) {
  std::vector<std::pair<double, std::int64_t>> clusters;
  const Eigen::Index n = s.values.size();
  if (n == 0) return clusters;
  if (gap <= 0.0) gap = 1e-7 * std::max(1.0, std::abs(s.lambda_max()));

  double sum = s.values(0);
  std::int64_t count = 1;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (s.values(i) - s.values(i - 1) > gap) {
      clusters.emplace_back(sum / static_cast<double>(count), count);
      sum = 0.0;
      count = 0;
    }
    sum += s.values(i);
    ++count;
  }
  clusters.emplace_back(sum / static_cast<double>(count), count);
  return clusters;
}

bool is_psd(const SymmetricQMatrix& m, double tol, const JacobiOptions& opts) {
  return eigenvalues_sym(m, opts).lambda_min() >= -tol * m.frobenius();
}

double algebraic_connectivity(const Semigraph& g, const JacobiOptions& opts) {
  return eigenvalues_sym(laplacian(g), opts).values(1);
}

bool is_connected_spectral(const Semigraph& g, double tol, const JacobiOptions& opts) {
  const Spectrum s = eigenvalues_sym(laplacian(g), opts);
  return s.values(1) > tol * std::max(1.0, s.lambda_max());
}

}  // namespace semigraph
