#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "semigraph/jacobi.hpp"
#include "semigraph/matrix.hpp"

namespace semigraph {

struct JacobiOptions {
  double tol = 1e-12;   // relative off-diagonal Frobenius norm
  int max_sweeps = 100;
};

// Sorted eigenvalues with the solver settings that produced them.
struct Spectrum {
  Eigen::VectorXd values;  // nondecreasing
  double tol = 1e-12;
  int sweeps = 0;

  double lambda_min() const { return values(0); }
  double lambda_max() const { return values(values.size() - 1); }
};

Spectrum eigenvalues_sym(const SymmetricQMatrix& m, const JacobiOptions& opts = {});

// Group near-equal eigenvalues into (representative, count) clusters, in
// ascending order. A new cluster starts when the gap to the previous value
// exceeds the threshold; gap <= 0 selects 1e-7 * max(1, |lambda_n|), sized
// so that repeated family eigenvalues (1/2, (5 +- sqrt(5))/2) coalesce.
std::vector<std::pair<double, std::int64_t>> multiplicity_clusters(const Spectrum& s,
                                                                   double gap = 0.0);

// True iff the smallest eigenvalue is >= -tol * ||M||_F.
bool is_psd(const SymmetricQMatrix& m, double tol = 1e-8, const JacobiOptions& opts = {});

// Second-smallest Laplacian eigenvalue.
double algebraic_connectivity(const Semigraph& g, const JacobiOptions& opts = {});

// Spectral connectivity criterion: lambda_2 > tol * max(1, lambda_n).
// Agrees with the combinatorial is_connected on every valid semigraph.
bool is_connected_spectral(const Semigraph& g, double tol = 1e-8, const JacobiOptions& opts = {});

}  // namespace semigraph
