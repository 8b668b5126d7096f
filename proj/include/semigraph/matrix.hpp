#pragma once

#include <cstddef>
#include <vector>

#include "semigraph/quarter.hpp"
#include "semigraph/semigraph.hpp"
#include "semigraph/types.hpp"

namespace semigraph {

// Dense symmetric matrix over exact quarter-integers. Entries are stored as
// int64 counts of 1/4 units; real_view() divides by 4, which is exact in
// binary floating point, so floats enter only at the eigensolver.
class SymmetricQMatrix {
 public:
  SymmetricQMatrix() = default;
  explicit SymmetricQMatrix(CountMatrix counts);

  Eigen::Index order() const { return counts_.rows(); }
  Quarter operator()(Eigen::Index i, Eigen::Index j) const;
  const CountMatrix& counts() const { return counts_; }

  Eigen::MatrixXd real_view() const { return counts_.cast<double>() / 4.0; }
  Quarter trace() const { return Quarter::from_counts(counts_.trace()); }
  double frobenius() const { return real_view().norm(); }

  friend bool operator==(const SymmetricQMatrix&, const SymmetricQMatrix&) = default;

 private:
  CountMatrix counts_;
};

// Exact degree sequence (row sums of the adjacency matrix).
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(CountVector counts) : counts_(std::move(counts)) {}

  Eigen::Index size() const { return counts_.size(); }
  Quarter operator[](Eigen::Index i) const { return Quarter::from_counts(counts_(i)); }
  const CountVector& counts() const { return counts_; }

  Eigen::VectorXd real_view() const { return counts_.cast<double>() / 4.0; }
  Quarter sum() const { return Quarter::from_counts(counts_.sum()); }
  Quarter max() const { return Quarter::from_counts(counts_.maxCoeff()); }

 private:
  CountVector counts_;
};

// a_ij = weight of the pair (i,j) inside its unique common edge, 0 if the
// vertices share no edge; zero diagonal.
SymmetricQMatrix adjacency(const Semigraph& g);

DegreeVector degrees(const Semigraph& g);

// L = D - A. Row sums vanish exactly.
SymmetricQMatrix laplacian(const Semigraph& g);

// Q = D + A.
SymmetricQMatrix signless(const Semigraph& g);

// Laplacian of a single edge as an order-l block plus the embedding of
// local positions into global vertex indices. End-pair weights come from
// vertex classes in the full semigraph, which is what makes the embedded
// blocks sum to the global Laplacian.
struct EdgeLaplacian {
  SymmetricQMatrix matrix;
  std::vector<VertexIndex> embedding;  // local position -> vertex index
};

EdgeLaplacian edge_laplacian(const Semigraph& g, std::size_t edge_index);

// Scatter an edge Laplacian into an n x n count matrix.
CountMatrix embed(const EdgeLaplacian& block, Eigen::Index n);

// Coefficients mu(j,i) of the per-edge quadratic form
//   x^T L_e x = sum_{j=1..l-1} sum_{i=1..l-j} mu(j,i) (x_j - x_{j+i})^2
// (1-based positions). mu(j,i) = i, except that the consecutive end pairs
// (1,2) and (l-1,l) drop to 1/2 at a middle-end endpoint; on a 2-edge both
// drops can apply, giving 1/4.
struct EdgeQuadraticForm {
  std::size_t edge_index = 0;
  std::size_t size = 0;  // l
  bool first_partial = false;
  bool last_partial = false;

  Quarter mu(std::size_t j, std::size_t i) const {
    if (i >= 2) return Quarter::whole(static_cast<std::int64_t>(i));
    const int drops = (j == 1 && first_partial ? 1 : 0) + (j + 1 == size && last_partial ? 1 : 0);
    return Quarter::from_counts(4 >> drops);
  }
};

EdgeQuadraticForm edge_quadratic_form(const Semigraph& g, std::size_t edge_index);

// x^T M x evaluated on the real view.
double quadratic_form_direct(const SymmetricQMatrix& m, const Eigen::Ref<const Eigen::VectorXd>& x);

// The same value assembled from per-edge difference coefficients; each
// summand is a nonnegative multiple of a square, so the result is >= 0.
double quadratic_form_decomposed(const Semigraph& g, const Eigen::Ref<const Eigen::VectorXd>& x);

// Signless analogue: sums of squares of sums, equals x^T Q x.
double signless_form_decomposed(const Semigraph& g, const Eigen::Ref<const Eigen::VectorXd>& x);

}  // namespace semigraph
