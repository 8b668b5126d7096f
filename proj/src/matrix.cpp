#include "semigraph/matrix.hpp"

#include <stdexcept>

namespace semigraph {

SymmetricQMatrix::SymmetricQMatrix(CountMatrix counts) : counts_(std::move(counts)) {
  if (counts_.rows() != counts_.cols())
    throw ValidationError("symmetric matrix must be square");
  if (counts_ != counts_.transpose().eval())
    throw ValidationError("matrix entries must be symmetric");
}

Quarter SymmetricQMatrix::operator()(Eigen::Index i, Eigen::Index j) const {
  if (i < 0 || j < 0 || i >= order() || j >= order())
    throw std::out_of_range("matrix index out of range");
  return Quarter::from_counts(counts_(i, j));
}

SymmetricQMatrix adjacency(const Semigraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  CountMatrix counts = CountMatrix::Zero(n, n);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    for (const auto& [pair, role] : pair_kinds(g, k)) {
      const std::int64_t w = role.weight().count();
      counts(pair.first, pair.second) += w;
      counts(pair.second, pair.first) += w;
    }
  }
  return SymmetricQMatrix(std::move(counts));
}

DegreeVector degrees(const Semigraph& g) {
  return DegreeVector(adjacency(g).counts().rowwise().sum());
}

SymmetricQMatrix laplacian(const Semigraph& g) {
  CountMatrix counts = -adjacency(g).counts();
  counts.diagonal() = -counts.rowwise().sum();
  return SymmetricQMatrix(std::move(counts));
}

SymmetricQMatrix signless(const Semigraph& g) {
  CountMatrix counts = adjacency(g).counts();
  counts.diagonal() = counts.rowwise().sum();
  return SymmetricQMatrix(std::move(counts));
}

EdgeLaplacian edge_laplacian(const Semigraph& g, std::size_t edge_index) {
  const Edge& e = g.edge(edge_index);
  const auto l = static_cast<Eigen::Index>(e.size());
  const EdgeQuadraticForm form = edge_quadratic_form(g, edge_index);

  CountMatrix counts = CountMatrix::Zero(l, l);
  for (std::size_t j = 1; j + 1 <= e.size(); ++j) {
    for (std::size_t i = 1; i <= e.size() - j; ++i) {
      const std::int64_t w = form.mu(j, i).count();
      const auto a = static_cast<Eigen::Index>(j - 1);
      const auto b = static_cast<Eigen::Index>(j + i - 1);
      counts(a, b) -= w;
      counts(b, a) -= w;
      counts(a, a) += w;
      counts(b, b) += w;
    }
  }
  return EdgeLaplacian{SymmetricQMatrix(std::move(counts)), e.vertices()};
}

CountMatrix embed(const EdgeLaplacian& block, Eigen::Index n) {
  const auto l = block.matrix.order();
  CountMatrix out = CountMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < l; ++a) {
    for (Eigen::Index b = 0; b < l; ++b) {
      out(block.embedding[static_cast<std::size_t>(a)],
          block.embedding[static_cast<std::size_t>(b)]) += block.matrix.counts()(a, b);
    }
  }
  return out;
}

EdgeQuadraticForm edge_quadratic_form(const Semigraph& g, std::size_t edge_index) {
  const Edge& e = g.edge(edge_index);
  EdgeQuadraticForm form;
  form.edge_index = edge_index;
  form.size = e.size();
  form.first_partial = g.vertex_class(e.first()) == VertexClass::MiddleEnd;
  form.last_partial = g.vertex_class(e.last()) == VertexClass::MiddleEnd;
  return form;
}

double quadratic_form_direct(const SymmetricQMatrix& m,
                             const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != m.order()) throw ValidationError("vector length must match matrix order");
  return x.dot(m.real_view() * x);
}

namespace {

template <int Sign>
double form_decomposed(const Semigraph& g, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != static_cast<Eigen::Index>(g.vertex_count()))
    throw ValidationError("vector length must match vertex count");
  double total = 0.0;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const EdgeQuadraticForm form = edge_quadratic_form(g, k);
    for (std::size_t j = 1; j + 1 <= e.size(); ++j) {
      for (std::size_t i = 1; i <= e.size() - j; ++i) {
        const double term = x(e[j - 1]) + Sign * x(e[j + i - 1]);
        total += form.mu(j, i).to_double() * term * term;
      }
    }
  }
  return total;
}

}  // namespace

double quadratic_form_decomposed(const Semigraph& g, const Eigen::Ref<const Eigen::VectorXd>& x) {
  return form_decomposed<-1>(g, x);
}

double signless_form_decomposed(const Semigraph& g, const Eigen::Ref<const Eigen::VectorXd>& x) {
  return form_decomposed<+1>(g, x);
}

}  // namespace semigraph
