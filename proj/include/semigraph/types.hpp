#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace semigraph {

// Dense column-major storage, parameterized on the scalar: int64 quarter
// counts for exact assembly, double for eigensolving, and big integers for
// the exact characteristic polynomial all use the same shape.
template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CountMatrix = DenseMatrix<std::int64_t>;
using CountVector = DenseVector<std::int64_t>;

}  // namespace semigraph
