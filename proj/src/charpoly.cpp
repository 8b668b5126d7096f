#include "semigraph/charpoly.hpp"

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/eigen.hpp>

#include "semigraph/types.hpp"

namespace semigraph {

CharPoly charpoly_exact(const SymmetricQMatrix& m) {
  const Eigen::Index n = m.order();
  const DenseMatrix<BigInt> a = m.counts().cast<BigInt>();  // 4M, exact integers

  // c[k] accumulates the coefficient of mu^k in det(mu I - 4M).
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;

  DenseMatrix<BigInt> mk = a;
  for (Eigen::Index k = 1; k <= n; ++k) {
    BigInt tr = 0;
    for (Eigen::Index i = 0; i < n; ++i) tr += mk(i, i);
    BigInt q, r;
    divide_qr(tr, BigInt(k), q, r);
    if (r != 0) throw std::logic_error("charpoly recurrence produced a non-integer trace step");
    c[static_cast<std::size_t>(n - k)] = -q;
    if (k < n) {
      for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k)];
      mk = (a * mk).eval();
    }
  }

  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  BigInt pow4 = 1;  // 4^(n-k), built from the leading coefficient down
  for (Eigen::Index k = n; k >= 0; --k) {
    coeffs[static_cast<std::size_t>(k)] = Rational(c[static_cast<std::size_t>(k)], pow4);
    if (k > 0) pow4 *= 4;
  }
  return CharPoly(std::move(coeffs));
}

}  // namespace semigraph
