#pragma once

#include "semigraph/matrix.hpp"
#include "semigraph/poly.hpp"

namespace semigraph {

// Exact characteristic polynomial det(lambda I - M), coefficients c_0..c_n
// ascending. Always monic; c_{n-1} = -trace(M); c_0 = 0 whenever 0 is an
// eigenvalue (every Laplacian).
using CharPoly = Polynomial;

// Faddeev-LeVerrier recurrence. The matrix is scaled by 4 to an integer
// matrix N, the recurrence runs over big integers (every division by the
// step index is exact), and the coefficients are mapped back through
// lambda -> lambda/4: c_k(M) = c_k(N) / 4^(n-k).
CharPoly charpoly_exact(const SymmetricQMatrix& m);

}  // namespace semigraph
