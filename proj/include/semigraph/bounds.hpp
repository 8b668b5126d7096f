#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "semigraph/matrix.hpp"
#include "semigraph/spectrum.hpp"

namespace semigraph {

// Degree split by pair kind: d = d_s + d_half + d_quarter + sum_l d_l.
// d_s collects weight-1 (consecutive) pairs, d_half the 1/2 partial pairs,
// d_quarter the 1/4 pairs, and d_l the distance-l pairs at weight l each.
struct DegreeProfile {
  VertexIndex vertex = 0;
  Quarter d_s;
  Quarter d_half;
  Quarter d_quarter;
  std::map<int, Quarter> d_l;  // l >= 2 -> summed weight (l per pair)

  Quarter total() const {
    Quarter t = d_s + d_half + d_quarter;
    for (const auto& [l, w] : d_l) t += w;
    return t;
  }
};

DegreeProfile degree_profile(const Semigraph& g, VertexIndex i);

// Common neighbors of a pair, counted only when the neighbor reaches both
// endpoints through pairs of the same kind (and, for distance pairs, the
// same distance l); mixed-kind neighbors cancel in no term of the upper
// bound's derivation and contribute zero. Two aggregate values:
//   literal = C_s + C_half + C_quarter + sum l*C_l
//   proof   = C_s + C_half/2 + C_quarter/4 + sum l*C_l
// literal counts each matching neighbor once regardless of weight; proof
// weights the halves and quarters as the derivation's subtraction does, so
// only the proof value yields a guaranteed bound. proof <= literal always.
struct CommonNeighborProfile {
  VertexIndex i = 0;
  VertexIndex j = 0;
  std::int64_t c_s = 0;
  std::int64_t c_half = 0;
  std::int64_t c_quarter = 0;
  std::map<int, std::int64_t> c_l;

  Quarter literal() const;
  Quarter proof() const;
};

CommonNeighborProfile common_profile(const Semigraph& g, VertexIndex i, VertexIndex j);

// Delta + 1 with Delta the maximum degree. Requires at least one edge.
Quarter lower_bound(const Semigraph& g);

enum class UpperVariant { Literal, Proof };

// max over semigraph-adjacent pairs (a_ij > 0) of d_i + d_j - C(i,j).
// Requires a connected semigraph with at least one edge; ties resolve to
// the first maximizing pair in index order.
Quarter upper_bound(const Semigraph& g, UpperVariant variant);

struct BoundsReport {
  Quarter delta;
  Quarter lower;          // delta + 1
  Quarter upper_literal;
  Quarter upper_proof;
  VertexPair argmax_literal{0, 0};
  VertexPair argmax_proof{0, 0};
  double lambda_n = 0.0;
  double tol = 0.0;       // absolute threshold used for the flags
  bool lower_ok = false;  // lambda_n >= lower - tol
  bool upper_ok = false;  // lambda_n <= upper_proof + tol
};

// Aggregates both bounds against the numeric extreme eigenvalue; flags use
// the scale-aware threshold tol * max(1, lambda_n). upper_ok always refers
// to the proof variant, the only one the derivation guarantees.
BoundsReport bounds_report(const Semigraph& g, double tol = 1e-8, const JacobiOptions& opts = {});

}  // namespace semigraph
