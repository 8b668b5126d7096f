#include "semigraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace semigraph {

DegreeProfile degree_profile(const Semigraph& g, VertexIndex i) {
  g.label(i);  // validates the index
  DegreeProfile p;
  p.vertex = i;
  for (const auto& [pair, role] : pair_kinds_all(g)) {
    if (pair.first != i && pair.second != i) continue;
    switch (role.kind) {
      case PairKind::Consecutive: p.d_s += role.weight(); break;
      case PairKind::PartialHalfEdge: p.d_half += role.weight(); break;
      case PairKind::QuarterEdge: p.d_quarter += role.weight(); break;
      case PairKind::DistancePair: p.d_l[role.distance] += role.weight(); break;
    }
  }
  return p;
}

Quarter CommonNeighborProfile::literal() const {
  Quarter c = Quarter::whole(c_s + c_half + c_quarter);
  for (const auto& [l, count] : c_l) c += Quarter::whole(l * count);
  return c;
}

Quarter CommonNeighborProfile::proof() const {
  Quarter c = Quarter::whole(c_s) + Quarter::half() * c_half + Quarter::quarter() * c_quarter;
  for (const auto& [l, count] : c_l) c += Quarter::whole(l * count);
  return c;
}

namespace {

CommonNeighborProfile common_profile_from(const std::map<VertexPair, PairRole>& roles,
                                          std::size_t n, VertexIndex i, VertexIndex j) {
  CommonNeighborProfile p;
  p.i = i;
  p.j = j;
  for (VertexIndex k = 0; k < static_cast<VertexIndex>(n); ++k) {
    if (k == i || k == j) continue;
    auto ki = roles.find(make_pair_key(k, i));
    auto kj = roles.find(make_pair_key(k, j));
    if (ki == roles.end() || kj == roles.end()) continue;
    if (ki->second != kj->second) continue;  // same kind and same distance
    switch (ki->second.kind) {
      case PairKind::Consecutive: ++p.c_s; break;
      case PairKind::PartialHalfEdge: ++p.c_half; break;
      case PairKind::QuarterEdge: ++p.c_quarter; break;
      case PairKind::DistancePair: ++p.c_l[ki->second.distance]; break;
    }
  }
  return p;
}

}  // namespace

CommonNeighborProfile common_profile(const Semigraph& g, VertexIndex i, VertexIndex j) {
  g.label(i);
  g.label(j);
  if (i == j) throw ValidationError("common-neighbor profile requires two distinct vertices");
  return common_profile_from(pair_kinds_all(g), g.vertex_count(), i, j);
}

Quarter lower_bound(const Semigraph& g) {
  if (g.edge_count() == 0)
    throw ValidationError("the eigenvalue bounds require at least one edge");
  return degrees(g).max() + Quarter::whole(1);
}

namespace {

struct UpperScan {
  Quarter value;
  VertexPair argmax;
};

UpperScan scan_upper(const Semigraph& g, UpperVariant variant) {
  const DegreeVector d = degrees(g);
  const auto roles = pair_kinds_all(g);
  std::optional<UpperScan> best;
  for (const auto& [pair, role] : roles) {
    (void)role;  // every stored pair has positive weight
    const CommonNeighborProfile c =
        common_profile_from(roles, g.vertex_count(), pair.first, pair.second);
    const Quarter value = d[pair.first] + d[pair.second] -
                          (variant == UpperVariant::Literal ? c.literal() : c.proof());
    if (!best || value > best->value) best = UpperScan{value, pair};
  }
  return *best;
}

void require_bound_hypotheses(const Semigraph& g) {
  if (g.edge_count() == 0)
    throw ValidationError("the eigenvalue bounds require at least one edge");
  if (!is_connected(g))
    throw ValidationError("the upper bound requires a connected semigraph");
}

}  // namespace

Quarter upper_bound(const Semigraph& g, UpperVariant variant) {
  require_bound_hypotheses(g);
  return scan_upper(g, variant).value;
}

BoundsReport bounds_report(const Semigraph& g, double tol, const JacobiOptions& opts) {
  require_bound_hypotheses(g);

  BoundsReport r;
  r.delta = degrees(g).max();
  r.lower = r.delta + Quarter::whole(1);
  const UpperScan lit = scan_upper(g, UpperVariant::Literal);
  const UpperScan prf = scan_upper(g, UpperVariant::Proof);
  r.upper_literal = lit.value;
  r.upper_proof = prf.value;
  r.argmax_literal = lit.argmax;
  r.argmax_proof = prf.argmax;

  r.lambda_n = eigenvalues_sym(laplacian(g), opts).lambda_max();
  r.tol = tol * std::max(1.0, r.lambda_n);
  r.lower_ok = r.lambda_n >= r.lower.to_double() - r.tol;
  r.upper_ok = r.lambda_n <= r.upper_proof.to_double() + r.tol;
  return r;
}

}  // namespace semigraph
