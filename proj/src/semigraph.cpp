#include "semigraph/semigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace semigraph {

namespace {

std::string describe_edge(const Semigraph& g, const Edge& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out << ',';
    out << g.label(e[i]);
  }
  out << ')';
  return out.str();
}

bool valid_label(const std::string& label) {
  if (label.empty() || label.front() == '#') return false;
  for (char c : label) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::PureEnd: return "pure_end";
    case VertexClass::PureMiddle: return "pure_middle";
    case VertexClass::MiddleEnd: return "middle_end";
    case VertexClass::Isolated: return "isolated";
  }
  return "?";
}

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Full: return "full";
    case EdgeClass::HalfOnePartial: return "half_one_partial";
    case EdgeClass::HalfTwoPartial: return "half_two_partial";
    case EdgeClass::Quarter: return "quarter";
  }
  return "?";
}

std::string_view to_string(PairKind k) {
  switch (k) {
    case PairKind::Consecutive: return "consecutive";
    case PairKind::DistancePair: return "distance";
    case PairKind::PartialHalfEdge: return "partial_half_edge";
    case PairKind::QuarterEdge: return "quarter_edge";
  }
  return "?";
}

Edge::Edge(std::vector<VertexIndex> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 2) throw ValidationError("an edge needs at least two vertices");
  auto sorted = verts_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("edge vertices must be pairwise distinct");
}

bool Edge::contains(VertexIndex v) const {
  return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

std::optional<std::size_t> Edge::position(VertexIndex v) const {
  auto it = std::find(verts_.begin(), verts_.end(), v);
  if (it == verts_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - verts_.begin());
}

Edge Edge::reversed() const {
  std::vector<VertexIndex> r(verts_.rbegin(), verts_.rend());
  return Edge(std::move(r));
}

void Edge::canonicalize() {
  if (first() > last()) std::reverse(verts_.begin(), verts_.end());
}

std::size_t Edge::overlap(const Edge& other) const {
  std::size_t shared = 0;
  for (VertexIndex v : verts_)
    if (other.contains(v)) ++shared;
  return shared;
}

Semigraph::Semigraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  if (n < 2) throw ValidationError("at least two vertices required (n >= 2)");
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_label(labels_[i]))
      throw ValidationError("invalid vertex label '" + labels_[i] + "'");
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<VertexIndex>(i));
    if (!inserted) throw ValidationError("duplicate vertex label '" + labels_[i] + "'");
  }

  end_flag_.assign(n, 0);
  middle_flag_.assign(n, 0);
  for (auto& e : edges_) {
    for (VertexIndex v : e.vertices()) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ValidationError("edge references unknown vertex index " + std::to_string(v));
    }
    e.canonicalize();
  }

  // Duplicate detection first (the sharper diagnostic), then the pairwise
  // intersection rule. Any unordered vertex pair occurring in two edges is
  // exactly an intersection of size >= 2.
  std::set<std::vector<VertexIndex>> seen;
  for (const auto& e : edges_) {
    if (!seen.insert(e.vertices()).second)
      throw ValidationError("duplicate edge " + describe_edge(*this, e));
  }
  std::map<VertexPair, std::size_t> pair_owner;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    for (std::size_t a = 0; a + 1 < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        auto [it, inserted] = pair_owner.emplace(make_pair_key(e[a], e[b]), k);
        if (!inserted) {
          const Edge& other = edges_[it->second];
          throw ValidationError("two distinct edges may share at most one vertex: " +
                                describe_edge(*this, other) + " and " + describe_edge(*this, e) +
                                " share {" + label(e[a]) + ", " + label(e[b]) + "}");
        }
      }
    }
  }

  for (const auto& e : edges_) {
    end_flag_[e.first()] = 1;
    end_flag_[e.last()] = 1;
    for (std::size_t i = 1; i + 1 < e.size(); ++i) middle_flag_[e[i]] = 1;
  }
}

void Semigraph::check_vertex(VertexIndex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= labels_.size())
    throw ValidationError("unknown vertex index " + std::to_string(v));
}

const std::string& Semigraph::label(VertexIndex v) const {
  check_vertex(v);
  return labels_[static_cast<std::size_t>(v)];
}

std::optional<VertexIndex> Semigraph::index_of(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Edge& Semigraph::edge(std::size_t k) const {
  if (k >= edges_.size()) throw ValidationError("edge index out of range");
  return edges_[k];
}

bool Semigraph::is_end_vertex(VertexIndex v) const {
  check_vertex(v);
  return end_flag_[static_cast<std::size_t>(v)] != 0;
}

bool Semigraph::is_middle_vertex(VertexIndex v) const {
  check_vertex(v);
  return middle_flag_[static_cast<std::size_t>(v)] != 0;
}

VertexClass Semigraph::vertex_class(VertexIndex v) const {
  const bool end = is_end_vertex(v);
  const bool middle = is_middle_vertex(v);
  if (end && middle) return VertexClass::MiddleEnd;
  if (end) return VertexClass::PureEnd;
  if (middle) return VertexClass::PureMiddle;
  return VertexClass::Isolated;
}

VertexClass classify_vertex(const Semigraph& g, VertexIndex v) { return g.vertex_class(v); }

EdgeClass classify_edge(const Semigraph& g, std::size_t edge_index) {
  const Edge& e = g.edge(edge_index);
  const bool first_me = g.vertex_class(e.first()) == VertexClass::MiddleEnd;
  const bool last_me = g.vertex_class(e.last()) == VertexClass::MiddleEnd;
  if (!first_me && !last_me) return EdgeClass::Full;
  if (first_me != last_me) return EdgeClass::HalfOnePartial;
  return e.size() == 2 ? EdgeClass::Quarter : EdgeClass::HalfTwoPartial;
}

EdgeCensus edge_census(const Semigraph& g) {
  EdgeCensus census;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    switch (classify_edge(g, k)) {
      case EdgeClass::Full: ++census.full; break;
      case EdgeClass::Quarter: ++census.quarter; break;
      case EdgeClass::HalfOnePartial: ++census.half_one_partial; break;
      case EdgeClass::HalfTwoPartial: ++census.half_two_partial; break;
    }
  }
  return census;
}

std::map<VertexPair, PairRole> pair_kinds(const Semigraph& g, std::size_t edge_index) {
  const Edge& e = g.edge(edge_index);
  const std::size_t l = e.size();
  const bool first_me = g.vertex_class(e.first()) == VertexClass::MiddleEnd;
  const bool last_me = g.vertex_class(e.last()) == VertexClass::MiddleEnd;

  std::map<VertexPair, PairRole> roles;
  for (std::size_t a = 0; a + 1 < l; ++a) {
    for (std::size_t b = a + 1; b < l; ++b) {
      const int dist = static_cast<int>(b - a);
      PairRole role;
      role.distance = dist;
      if (dist >= 2) {
        role.kind = PairKind::DistancePair;
      } else {
        // A consecutive end pair is partial exactly when the endpoint it
        // touches is middle-end; on a 2-edge both endpoints can qualify.
        const int partial_ends = (a == 0 && first_me ? 1 : 0) + (b == l - 1 && last_me ? 1 : 0);
        role.kind = partial_ends == 0   ? PairKind::Consecutive
                    : partial_ends == 1 ? PairKind::PartialHalfEdge
                                        : PairKind::QuarterEdge;
      }
      roles.emplace(make_pair_key(e[a], e[b]), role);
    }
  }
  return roles;
}

std::map<VertexPair, PairRole> pair_kinds_all(const Semigraph& g) {
  std::map<VertexPair, PairRole> all;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto roles = pair_kinds(g, k);
    all.insert(roles.begin(), roles.end());
  }
  return all;
}

int edge_distance(const Edge& e, VertexIndex u, VertexIndex v) {
  if (u == v) throw ValidationError("distance requires two distinct vertices");
  auto pu = e.position(u);
  auto pv = e.position(v);
  if (!pu || !pv) throw ValidationError("vertex not on edge");
  auto d = *pu > *pv ? *pu - *pv : *pv - *pu;
  return static_cast<int>(d);
}

Skeleton skeleton(const Semigraph& g) {
  std::set<VertexPair> pairs;
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) pairs.insert(make_pair_key(e[i], e[i + 1]));
  }
  Skeleton s;
  s.vertex_count = g.vertex_count();
  s.edges.assign(pairs.begin(), pairs.end());
  return s;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_connected(const Semigraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i)
      uf.unite(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[i]));
  }
  const std::size_t root = uf.find(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (uf.find(v) != root) return false;
  return true;
}

}  // namespace semigraph
