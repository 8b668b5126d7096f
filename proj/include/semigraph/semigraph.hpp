#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semigraph/errors.hpp"
#include "semigraph/quarter.hpp"

namespace semigraph {

using VertexIndex = std::ptrdiff_t;

// Role of a vertex across all its edges. A vertex can be an endpoint of
// some edges and an interior vertex of others at the same time; that mixed
// role (MiddleEnd) is what halves and quarters adjacency weights.
enum class VertexClass { PureEnd, PureMiddle, MiddleEnd, Isolated };

// Full: both endpoints are pure ends. HalfOnePartial: exactly one endpoint
// is middle-end. HalfTwoPartial: both endpoints middle-end, size >= 3.
// Quarter: a 2-edge whose both vertices are middle-end.
enum class EdgeClass { Full, HalfOnePartial, HalfTwoPartial, Quarter };

// How an unordered vertex pair sits inside its (unique) common edge.
enum class PairKind { Consecutive, DistancePair, PartialHalfEdge, QuarterEdge };

std::string_view to_string(VertexClass c);
std::string_view to_string(EdgeClass c);
std::string_view to_string(PairKind k);

// Ordered tuple of >= 2 distinct vertices. An edge equals its reversal;
// canonicalize() fixes the orientation with first index <= last index so
// equal edges compare equal after normalization.
class Edge {
 public:
  explicit Edge(std::vector<VertexIndex> vertices);

  std::size_t size() const { return verts_.size(); }
  VertexIndex operator[](std::size_t pos) const { return verts_[pos]; }
  const std::vector<VertexIndex>& vertices() const { return verts_; }
  VertexIndex first() const { return verts_.front(); }
  VertexIndex last() const { return verts_.back(); }

  bool contains(VertexIndex v) const;
  std::optional<std::size_t> position(VertexIndex v) const;
  bool is_end(VertexIndex v) const { return v == first() || v == last(); }
  bool is_middle(VertexIndex v) const { return contains(v) && !is_end(v); }

  Edge reversed() const;
  void canonicalize();

  // Number of shared vertices with another edge.
  std::size_t overlap(const Edge& other) const;

  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  std::vector<VertexIndex> verts_;
};

// Edge-class census (m = full + quarter + half_one_partial + half_two_partial).
struct EdgeCensus {
  std::int64_t full = 0;
  std::int64_t quarter = 0;
  std::int64_t half_one_partial = 0;
  std::int64_t half_two_partial = 0;

  std::int64_t total() const { return full + quarter + half_one_partial + half_two_partial; }
  friend bool operator==(const EdgeCensus&, const EdgeCensus&) = default;
};

// Kind plus positional distance of a pair inside its edge; weight() is the
// adjacency contribution (1 consecutive, l at distance l, 1/2 partial half,
// 1/4 quarter).
struct PairRole {
  PairKind kind = PairKind::Consecutive;
  int distance = 1;

  Quarter weight() const {
    switch (kind) {
      case PairKind::Consecutive: return Quarter::whole(1);
      case PairKind::DistancePair: return Quarter::whole(distance);
      case PairKind::PartialHalfEdge: return Quarter::half();
      case PairKind::QuarterEdge: return Quarter::quarter();
    }
    return Quarter();
  }

  friend bool operator==(const PairRole&, const PairRole&) = default;
};

// Vertex labels plus the edge list. Immutable once constructed; the
// constructor enforces the axioms (n >= 2, distinct vertices within an
// edge, pairwise edge intersection of at most one vertex, no duplicate
// edges up to reversal) and precomputes end/middle incidence flags.
class Semigraph {
 public:
  Semigraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexIndex v) const;
  std::optional<VertexIndex> index_of(std::string_view label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t k) const;

  bool is_end_vertex(VertexIndex v) const;
  bool is_middle_vertex(VertexIndex v) const;
  VertexClass vertex_class(VertexIndex v) const;

 private:
  void check_vertex(VertexIndex v) const;

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> end_flag_;
  std::vector<std::uint8_t> middle_flag_;
  std::map<std::string, VertexIndex, std::less<>> index_;
};

VertexClass classify_vertex(const Semigraph& g, VertexIndex v);
EdgeClass classify_edge(const Semigraph& g, std::size_t edge_index);
EdgeCensus edge_census(const Semigraph& g);

// Unordered vertex pair, normalized to first < second.
using VertexPair = std::pair<VertexIndex, VertexIndex>;

inline VertexPair make_pair_key(VertexIndex a, VertexIndex b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// All C(l,2) pairs of one edge with their roles. Endpoint classes are taken
// from the whole semigraph, so the same edge shape can carry different
// weights in different hosts.
std::map<VertexPair, PairRole> pair_kinds(const Semigraph& g, std::size_t edge_index);

// Union over all edges. Well-defined because two edges share at most one
// vertex, hence no pair occurs in two edges.
std::map<VertexPair, PairRole> pair_kinds_all(const Semigraph& g);

// Positional distance |i - j| of two vertices on one edge.
int edge_distance(const Edge& e, VertexIndex u, VertexIndex v);

// Simple graph connecting exactly the consecutively adjacent pairs.
struct Skeleton {
  std::size_t vertex_count = 0;
  std::vector<VertexPair> edges;  // sorted, unique
};

Skeleton skeleton(const Semigraph& g);

// True iff all vertices are joined by chains of edges; computed by
// union-find over each edge's vertex set. Equivalent to the skeleton being
// connected with no isolated vertex.
bool is_connected(const Semigraph& g);

}  // namespace semigraph
