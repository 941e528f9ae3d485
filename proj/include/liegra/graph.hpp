#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegra {

inline constexpr int kMaxVertices = 16;
using VertexMask = std::uint32_t;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or count is asked for beyond its configured cap.
class CapExceeded : public Error {
public:
  CapExceeded(const std::string& what, int cap)
      : Error(what + " exceeds cap " + std::to_string(cap)), cap_(cap) {}
  int cap() const { return cap_; }

private:
  int cap_;
};

/// Flow edge from `src` (upper vertex) to `dst` (lower vertex), 0-based.
struct Edge {
  int src = 0;
  int dst = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class Flavor {
  ConnectedSimple,  // dsGra: connected simple DAGs
  NcSimple,         // dsncGra: simple DAGs, connectivity not required
  Multi,            // dmGra: connected DAGs with parallel edges
  Oriented,         // any simple oriented graph, cycles allowed (counting only)
};

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Labeled simple directed graph on vertices 0..n-1 stored as out-neighbour masks.
///
/// The representation can hold self-loops, antiparallel pairs and cycles so that
/// malformed input survives parsing and is reported by validate().
class DirectedGraph {
public:
  DirectedGraph() = default;
  explicit DirectedGraph(int n);
  DirectedGraph(int n, std::initializer_list<Edge> edges);
  DirectedGraph(int n, std::span<const Edge> edges);

  int size() const { return n_; }
  bool has_edge(int u, int v) const { return (out_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v) { out_[u] &= ~(VertexMask{1} << v); }

  VertexMask out(int u) const { return out_[u]; }
  VertexMask in(int v) const;
  int out_degree(int u) const;
  int in_degree(int v) const;
  int edge_count() const;

  /// Edges sorted by (src, dst).
  std::vector<Edge> edges() const;

  /// Vertices without incoming edges (tops) and without outgoing edges (bottoms).
  VertexMask sources() const;
  VertexMask sinks() const;

  bool is_acyclic() const;
  bool is_connected() const;
  bool is_simple() const;  // no loops, no antiparallel pairs
  int component_count() const;

  /// Returns the graph in which input vertex v is renamed perm[v].
  DirectedGraph relabeled(std::span<const int> perm) const;

  /// Induced subgraph on `mask`, vertices renumbered in increasing order.
  DirectedGraph induced(VertexMask mask) const;

  /// Deterministic order: vertex count, then lexicographic sorted edge list.
  std::strong_ordering operator<=>(const DirectedGraph& other) const;
  bool operator==(const DirectedGraph& other) const;

  std::size_t hash() const;

private:
  int n_ = 0;
  std::array<VertexMask, kMaxVertices> out_{};
};

/// Directed graph allowing parallel edges (never antiparallel ones).
class MultiGraph {
public:
  MultiGraph() = default;
  explicit MultiGraph(int n);
  MultiGraph(int n, std::initializer_list<Edge> edges);
  static MultiGraph from_simple(const DirectedGraph& g);

  int size() const { return n_; }
  int multiplicity(int u, int v) const { return mult_[u][v]; }
  void add_edge(int u, int v, int count = 1);
  int edge_count() const;

  /// Edges sorted by (src, dst), repeated by multiplicity.
  std::vector<Edge> edges() const;
  DirectedGraph support() const;
  MultiGraph relabeled(std::span<const int> perm) const;

  std::strong_ordering operator<=>(const MultiGraph& other) const;
  bool operator==(const MultiGraph& other) const;

private:
  int n_ = 0;
  std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> mult_{};
};

enum class Violation {
  VertexCount,   // n outside 1..kMaxVertices
  SelfLoop,
  NotSimple,     // antiparallel or parallel pair
  Cycle,
  Disconnected,
};

std::string to_string(Violation v);

/// Empty result means the graph is valid for the flavor.
std::vector<Violation> validate(const DirectedGraph& g, Flavor flavor);
std::vector<Violation> validate(const MultiGraph& g);

/// Level assignment on top of a graph: level[v] in 1..k, level 1 at the bottom.
struct LeveledGraph {
  DirectedGraph graph;
  std::vector<int> level;
  int k = 0;

  bool is_valid() const;
  bool is_total() const;
  bool is_bowtie() const;
  std::vector<int> shape() const;  // vertex count per level, bottom first

  bool operator==(const LeveledGraph&) const = default;
};

/// Levels from longest path to a sink (bottoms sit on level 1).
LeveledGraph natural_leveling(const DirectedGraph& g);

// Small fixtures used across the library and its tests.
namespace shapes {
DirectedGraph vertex();
DirectedGraph chain(int n);          // 0 -> 1 -> ... -> n-1
DirectedGraph source_fork();         // 0 -> 1, 0 -> 2
DirectedGraph sink_join();           // 0 -> 2, 1 -> 2
DirectedGraph triangle();            // chain 0->1->2 plus 0->2
DirectedGraph diamond_with_tail();   // t -> a, t -> b, a -> c
DirectedGraph complete_bipartite(int tops, int bottoms);
DirectedGraph corolla_up(int r);     // one top joined to r bottoms
DirectedGraph corolla_down(int r);   // r tops joined to one bottom
}  // namespace shapes

}  // namespace liegra
