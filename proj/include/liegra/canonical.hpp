#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liegra/graph.hpp"

namespace liegra {

/// Canonical representative of a (vertex-coloured) graph.
///
/// Vertices are sorted by colour first, so `colors` is non-decreasing. The
/// representative is the colour-respecting relabelling with the smallest
/// adjacency code; `relabel[v]` is the canonical position of input vertex v.
struct CanonicalForm {
  DirectedGraph graph;
  std::vector<int> relabel;
  std::vector<int> colors;
  /// Koszul sign of `relabel` restricted to the odd vertices; 0 when some
  /// colour-preserving automorphism acts by an odd permutation on them.
  int sign = 1;
  /// Number of colour-preserving automorphisms.
  std::uint64_t aut_order = 1;
};

/// Colours are arbitrary non-negative ints (generator ids, levels, ...);
/// `odd` marks the vertices carrying odd-degree decorations.
CanonicalForm canonicalize(const DirectedGraph& g, std::span<const int> colors = {}, VertexMask odd = 0);

std::uint64_t aut_order(const DirectedGraph& g);
std::uint64_t leveled_aut_order(const LeveledGraph& lg);

/// Sign of the permutation `relabel` restricted to vertices in `odd`.
int koszul_sign(std::span<const int> relabel, VertexMask odd);

/// Multigraph canonical form by brute force over colour-respecting
/// permutations; multigraphs only appear at tiny sizes.
MultiGraph canonical_multigraph(const MultiGraph& g);

/// Number of total orders compatible with the flow (edge sources first).
std::uint64_t linear_extension_count(const DirectedGraph& g);

/// Total levelisations of the underlying unlabeled graph:
/// linear extensions divided by the automorphism order.
std::uint64_t levelization_count(const DirectedGraph& g);

}  // namespace liegra
