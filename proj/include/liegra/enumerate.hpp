#pragma once

#include <cstdint>
#include <vector>

#include "liegra/canonical.hpp"
#include "liegra/graph.hpp"

namespace liegra {

struct EnumerationCaps {
  int labeled = 6;     // labeled enumeration: n <= labeled
  int iso = 7;         // iso-class enumeration: n <= iso
  int leveled = 8;     // leveled enumeration: total vertices <= leveled
  int multi_edges = 4; // multigraphs: total edge count <= multi_edges

  /// Caps overridden by LIEGRA_CAP_LABELED / LIEGRA_CAP_ISO / LIEGRA_CAP_LEVELED.
  static EnumerationCaps from_environment();
};

/// Process-wide caps used when none are passed; starts from the environment.
EnumerationCaps& default_caps();

enum class Exec { Serial, Parallel };

/// Every valid labeled graph on n vertices exactly once, sorted by
/// (n, edge list). Oriented lists all 3^C(n,2) simple orientations.
std::vector<DirectedGraph> enumerate_labeled(int n, Flavor flavor, const EnumerationCaps& caps = default_caps(),
                                             Exec exec = Exec::Parallel);

/// Connected multigraphs on n vertices with at most `caps.multi_edges` edges.
std::vector<MultiGraph> enumerate_labeled_multi(int n, const EnumerationCaps& caps = default_caps());

struct IsoClass {
  DirectedGraph graph;  // canonical representative
  std::uint64_t aut_order = 1;
  std::uint64_t multiplicity = 1;  // labeled graphs in the class: n!/|Aut|
};

/// Isomorphism classes (ConnectedSimple or NcSimple) grown by sink extension.
/// Results are cached; the returned reference stays valid for the program's lifetime.
const std::vector<IsoClass>& enumerate_iso_classes(int n, Flavor flavor, const EnumerationCaps& caps = default_caps());

/// Same classes obtained by canonical dedup of the labeled enumeration.
std::vector<IsoClass> iso_classes_by_dedup(int n, Flavor flavor, const EnumerationCaps& caps = default_caps());

struct LeveledClass {
  LeveledGraph leveled;  // canonical representative, vertices sorted by level (bottom first)
  std::uint64_t aut_order = 1;
};

/// Leveled iso-classes with `shape[i]` vertices on level i+1 (bottom first).
/// `connected=false` yields the non-necessarily connected classes. Cached.
const std::vector<LeveledClass>& enumerate_leveled(const std::vector<int>& shape, bool connected = true,
                                                   const EnumerationCaps& caps = default_caps());

/// Every labeled leveled graph of the shape; vertices numbered level by level.
std::vector<LeveledGraph> enumerate_leveled_labeled(const std::vector<int>& shape, bool connected = true,
                                                    const EnumerationCaps& caps = default_caps());

std::uint64_t factorial(int n);

}  // namespace liegra
