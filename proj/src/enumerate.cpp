#include "liegra/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liegra {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  return std::stoi(v);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool keep(const DirectedGraph& g, Flavor flavor) {
  switch (flavor) {
    case Flavor::Oriented: return true;
    case Flavor::NcSimple: return g.is_acyclic();
    case Flavor::ConnectedSimple: return g.is_connected() && g.is_acyclic();
    case Flavor::Multi: break;
  }
  return false;
}

// Orientation code: base-3 digit per unordered pair i<j (0 none, 1 i->j, 2 j->i).
DirectedGraph decode_orientation(int n, std::uint64_t code) {
  DirectedGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int digit = static_cast<int>(code % 3);
      code /= 3;
      if (digit == 1) g.add_edge(i, j);
      if (digit == 2) g.add_edge(j, i);
    }
  }
  return g;
}

}  // namespace

EnumerationCaps EnumerationCaps::from_environment() {
  EnumerationCaps caps;
  caps.labeled = env_int("LIEGRA_CAP_LABELED", caps.labeled);
  caps.iso = env_int("LIEGRA_CAP_ISO", caps.iso);
  caps.leveled = env_int("LIEGRA_CAP_LEVELED", caps.leveled);
  return caps;
}

EnumerationCaps& default_caps() {
  static EnumerationCaps caps = EnumerationCaps::from_environment();
  return caps;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<DirectedGraph> enumerate_labeled(int n, Flavor flavor, const EnumerationCaps& caps, Exec exec) {
  if (n < 1) throw Error("enumerate_labeled: n must be at least 1");
  if (n > caps.labeled) throw CapExceeded("labeled enumeration n=" + std::to_string(n), caps.labeled);
  if (flavor == Flavor::Multi) throw Error("enumerate_labeled: use enumerate_labeled_multi for multigraphs");
  const std::uint64_t total = ipow(3, n * (n - 1) / 2);
  std::vector<DirectedGraph> result;
  if (exec == Exec::Serial) {
    for (std::uint64_t code = 0; code < total; ++code) {
      DirectedGraph g = decode_orientation(n, code);
      if (keep(g, flavor)) result.push_back(g);
    }
  } else {
    std::vector<std::vector<DirectedGraph>> parts;
#pragma omp parallel
    {
#ifdef _OPENMP
#pragma omp single
      parts.resize(static_cast<std::size_t>(omp_get_num_threads()));
      const int tid = omp_get_thread_num();
#else
      parts.resize(1);
      const int tid = 0;
#endif
      std::vector<DirectedGraph>& mine = parts[static_cast<std::size_t>(tid)];
#pragma omp for schedule(static)
      for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code) {
        DirectedGraph g = decode_orientation(n, static_cast<std::uint64_t>(code));
        if (keep(g, flavor)) mine.push_back(g);
      }
    }
    for (auto& p : parts) result.insert(result.end(), p.begin(), p.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<MultiGraph> enumerate_labeled_multi(int n, const EnumerationCaps& caps) {
  if (n < 1) throw Error("enumerate_labeled_multi: n must be at least 1");
  if (n > caps.labeled) throw CapExceeded("labeled enumeration n=" + std::to_string(n), caps.labeled);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int e_max = caps.multi_edges;
  std::vector<MultiGraph> result;
  // Signed multiplicity per pair: positive i->j, negative j->i.
  std::vector<int> mult(pairs.size(), 0);
  auto emit = [&]() {
    MultiGraph g(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mult[p] > 0) g.add_edge(pairs[p].first, pairs[p].second, mult[p]);
      if (mult[p] < 0) g.add_edge(pairs[p].second, pairs[p].first, -mult[p]);
    }
    if (validate(g).empty()) result.push_back(g);
  };
  auto rec = [&](auto&& self, std::size_t p, int budget) -> void {
    if (p == pairs.size()) {
      emit();
      return;
    }
    for (int m = -budget; m <= budget; ++m) {
      mult[p] = m;
      self(self, p + 1, budget - std::abs(m));
    }
    mult[p] = 0;
  };
  rec(rec, 0, e_max);
  std::sort(result.begin(), result.end());
  return result;
}

const std::vector<IsoClass>& enumerate_iso_classes(int n, Flavor flavor, const EnumerationCaps& caps) {
  if (n < 1) throw Error("enumerate_iso_classes: n must be at least 1");
  if (n > caps.iso) throw CapExceeded("iso-class enumeration n=" + std::to_string(n), caps.iso);
  if (flavor != Flavor::ConnectedSimple && flavor != Flavor::NcSimple) {
    throw Error("enumerate_iso_classes: only simple flavors are supported");
  }
  static std::mutex mu;
  static std::map<int, std::vector<DirectedGraph>> all_dags;  // every DAG class, by n
  static std::map<std::pair<int, bool>, std::vector<IsoClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(n, flavor == Flavor::ConnectedSimple);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // Every DAG has a sink; removing it leaves a DAG on n-1 vertices.
  if (all_dags.empty()) all_dags[1] = {DirectedGraph(1)};
  for (int m = static_cast<int>(all_dags.rbegin()->first) + 1; m <= n; ++m) {
    std::set<DirectedGraph> seen;
    for (const DirectedGraph& h : all_dags[m - 1]) {
      for (VertexMask parents = 0; parents < (VertexMask{1} << (m - 1)); ++parents) {
        DirectedGraph g(m);
        for (const Edge& e : h.edges()) g.add_edge(e.src, e.dst);
        for (VertexMask p = parents; p != 0; p &= p - 1) g.add_edge(std::countr_zero(p), m - 1);
        seen.insert(canonicalize(g).graph);
      }
    }
    all_dags[m].assign(seen.begin(), seen.end());
  }

  std::vector<IsoClass> classes;
  const std::uint64_t nfact = factorial(n);
  for (const DirectedGraph& g : all_dags[n]) {
    if (flavor == Flavor::ConnectedSimple && !g.is_connected()) continue;
    const std::uint64_t aut = aut_order(g);
    classes.push_back({g, aut, nfact / aut});
  }
  return cache[key] = std::move(classes);
}

std::vector<IsoClass> iso_classes_by_dedup(int n, Flavor flavor, const EnumerationCaps& caps) {
  std::map<DirectedGraph, IsoClass> seen;
  for (const DirectedGraph& g : enumerate_labeled(n, flavor, caps)) {
    CanonicalForm cf = canonicalize(g);
    auto [it, fresh] = seen.try_emplace(cf.graph, IsoClass{cf.graph, cf.aut_order, 0});
    ++it->second.multiplicity;
  }
  std::vector<IsoClass> out;
  for (auto& [g, c] : seen) out.push_back(c);
  return out;
}

std::vector<LeveledGraph> enumerate_leveled_labeled(const std::vector<int>& shape, bool connected,
                                                    const EnumerationCaps& caps) {
  int total = 0;
  for (int s : shape) {
    if (s < 0) throw Error("enumerate_leveled: negative level size");
    total += s;
  }
  if (total < 1) throw Error("enumerate_leveled: shape has no vertices");
  if (total > caps.leveled) throw CapExceeded("leveled enumeration with " + std::to_string(total) + " vertices", caps.leveled);
  const int k = static_cast<int>(shape.size());
  std::vector<int> level;
  for (int l = 0; l < k; ++l) level.insert(level.end(), shape[l], l + 1);
  std::vector<Edge> slots;
  for (int u = 0; u < total; ++u) {
    for (int v = 0; v < total; ++v) {
      if (level[u] > level[v]) slots.push_back({u, v});
    }
  }
  if (slots.size() > 24) throw CapExceeded("leveled enumeration edge slots", 24);
  std::vector<LeveledGraph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    DirectedGraph g(total);
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const Edge& e = slots[static_cast<std::size_t>(std::countr_zero(m))];
      g.add_edge(e.src, e.dst);
    }
    if (connected && !g.is_connected()) continue;
    out.push_back({g, level, k});
  }
  return out;
}

const std::vector<LeveledClass>& enumerate_leveled(const std::vector<int>& shape, bool connected,
                                                   const EnumerationCaps& caps) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<int>, bool>, std::vector<LeveledClass>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({shape, connected}); it != cache.end()) return it->second;
  }
  std::map<DirectedGraph, LeveledClass> seen;
  for (const LeveledGraph& lg : enumerate_leveled_labeled(shape, connected, caps)) {
    CanonicalForm cf = canonicalize(lg.graph, lg.level);
    if (seen.contains(cf.graph)) continue;
    LeveledGraph rep{cf.graph, cf.colors, lg.k};
    seen.emplace(cf.graph, LeveledClass{std::move(rep), cf.aut_order});
  }
  std::vector<LeveledClass> classes;
  for (auto& [g, c] : seen) classes.push_back(std::move(c));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace({shape, connected}, std::move(classes)).first->second;
}

}  // namespace liegra
