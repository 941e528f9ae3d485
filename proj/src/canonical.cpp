#include "liegra/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <tuple>

namespace liegra {

namespace {

// Colour refinement: a vertex's colour absorbs the multisets of colours of
// its out- and in-neighbours until the partition stops splitting. Ranks are
// assigned from sorted signatures so the result is labelling independent.
std::vector<int> refine(const DirectedGraph& g, std::span<const int> seed) {
  const int n = g.size();
  std::array<VertexMask, kMaxVertices> in{};
  for (int v = 0; v < n; ++v) in[v] = g.in(v);

  using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
  std::vector<int> color(n);
  {
    std::vector<std::tuple<int, int, int>> init(n);
    for (int v = 0; v < n; ++v) {
      init[v] = {seed.empty() ? 0 : seed[v], std::popcount(in[v]), g.out_degree(v)};
    }
    auto sorted = init;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), init[v]) - sorted.begin());
    }
  }
  int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  while (classes < n) {
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> outs, ins;
      for (VertexMask m = g.out(v); m != 0; m &= m - 1) outs.push_back(color[std::countr_zero(m)]);
      for (VertexMask m = in[v]; m != 0; m &= m - 1) ins.push_back(color[std::countr_zero(m)]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig[v] = {color[v], std::move(outs), std::move(ins)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int next_classes = static_cast<int>(sorted.size());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

struct Search {
  const DirectedGraph& g;
  VertexMask odd;
  int n;
  std::vector<int> cell_of_pos;              // refined colour required at each position
  std::vector<std::vector<int>> cell_members;
  std::array<int, kMaxVertices> placed{};    // placed[p] = vertex at position p
  std::array<std::uint32_t, kMaxVertices> cur{};
  std::array<std::uint32_t, kMaxVertices> best{};
  std::array<int, kMaxVertices> best_placed{};
  VertexMask used = 0;
  bool have_best = false;
  std::uint64_t count = 0;
  int best_sign = 1;
  bool conflict = false;

  std::uint32_t word(int p, int v) const {
    std::uint32_t w = 0;
    for (int q = 0; q < p; ++q) {
      const int u = placed[q];
      if (g.has_edge(v, u)) w |= std::uint32_t{1} << q;
      if (g.has_edge(u, v)) w |= std::uint32_t{1} << (16 + q);
    }
    return w;
  }

  int leaf_sign() const {
    if (odd == 0) return 1;
    std::array<int, kMaxVertices> pos{};
    for (int p = 0; p < n; ++p) pos[placed[p]] = p;
    int inversions = 0;
    for (int u = 0; u < n; ++u) {
      if (!((odd >> u) & 1U)) continue;
      for (int v = u + 1; v < n; ++v) {
        if (((odd >> v) & 1U) && pos[u] > pos[v]) ++inversions;
      }
    }
    return inversions % 2 == 0 ? 1 : -1;
  }

  // rel < 0: current prefix already beats the best code (or there is none);
  // rel == 0: current prefix equals the best code's prefix.
  bool dfs(int p, int rel) {
    if (p == n) {
      const int s = leaf_sign();
      if (rel < 0) {
        best = cur;
        best_placed = placed;
        have_best = true;
        count = 1;
        best_sign = s;
        conflict = false;
        return true;
      }
      ++count;
      if (s != best_sign) conflict = true;
      return false;
    }
    bool updated = false;
    for (int v : cell_members[cell_of_pos[p]]) {
      if ((used >> v) & 1U) continue;
      const std::uint32_t w = word(p, v);
      int r = rel;
      if (r == 0) {
        if (w > best[p]) continue;
        if (w < best[p]) r = -1;
      }
      cur[p] = w;
      placed[p] = v;
      used |= VertexMask{1} << v;
      if (dfs(p + 1, r)) {
        updated = true;
        rel = 0;
      }
      used &= ~(VertexMask{1} << v);
    }
    return updated;
  }
};

}  // namespace

int koszul_sign(std::span<const int> relabel, VertexMask odd) {
  int inversions = 0;
  const int n = static_cast<int>(relabel.size());
  for (int u = 0; u < n; ++u) {
    if (!((odd >> u) & 1U)) continue;
    for (int v = u + 1; v < n; ++v) {
      if (((odd >> v) & 1U) && relabel[u] > relabel[v]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

CanonicalForm canonicalize(const DirectedGraph& g, std::span<const int> colors, VertexMask odd) {
  const int n = g.size();
  if (!colors.empty() && static_cast<int>(colors.size()) != n) {
    throw Error("canonicalize: colour count does not match vertex count");
  }
  const std::vector<int> refined = refine(g, colors);
  const int classes = n == 0 ? 0 : *std::max_element(refined.begin(), refined.end()) + 1;

  Search s{g, odd, n, {}, std::vector<std::vector<int>>(classes)};
  for (int v = 0; v < n; ++v) s.cell_members[refined[v]].push_back(v);
  for (int c = 0; c < classes; ++c) {
    for (std::size_t i = 0; i < s.cell_members[c].size(); ++i) s.cell_of_pos.push_back(c);
  }
  s.dfs(0, -1);

  CanonicalForm cf;
  cf.relabel.assign(n, 0);
  for (int p = 0; p < n; ++p) cf.relabel[s.best_placed[p]] = p;
  cf.graph = g.relabeled(cf.relabel);
  if (!colors.empty()) {
    cf.colors.assign(n, 0);
    for (int v = 0; v < n; ++v) cf.colors[cf.relabel[v]] = colors[v];
  }
  cf.aut_order = s.count;
  cf.sign = s.conflict ? 0 : s.best_sign;
  return cf;
}

std::uint64_t aut_order(const DirectedGraph& g) { return canonicalize(g).aut_order; }

std::uint64_t leveled_aut_order(const LeveledGraph& lg) {
  return canonicalize(lg.graph, lg.level).aut_order;
}

MultiGraph canonical_multigraph(const MultiGraph& g) {
  const int n = g.size();
  const std::vector<int> refined = refine(g.support(), {});
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return refined[a] < refined[b]; });
  // Enumerate permutations within each refined cell.
  std::vector<int> perm(n);
  MultiGraph best;
  bool have = false;
  std::vector<int> slots = order;
  std::function<void(int)> rec;
  std::vector<bool> used(n, false);
  std::vector<int> assignment(n);
  rec = [&](int p) {
    if (p == n) {
      for (int q = 0; q < n; ++q) perm[assignment[q]] = q;
      MultiGraph c = g.relabeled(perm);
      if (!have || c < best) {
        best = c;
        have = true;
      }
      return;
    }
    const int want = refined[slots[p]];
    for (int v = 0; v < n; ++v) {
      if (used[v] || refined[v] != want) continue;
      used[v] = true;
      assignment[p] = v;
      rec(p + 1);
      used[v] = false;
    }
  };
  rec(0);
  return best;
}

std::uint64_t linear_extension_count(const DirectedGraph& g) {
  const int n = g.size();
  std::array<VertexMask, kMaxVertices> preds{};
  for (int v = 0; v < n; ++v) preds[v] = g.in(v);
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::size_t s = 0; s < ways.size(); ++s) {
    if (ways[s] == 0) continue;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) continue;
      if ((preds[v] & ~static_cast<VertexMask>(s)) != 0) continue;
      ways[s | (std::size_t{1} << v)] += ways[s];
    }
  }
  return ways.back();
}

std::uint64_t levelization_count(const DirectedGraph& g) {
  const std::uint64_t ext = linear_extension_count(g);
  const std::uint64_t aut = aut_order(g);
  if (ext % aut != 0) throw Error("levelization_count: automorphism action on linear extensions is not free");
  return ext / aut;
}

}  // namespace liegra
