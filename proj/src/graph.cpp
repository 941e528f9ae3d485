#include "liegra/graph.hpp"

#include <algorithm>
#include <bit>

namespace liegra {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
}

// Walks the (src, dst) edge sequence of a mask-based graph in sorted order.
class EdgeCursor {
public:
  EdgeCursor(const DirectedGraph& g) : g_(g) { advance_src(); }
  bool done() const { return src_ >= g_.size(); }
  int code() const { return src_ * kMaxVertices + std::countr_zero(rest_); }
  void next() {
    rest_ &= rest_ - 1;
    if (rest_ == 0) {
      ++src_;
      advance_src();
    }
  }

private:
  void advance_src() {
    while (src_ < g_.size()) {
      rest_ = g_.out(src_);
      if (rest_ != 0) return;
      ++src_;
    }
  }
  const DirectedGraph& g_;
  int src_ = 0;
  VertexMask rest_ = 0;
};

}  // namespace

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::ConnectedSimple: return "connected-simple";
    case Flavor::NcSimple: return "nc-simple";
    case Flavor::Multi: return "multi";
    case Flavor::Oriented: return "oriented";
  }
  return "unknown";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "connected-simple" || s == "liegra" || s == "lie-gra") return Flavor::ConnectedSimple;
  if (s == "nc-simple" || s == "nc" || s == "ncgra") return Flavor::NcSimple;
  if (s == "multi" || s == "mgra") return Flavor::Multi;
  if (s == "oriented") return Flavor::Oriented;
  throw Error("unknown flavor '" + s + "'");
}

DirectedGraph::DirectedGraph(int n) : n_(n) { check_vertex_count(n); }

DirectedGraph::DirectedGraph(int n, std::initializer_list<Edge> edges)
    : DirectedGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

DirectedGraph::DirectedGraph(int n, std::span<const Edge> edges) : DirectedGraph(n) {
  for (const Edge& e : edges) add_edge(e.src, e.dst);
}

void DirectedGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                std::to_string(n_));
  }
  out_[u] |= VertexMask{1} << v;
}

VertexMask DirectedGraph::in(int v) const {
  VertexMask m = 0;
  for (int u = 0; u < n_; ++u) {
    if (has_edge(u, v)) m |= VertexMask{1} << u;
  }
  return m;
}

int DirectedGraph::out_degree(int u) const { return std::popcount(out_[u]); }
int DirectedGraph::in_degree(int v) const { return std::popcount(in(v)); }

int DirectedGraph::edge_count() const {
  int e = 0;
  for (int u = 0; u < n_; ++u) e += std::popcount(out_[u]);
  return e;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> result;
  for (int u = 0; u < n_; ++u) {
    for (VertexMask m = out_[u]; m != 0; m &= m - 1) result.push_back({u, std::countr_zero(m)});
  }
  return result;
}

VertexMask DirectedGraph::sources() const {
  VertexMask targets = 0;
  for (int u = 0; u < n_; ++u) targets |= out_[u];
  const VertexMask all = n_ == 32 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
  return all & ~targets;
}

VertexMask DirectedGraph::sinks() const {
  VertexMask m = 0;
  for (int u = 0; u < n_; ++u) {
    if (out_[u] == 0) m |= VertexMask{1} << u;
  }
  return m;
}

bool DirectedGraph::is_acyclic() const {
  // Kahn: repeatedly strip sinks.
  VertexMask alive = (VertexMask{1} << n_) - 1;
  while (alive != 0) {
    VertexMask strip = 0;
    for (VertexMask m = alive; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      if ((out_[u] & alive) == 0) strip |= VertexMask{1} << u;
    }
    if (strip == 0) return false;
    alive &= ~strip;
  }
  return true;
}

int DirectedGraph::component_count() const {
  std::array<VertexMask, kMaxVertices> nb{};
  for (int u = 0; u < n_; ++u) {
    nb[u] |= out_[u];
    for (VertexMask m = out_[u]; m != 0; m &= m - 1) nb[std::countr_zero(m)] |= VertexMask{1} << u;
  }
  VertexMask unseen = (VertexMask{1} << n_) - 1;
  int components = 0;
  while (unseen != 0) {
    ++components;
    VertexMask frontier = unseen & (~unseen + 1);
    VertexMask seen = frontier;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m != 0; m &= m - 1) next |= nb[std::countr_zero(m)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    unseen &= ~seen;
  }
  return components;
}

bool DirectedGraph::is_connected() const { return n_ >= 1 && component_count() == 1; }

bool DirectedGraph::is_simple() const {
  for (int u = 0; u < n_; ++u) {
    if (has_edge(u, u)) return false;
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v) && has_edge(v, u)) return false;
    }
  }
  return true;
}

DirectedGraph DirectedGraph::relabeled(std::span<const int> perm) const {
  DirectedGraph r(n_);
  for (int u = 0; u < n_; ++u) {
    for (VertexMask m = out_[u]; m != 0; m &= m - 1) {
      r.out_[perm[u]] |= VertexMask{1} << perm[std::countr_zero(m)];
    }
  }
  return r;
}

DirectedGraph DirectedGraph::induced(VertexMask mask) const {
  std::array<int, kMaxVertices> pos{};
  int k = 0;
  for (int u = 0; u < n_; ++u) pos[u] = (mask >> u) & 1U ? k++ : -1;
  DirectedGraph r(k);
  for (int u = 0; u < n_; ++u) {
    if (pos[u] < 0) continue;
    for (VertexMask m = out_[u] & mask; m != 0; m &= m - 1) {
      r.out_[pos[u]] |= VertexMask{1} << pos[std::countr_zero(m)];
    }
  }
  return r;
}

std::strong_ordering DirectedGraph::operator<=>(const DirectedGraph& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  EdgeCursor a(*this), b(other);
  while (!a.done() && !b.done()) {
    if (auto c = a.code() <=> b.code(); c != 0) return c;
    a.next();
    b.next();
  }
  if (a.done() && b.done()) return std::strong_ordering::equal;
  return a.done() ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool DirectedGraph::operator==(const DirectedGraph& other) const {
  if (n_ != other.n_) return false;
  return std::equal(out_.begin(), out_.begin() + n_, other.out_.begin());
}

std::size_t DirectedGraph::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (int u = 0; u < n_; ++u) h = (h ^ out_[u]) * 0x100000001b3ULL;
  return h;
}

MultiGraph::MultiGraph(int n) : n_(n) { check_vertex_count(n); }

MultiGraph::MultiGraph(int n, std::initializer_list<Edge> edges) : MultiGraph(n) {
  for (const Edge& e : edges) add_edge(e.src, e.dst);
}

MultiGraph MultiGraph::from_simple(const DirectedGraph& g) {
  MultiGraph m(g.size());
  for (const Edge& e : g.edges()) m.add_edge(e.src, e.dst);
  return m;
}

void MultiGraph::add_edge(int u, int v, int count) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("multigraph edge out of range");
  if (mult_[u][v] + count > 255) throw Error("edge multiplicity overflow");
  mult_[u][v] = static_cast<std::uint8_t>(mult_[u][v] + count);
}

int MultiGraph::edge_count() const {
  int e = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) e += mult_[u][v];
  }
  return e;
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> result;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      for (int c = 0; c < mult_[u][v]; ++c) result.push_back({u, v});
    }
  }
  return result;
}

DirectedGraph MultiGraph::support() const {
  DirectedGraph g(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (mult_[u][v] != 0) g.add_edge(u, v);
    }
  }
  return g;
}

MultiGraph MultiGraph::relabeled(std::span<const int> perm) const {
  MultiGraph r(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) r.mult_[perm[u]][perm[v]] = mult_[u][v];
  }
  return r;
}

std::strong_ordering MultiGraph::operator<=>(const MultiGraph& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  const auto a = edges();
  const auto b = other.edges();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool MultiGraph::operator==(const MultiGraph& other) const {
  if (n_ != other.n_) return false;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (mult_[u][v] != other.mult_[u][v]) return false;
    }
  }
  return true;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::VertexCount: return "vertex-count";
    case Violation::SelfLoop: return "self-loop";
    case Violation::NotSimple: return "simplicity";
    case Violation::Cycle: return "acyclicity";
    case Violation::Disconnected: return "connectivity";
  }
  return "unknown";
}

std::vector<Violation> validate(const DirectedGraph& g, Flavor flavor) {
  std::vector<Violation> out;
  if (g.size() < 1) {
    out.push_back(Violation::VertexCount);
    return out;
  }
  for (int u = 0; u < g.size(); ++u) {
    if (g.has_edge(u, u)) {
      out.push_back(Violation::SelfLoop);
      break;
    }
  }
  bool antiparallel = false;
  for (int u = 0; u < g.size() && !antiparallel; ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.has_edge(u, v) && g.has_edge(v, u)) antiparallel = true;
    }
  }
  if (antiparallel) out.push_back(Violation::NotSimple);
  if (flavor != Flavor::Oriented && !g.is_acyclic()) out.push_back(Violation::Cycle);
  if ((flavor == Flavor::ConnectedSimple || flavor == Flavor::Multi) && !g.is_connected()) {
    out.push_back(Violation::Disconnected);
  }
  return out;
}

std::vector<Violation> validate(const MultiGraph& g) {
  std::vector<Violation> out;
  if (g.size() < 1) {
    out.push_back(Violation::VertexCount);
    return out;
  }
  bool loop = false;
  bool antiparallel = false;
  for (int u = 0; u < g.size(); ++u) {
    if (g.multiplicity(u, u) != 0) loop = true;
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.multiplicity(u, v) != 0 && g.multiplicity(v, u) != 0) antiparallel = true;
    }
  }
  if (loop) out.push_back(Violation::SelfLoop);
  if (antiparallel) out.push_back(Violation::NotSimple);
  const DirectedGraph s = g.support();
  if (!s.is_acyclic()) out.push_back(Violation::Cycle);
  if (!s.is_connected()) out.push_back(Violation::Disconnected);
  return out;
}

bool LeveledGraph::is_valid() const {
  if (static_cast<int>(level.size()) != graph.size()) return false;
  for (int v = 0; v < graph.size(); ++v) {
    if (level[v] < 1 || level[v] > k) return false;
  }
  for (const Edge& e : graph.edges()) {
    if (level[e.src] <= level[e.dst]) return false;
  }
  return true;
}

bool LeveledGraph::is_total() const {
  if (k != graph.size()) return false;
  for (int c : shape()) {
    if (c != 1) return false;
  }
  return true;
}

bool LeveledGraph::is_bowtie() const { return k == 3 && shape()[1] == 1; }

std::vector<int> LeveledGraph::shape() const {
  std::vector<int> s(k, 0);
  for (int l : level) ++s[l - 1];
  return s;
}

LeveledGraph natural_leveling(const DirectedGraph& g) {
  LeveledGraph lg{g, std::vector<int>(g.size(), 0), 0};
  bool changed = true;
  for (int v = 0; v < g.size(); ++v) lg.level[v] = 1;
  while (changed) {
    changed = false;
    for (const Edge& e : g.edges()) {
      if (lg.level[e.src] <= lg.level[e.dst]) {
        lg.level[e.src] = lg.level[e.dst] + 1;
        changed = true;
        if (lg.level[e.src] > g.size()) throw Error("natural_leveling: graph has a cycle");
      }
    }
  }
  lg.k = g.size() == 0 ? 0 : *std::max_element(lg.level.begin(), lg.level.end());
  return lg;
}

namespace shapes {

DirectedGraph vertex() { return DirectedGraph(1); }

DirectedGraph chain(int n) {
  DirectedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

DirectedGraph source_fork() { return DirectedGraph(3, {{0, 1}, {0, 2}}); }
DirectedGraph sink_join() { return DirectedGraph(3, {{0, 2}, {1, 2}}); }
DirectedGraph triangle() { return DirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
DirectedGraph diamond_with_tail() { return DirectedGraph(4, {{0, 1}, {0, 2}, {1, 3}}); }

DirectedGraph complete_bipartite(int tops, int bottoms) {
  DirectedGraph g(tops + bottoms);
  for (int t = 0; t < tops; ++t) {
    for (int b = 0; b < bottoms; ++b) g.add_edge(t, tops + b);
  }
  return g;
}

DirectedGraph corolla_up(int r) { return complete_bipartite(1, r); }
DirectedGraph corolla_down(int r) { return complete_bipartite(r, 1); }

}  // namespace shapes

}  // namespace liegra
