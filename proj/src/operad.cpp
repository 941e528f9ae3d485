#include "liegra/operad.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "liegra/canonical.hpp"
#include "liegra/enumerate.hpp"
#include "liegra/io.hpp"

namespace liegra {

namespace {

// Position of g1-vertex v (0-based, v != i) after inserting n2 vertices at i.
int place(int v, int i, int n2) { return v < i ? v : v + n2 - 1; }

void check_index(int i, int n) {
  if (i < 1 || i > n) {
    throw Error("composition index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(what);
}

int unique_vertex(VertexMask m) { return std::countr_zero(m); }

struct Incident {
  int other;
  bool into;  // other -> i
};

// Lie-gra / nc rule. With `allow_empty` an incident edge may also be dropped.
void compose_subsets_into(const DirectedGraph& g1, int i, const DirectedGraph& g2, bool allow_empty,
                          std::vector<DirectedGraph>& out) {
  check_index(i, g1.size());
  const int i0 = i - 1;
  const int n2 = g2.size();
  const int n = g1.size() + n2 - 1;
  if (n > kMaxVertices) throw Error("composition exceeds the vertex limit");
  DirectedGraph base(n);
  for (const Edge& e : g1.edges()) {
    if (e.src != i0 && e.dst != i0) base.add_edge(place(e.src, i0, n2), place(e.dst, i0, n2));
  }
  for (const Edge& e : g2.edges()) base.add_edge(i0 + e.src, i0 + e.dst);
  std::vector<Incident> inc;
  for (VertexMask m = g1.in(i0); m != 0; m &= m - 1) inc.push_back({place(std::countr_zero(m), i0, n2), true});
  for (VertexMask m = g1.out(i0); m != 0; m &= m - 1) inc.push_back({place(std::countr_zero(m), i0, n2), false});

  const VertexMask first = allow_empty ? 0 : 1;
  const VertexMask last = (VertexMask{1} << n2) - 1;
  std::vector<VertexMask> choice(inc.size(), first);
  while (true) {
    DirectedGraph g = base;
    for (std::size_t k = 0; k < inc.size(); ++k) {
      for (VertexMask m = choice[k]; m != 0; m &= m - 1) {
        const int w = i0 + std::countr_zero(m);
        if (inc[k].into) {
          g.add_edge(inc[k].other, w);
        } else {
          g.add_edge(w, inc[k].other);
        }
      }
    }
    out.push_back(g);
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == last) choice[k++] = first;
    if (k == choice.size()) break;
    ++choice[k];
  }
}

template <class G>
GraphSumT<G> to_sum(OperadFlavor flavor, int arity, const std::vector<G>& bag) {
  GraphSumT<G> out(flavor, arity);
  for (const G& g : bag) out.add(g, 1);
  return out;
}

GraphSum compose_subsets(OperadFlavor flavor, const DirectedGraph& g1, int i, const DirectedGraph& g2,
                         bool allow_empty) {
  std::vector<DirectedGraph> bag;
  compose_subsets_into(g1, i, g2, allow_empty, bag);
  return to_sum(flavor, g1.size() + g2.size() - 1, bag);
}

// All ways to write m as an ordered sum of `parts` non-negative integers.
std::vector<std::vector<int>> weak_compositions(int m, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == parts - 1) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[k] = a;
      self(self, k + 1, left - a);
    }
  };
  rec(rec, 0, m);
  return out;
}

template <class G>
std::string describe(const G& g) {
  return format_graph(g);
}

// Fast total order on the raw representation; only used to compare bags.
struct RawLess {
  bool operator()(const DirectedGraph& a, const DirectedGraph& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int u = 0; u < a.size(); ++u) {
      if (a.out(u) != b.out(u)) return a.out(u) < b.out(u);
    }
    return false;
  }
  bool operator()(const MultiGraph& a, const MultiGraph& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int u = 0; u < a.size(); ++u) {
      for (int v = 0; v < a.size(); ++v) {
        if (a.multiplicity(u, v) != b.multiplicity(u, v)) return a.multiplicity(u, v) < b.multiplicity(u, v);
      }
    }
    return false;
  }
};

// Packs graphs on at most 7 vertices into one word: size, then 8 bits of out-mask per vertex.
bool packed_keys(const std::vector<DirectedGraph>& bag, std::vector<std::uint64_t>& out) {
  out.clear();
  out.reserve(bag.size());
  for (const DirectedGraph& g : bag) {
    if (g.size() > 7) return false;
    std::uint64_t key = static_cast<std::uint64_t>(g.size());
    for (int u = 0; u < g.size(); ++u) key |= static_cast<std::uint64_t>(g.out(u)) << (8 + 8 * u);
    out.push_back(key);
  }
  std::sort(out.begin(), out.end());
  return true;
}

bool packed_keys(const std::vector<MultiGraph>&, std::vector<std::uint64_t>&) { return false; }

// A composite with all coefficients +1, kept as a multiset of graphs.
template <class G>
using Bag = std::vector<G>;

// Operad instance used by the axiom checker.
template <class G>
struct Family {
  OperadFlavor flavor;
  std::function<void(const G&, int, const G&, Bag<G>&)> compose;
  std::function<bool(const G&)> valid_output;
  std::vector<G> labeled;
  std::vector<G> reps;
};

template <class G>
class Checker {
public:
  Checker(const Family<G>& fam, AxiomReport& report) : fam_(fam), report_(report) {}

  void run() {
    const G unit(1);
    for (const G& g : fam_.labeled) {
      const Bag<G> gs{g};
      expect_equal("unit", [&] { return "e o1 " + describe(g); }, compose(unit, 1, g), gs);
      for (int i = 1; i <= g.size(); ++i) {
        expect_equal("unit", [&] { return describe(g) + " o" + std::to_string(i) + " e"; }, compose(g, i, unit), gs);
      }
    }
    for (const G& g1 : fam_.reps) {
      for (const G& g2 : fam_.reps) {
        for (const G& g3 : fam_.reps) sequential_and_parallel(g1, g2, g3);
      }
    }
    for (const G& g1 : fam_.labeled) {
      for (const G& g2 : fam_.labeled) equivariance(g1, g2);
    }
  }

private:
  Bag<G> compose(const G& a, int i, const G& b) const {
    Bag<G> out;
    fam_.compose(a, i, b, out);
    return out;
  }

  Bag<G> compose(const Bag<G>& as, int i, const G& b) const {
    Bag<G> out;
    for (const G& a : as) fam_.compose(a, i, b, out);
    return out;
  }

  Bag<G> compose(const G& a, int i, const Bag<G>& bs) const {
    Bag<G> out;
    for (const G& b : bs) fam_.compose(a, i, b, out);
    return out;
  }

  // `where` is only rendered for reported failures.
  void expect_equal(const std::string& axiom, const std::function<std::string()>& where, Bag<G> lhs, Bag<G> rhs) {
    ++report_.checked[axiom];
    if (lhs.size() == rhs.size()) {
      if (packed_keys(lhs, lhs_keys_) && packed_keys(rhs, rhs_keys_)) {
        if (lhs_keys_ == rhs_keys_) return;
      } else {
        std::sort(lhs.begin(), lhs.end(), RawLess{});
        std::sort(rhs.begin(), rhs.end(), RawLess{});
        if (lhs == rhs) return;
      }
    }
    ++report_.failure_count;
    ++report_.failures_by_axiom[axiom];
    if (report_.failures.size() >= 10) return;
    const GraphSumT<G> a = to_sum(fam_.flavor, lhs.empty() ? 0 : lhs.front().size(), lhs);
    const GraphSumT<G> b = to_sum(fam_.flavor, rhs.empty() ? 0 : rhs.front().size(), rhs);
    std::set<G> keys;
    for (const auto& [g, c] : a.terms()) keys.insert(g);
    for (const auto& [g, c] : b.terms()) keys.insert(g);
    for (const G& g : keys) {
      if (a.coeff(g) != b.coeff(g)) {
        report_.failures.push_back(axiom + " " + where() + ": term " + describe(g) + " lhs " + to_string(a.coeff(g)) +
                                   " rhs " + to_string(b.coeff(g)));
        return;
      }
    }
  }

  void check_closure(const Bag<G>& bag, const std::function<std::string()>& where) {
    ++report_.checked["closure"];
    for (const G& g : bag) {
      if (!fam_.valid_output(g)) {
        ++report_.failure_count;
        ++report_.failures_by_axiom["closure"];
        if (report_.failures.size() < 10) report_.failures.push_back("closure " + where() + ": invalid output " + describe(g));
        return;
      }
    }
  }

  void sequential_and_parallel(const G& g1, const G& g2, const G& g3) {
    const int n1 = g1.size();
    const int n2 = g2.size();
    for (int i = 1; i <= n1; ++i) {
      const Bag<G> left = compose(g1, i, g2);
      check_closure(left, [&] { return describe(g1) + " o" + std::to_string(i) + " " + describe(g2); });
      for (int j = i; j <= i + n2 - 1; ++j) {
        auto where = [&] {
          return "(" + describe(g1) + " o" + std::to_string(i) + " " + describe(g2) + ") o" + std::to_string(j) + " " +
                 describe(g3);
        };
        expect_equal("sequential", where, compose(left, j, g3), compose(g1, i, compose(g2, j - i + 1, g3)));
      }
      for (int j = i + 1; j <= n1; ++j) {
        auto where = [&] {
          return describe(g1) + " o" + std::to_string(i) + "," + std::to_string(j) + " (" + describe(g2) + ", " +
                 describe(g3) + ")";
        };
        expect_equal("parallel", where, compose(left, j + n2 - 1, g3), compose(compose(g1, j, g3), i, g2));
      }
    }
  }

  void equivariance(const G& g1, const G& g2) {
    const int n1 = g1.size();
    const int n2 = g2.size();
    const int n = n1 + n2 - 1;
    std::vector<int> sigma(n1);
    std::vector<int> tau(n2);
    for (int i = 1; i <= n1; ++i) {
      const int i0 = i - 1;
      const Bag<G> base = compose(g1, i, g2);
      auto relabeled = [&](const std::vector<int>& pi) {
        Bag<G> out;
        for (const G& g : base) out.push_back(g.relabeled(pi));
        return out;
      };
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        std::vector<int> pi(n);
        for (int v = 0; v < n1; ++v) {
          if (v != i0) pi[place(v, i0, n2)] = place(sigma[v], sigma[i0], n2);
        }
        for (int w = 0; w < n2; ++w) pi[i0 + w] = sigma[i0] + w;
        expect_equal("equivariance", [&] { return describe(g1) + "^sigma o" + std::to_string(i) + " " + describe(g2); },
                     compose(g1.relabeled(sigma), sigma[i0] + 1, g2), relabeled(pi));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      std::iota(tau.begin(), tau.end(), 0);
      do {
        std::vector<int> pi(n);
        for (int v = 0; v < n1; ++v) {
          if (v != i0) pi[place(v, i0, n2)] = place(v, i0, n2);
        }
        for (int w = 0; w < n2; ++w) pi[i0 + w] = i0 + tau[w];
        expect_equal("equivariance", [&] { return describe(g1) + " o" + std::to_string(i) + " " + describe(g2) + "^tau"; },
                     compose(g1, i, g2.relabeled(tau)), relabeled(pi));
      } while (std::next_permutation(tau.begin(), tau.end()));
    }
  }

  const Family<G>& fam_;
  AxiomReport& report_;
  std::vector<std::uint64_t> lhs_keys_, rhs_keys_;
};

std::vector<DirectedGraph> dedup(const std::vector<DirectedGraph>& gs) {
  std::set<DirectedGraph> seen;
  for (const DirectedGraph& g : gs) seen.insert(canonicalize(g).graph);
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string to_string(OperadFlavor f) {
  switch (f) {
    case OperadFlavor::LieGra: return "lie-gra";
    case OperadFlavor::RootedTrees: return "rt";
    case OperadFlavor::Ladders: return "lad";
    case OperadFlavor::NcGra: return "lie-ncgra";
    case OperadFlavor::MGra: return "lie-mgra";
  }
  return "unknown";
}

OperadFlavor parse_operad_flavor(const std::string& s) {
  if (s == "lie-gra" || s == "liegra" || s == "connected-simple") return OperadFlavor::LieGra;
  if (s == "rt") return OperadFlavor::RootedTrees;
  if (s == "lad") return OperadFlavor::Ladders;
  if (s == "lie-ncgra" || s == "nc" || s == "nc-simple") return OperadFlavor::NcGra;
  if (s == "lie-mgra" || s == "mgra" || s == "multi") return OperadFlavor::MGra;
  throw Error("unknown operad flavor '" + s + "'");
}

bool is_rooted_tree(const DirectedGraph& g) {
  return g.size() >= 1 && g.is_simple() && g.is_connected() && g.edge_count() == g.size() - 1 &&
         std::popcount(g.sinks()) == 1;
}

bool is_ladder(const DirectedGraph& g) {
  if (!is_rooted_tree(g)) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (g.in_degree(v) > 1) return false;
  }
  return true;
}

GraphSum compose_liegra(const DirectedGraph& g1, int i, const DirectedGraph& g2) {
  require(validate(g1, Flavor::ConnectedSimple).empty() && validate(g2, Flavor::ConnectedSimple).empty(),
          "compose_liegra: inputs must be connected simple DAGs");
  return compose_subsets(OperadFlavor::LieGra, g1, i, g2, false);
}

GraphSum compose_ncgra(const DirectedGraph& g1, int i, const DirectedGraph& g2) {
  require(validate(g1, Flavor::NcSimple).empty() && validate(g2, Flavor::NcSimple).empty(),
          "compose_ncgra: inputs must be simple DAGs");
  return compose_subsets(OperadFlavor::NcGra, g1, i, g2, false);
}

GraphSum compose_rt(const DirectedGraph& t1, int i, const DirectedGraph& t2) {
  require(is_rooted_tree(t1) && is_rooted_tree(t2), "compose_rt: inputs must be rooted trees");
  check_index(i, t1.size());
  const int i0 = i - 1;
  const int n2 = t2.size();
  const int n = t1.size() + n2 - 1;
  DirectedGraph base(n);
  for (const Edge& e : t1.edges()) {
    if (e.src != i0 && e.dst != i0) base.add_edge(place(e.src, i0, n2), place(e.dst, i0, n2));
  }
  for (const Edge& e : t2.edges()) base.add_edge(i0 + e.src, i0 + e.dst);
  const int root = i0 + unique_vertex(t2.sinks());
  if (t1.out(i0) != 0) base.add_edge(root, place(unique_vertex(t1.out(i0)), i0, n2));
  std::vector<int> children;
  for (VertexMask m = t1.in(i0); m != 0; m &= m - 1) children.push_back(place(std::countr_zero(m), i0, n2));
  GraphSum out(OperadFlavor::RootedTrees, n);
  std::vector<int> choice(children.size(), 0);
  while (true) {
    DirectedGraph g = base;
    for (std::size_t k = 0; k < children.size(); ++k) g.add_edge(children[k], i0 + choice[k]);
    out.add(g, 1);
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == n2 - 1) choice[k++] = 0;
    if (k == choice.size()) break;
    ++choice[k];
  }
  return out;
}

GraphSum compose_lad(const DirectedGraph& l1, int i, const DirectedGraph& l2) {
  require(is_ladder(l1) && is_ladder(l2), "compose_lad: inputs must be ladders");
  check_index(i, l1.size());
  const int i0 = i - 1;
  const int n2 = l2.size();
  DirectedGraph g(l1.size() + n2 - 1);
  for (const Edge& e : l1.edges()) {
    if (e.src != i0 && e.dst != i0) g.add_edge(place(e.src, i0, n2), place(e.dst, i0, n2));
  }
  for (const Edge& e : l2.edges()) g.add_edge(i0 + e.src, i0 + e.dst);
  const int top = i0 + unique_vertex(l2.sources());
  const int bottom = i0 + unique_vertex(l2.sinks());
  if (l1.in(i0) != 0) g.add_edge(place(unique_vertex(l1.in(i0)), i0, n2), top);
  if (l1.out(i0) != 0) g.add_edge(bottom, place(unique_vertex(l1.out(i0)), i0, n2));
  return GraphSum::single(OperadFlavor::Ladders, g);
}

namespace {

void compose_mgra_into(const MultiGraph& g1, int i, const MultiGraph& g2, std::vector<MultiGraph>& out) {
  check_index(i, g1.size());
  const int i0 = i - 1;
  const int n2 = g2.size();
  const int n = g1.size() + n2 - 1;
  MultiGraph base(n);
  struct MultiIncident {
    int other;
    bool into;
    std::vector<std::vector<int>> spreads;
  };
  std::vector<MultiIncident> inc;
  for (int u = 0; u < g1.size(); ++u) {
    for (int v = 0; v < g1.size(); ++v) {
      const int m = g1.multiplicity(u, v);
      if (m == 0) continue;
      if (u == i0) {
        inc.push_back({place(v, i0, n2), false, weak_compositions(m, n2)});
      } else if (v == i0) {
        inc.push_back({place(u, i0, n2), true, weak_compositions(m, n2)});
      } else {
        base.add_edge(place(u, i0, n2), place(v, i0, n2), m);
      }
    }
  }
  for (int u = 0; u < n2; ++u) {
    for (int v = 0; v < n2; ++v) {
      if (g2.multiplicity(u, v) != 0) base.add_edge(i0 + u, i0 + v, g2.multiplicity(u, v));
    }
  }
  std::vector<std::size_t> choice(inc.size(), 0);
  while (true) {
    MultiGraph g = base;
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const auto& spread = inc[k].spreads[choice[k]];
      for (int w = 0; w < n2; ++w) {
        if (spread[w] == 0) continue;
        if (inc[k].into) {
          g.add_edge(inc[k].other, i0 + w, spread[w]);
        } else {
          g.add_edge(i0 + w, inc[k].other, spread[w]);
        }
      }
    }
    out.push_back(g);
    std::size_t k = 0;
    while (k < choice.size() && choice[k] + 1 == inc[k].spreads.size()) choice[k++] = 0;
    if (k == choice.size()) break;
    ++choice[k];
  }
}

}  // namespace

MultiGraphSum compose_mgra(const MultiGraph& g1, int i, const MultiGraph& g2) {
  require(validate(g1).empty() && validate(g2).empty(), "compose_mgra: inputs must be connected multigraph DAGs");
  std::vector<MultiGraph> bag;
  compose_mgra_into(g1, i, g2, bag);
  return to_sum(OperadFlavor::MGra, g1.size() + g2.size() - 1, bag);
}

GraphSum compose(OperadFlavor flavor, const DirectedGraph& g1, int i, const DirectedGraph& g2) {
  switch (flavor) {
    case OperadFlavor::LieGra: return compose_liegra(g1, i, g2);
    case OperadFlavor::RootedTrees: return compose_rt(g1, i, g2);
    case OperadFlavor::Ladders: return compose_lad(g1, i, g2);
    case OperadFlavor::NcGra: return compose_ncgra(g1, i, g2);
    case OperadFlavor::MGra: break;
  }
  throw Error("compose: use compose_mgra for multigraphs");
}

GraphSum compose(const GraphSum& s1, int i, const GraphSum& s2) {
  GraphSum out(s1.flavor(), s1.arity() + s2.arity() - 1);
  for (const auto& [a, ca] : s1.terms()) {
    for (const auto& [b, cb] : s2.terms()) out.add(compose(s1.flavor(), a, i, b), ca * cb);
  }
  return out;
}

MultiGraphSum compose(const MultiGraphSum& s1, int i, const MultiGraphSum& s2) {
  MultiGraphSum out(OperadFlavor::MGra, s1.arity() + s2.arity() - 1);
  for (const auto& [a, ca] : s1.terms()) {
    for (const auto& [b, cb] : s2.terms()) out.add(compose_mgra(a, i, b), ca * cb);
  }
  return out;
}

GraphSum full_compose(OperadFlavor flavor, const DirectedGraph& g, const std::vector<DirectedGraph>& hs) {
  if (static_cast<int>(hs.size()) != g.size()) throw Error("full_compose: arity mismatch");
  GraphSum acc = GraphSum::single(flavor, g);
  for (int a = g.size(); a >= 1; --a) acc = compose(acc, a, GraphSum::single(flavor, hs[a - 1]));
  return acc;
}

GraphSum full_compose_forward(OperadFlavor flavor, const DirectedGraph& g, const std::vector<DirectedGraph>& hs) {
  if (static_cast<int>(hs.size()) != g.size()) throw Error("full_compose: arity mismatch");
  GraphSum acc = GraphSum::single(flavor, g);
  int position = 1;
  for (const DirectedGraph& h : hs) {
    acc = compose(acc, position, GraphSum::single(flavor, h));
    position += h.size();
  }
  return acc;
}

GraphSum compose_blocks(const DirectedGraph& g, const std::vector<DirectedGraph>& hs, OperadFlavor flavor) {
  if (static_cast<int>(hs.size()) != g.size()) throw Error("compose_blocks: arity mismatch");
  if (flavor != OperadFlavor::LieGra && flavor != OperadFlavor::NcGra) {
    throw Error("compose_blocks: only the Lie-gra and nc rules are block rules");
  }
  std::vector<int> offset(hs.size() + 1, 0);
  for (std::size_t a = 0; a < hs.size(); ++a) offset[a + 1] = offset[a] + hs[a].size();
  const int n = offset.back();
  if (n > kMaxVertices) throw Error("composition exceeds the vertex limit");
  DirectedGraph base(n);
  for (std::size_t a = 0; a < hs.size(); ++a) {
    for (const Edge& e : hs[a].edges()) base.add_edge(offset[a] + e.src, offset[a] + e.dst);
  }
  std::vector<std::vector<Edge>> pairs;
  for (const Edge& e : g.edges()) {
    std::vector<Edge> p;
    for (int u = 0; u < hs[e.src].size(); ++u) {
      for (int v = 0; v < hs[e.dst].size(); ++v) p.push_back({offset[e.src] + u, offset[e.dst] + v});
    }
    if (p.size() > 24) throw Error("compose_blocks: block pair too large");
    pairs.push_back(std::move(p));
  }
  GraphSum out(flavor, n);
  std::vector<std::uint32_t> choice(pairs.size(), 1);
  while (true) {
    DirectedGraph r = base;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      for (std::uint32_t m = choice[k]; m != 0; m &= m - 1) {
        const Edge& e = pairs[k][static_cast<std::size_t>(std::countr_zero(m))];
        r.add_edge(e.src, e.dst);
      }
    }
    out.add(r, 1);
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == (std::uint32_t{1} << pairs[k].size()) - 1) choice[k++] = 1;
    if (k == choice.size()) break;
    ++choice[k];
  }
  return out;
}

GraphSum project_to_rt(const DirectedGraph& g) {
  GraphSum out(OperadFlavor::RootedTrees, g.size());
  if (is_rooted_tree(g)) out.add(g, 1);
  return out;
}

GraphSum project_rt_to_lad(const DirectedGraph& t) {
  GraphSum out(OperadFlavor::Ladders, t.size());
  if (is_ladder(t)) out.add(t, 1);
  return out;
}

GraphSum project(const GraphSum& s, OperadFlavor target) {
  GraphSum out(target, s.arity());
  for (const auto& [g, c] : s.terms()) {
    if (target == OperadFlavor::RootedTrees) {
      out.add(project_to_rt(g), c);
    } else if (target == OperadFlavor::Ladders) {
      out.add(project_rt_to_lad(g), c);
    } else {
      throw Error("project: target must be rt or lad");
    }
  }
  return out;
}

InclusionFailure inclusion_failure(OperadFlavor source) {
  InclusionFailure f;
  f.source = source;
  f.g1 = shapes::chain(2);
  f.i = 2;
  f.g2 = shapes::chain(2);
  if (source == OperadFlavor::RootedTrees) {
    f.target = OperadFlavor::LieGra;
    f.in_source = compose_rt(f.g1, f.i, f.g2);
    f.in_target = compose_liegra(f.g1, f.i, f.g2);
  } else if (source == OperadFlavor::Ladders) {
    f.target = OperadFlavor::RootedTrees;
    f.in_source = compose_lad(f.g1, f.i, f.g2);
    f.in_target = compose_rt(f.g1, f.i, f.g2);
  } else {
    throw Error("inclusion_failure: source must be rt or lad");
  }
  return f;
}

GraphSum distributive_expand(const PartitionGraph& pg) {
  if (static_cast<int>(pg.blocks.size()) != pg.graph.size()) throw Error("distributive_expand: block count mismatch");
  int n = 0;
  for (const auto& b : pg.blocks) {
    if (b.empty()) throw Error("distributive_expand: empty block");
    n += static_cast<int>(b.size());
  }
  std::vector<bool> seen(n, false);
  for (const auto& b : pg.blocks) {
    for (int v : b) {
      if (v < 1 || v > n || seen[v - 1]) throw Error("distributive_expand: blocks do not partition 1..n");
      seen[v - 1] = true;
    }
  }
  std::vector<std::vector<Edge>> pairs;
  for (const Edge& e : pg.graph.edges()) {
    std::vector<Edge> p;
    for (int u : pg.blocks[e.src]) {
      for (int v : pg.blocks[e.dst]) p.push_back({u - 1, v - 1});
    }
    pairs.push_back(std::move(p));
  }
  GraphSum out(OperadFlavor::NcGra, n);
  std::vector<std::uint32_t> choice(pairs.size(), 1);
  while (true) {
    DirectedGraph r(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      for (std::uint32_t m = choice[k]; m != 0; m &= m - 1) {
        const Edge& e = pairs[k][static_cast<std::size_t>(std::countr_zero(m))];
        r.add_edge(e.src, e.dst);
      }
    }
    out.add(r, 1);
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == (std::uint32_t{1} << pairs[k].size()) - 1) choice[k++] = 1;
    if (k == choice.size()) break;
    ++choice[k];
  }
  return out;
}

MultiGraphSum embed_in_mgra(const DirectedGraph& g, int max_edges) {
  const auto edges = g.edges();
  MultiGraphSum out(OperadFlavor::MGra, g.size());
  std::vector<int> mult(edges.size(), 1);
  auto rec = [&](auto&& self, std::size_t k, int used) -> void {
    if (k == edges.size()) {
      MultiGraph m(g.size());
      for (std::size_t e = 0; e < edges.size(); ++e) m.add_edge(edges[e].src, edges[e].dst, mult[e]);
      out.add(m, 1);
      return;
    }
    const int remaining = static_cast<int>(edges.size() - k - 1);
    for (int c = 1; used + c + remaining <= max_edges; ++c) {
      mult[k] = c;
      self(self, k + 1, used + c);
    }
  };
  if (static_cast<int>(edges.size()) <= max_edges) rec(rec, 0, 0);
  return out;
}

AxiomReport check_operad_axioms(OperadFlavor flavor, int cap, bool corrupt) {
  AxiomReport report;
  report.flavor = flavor;
  report.cap = cap;
  report.corrupted = corrupt;
  if (corrupt && flavor != OperadFlavor::LieGra && flavor != OperadFlavor::NcGra) {
    throw Error("check_operad_axioms: the corrupted rule exists only for lie-gra and lie-ncgra");
  }
  EnumerationCaps caps;
  caps.labeled = std::max(caps.labeled, cap);
  if (flavor == OperadFlavor::MGra) {
    Family<MultiGraph> fam;
    fam.flavor = flavor;
    fam.compose = compose_mgra_into;
    fam.valid_output = [](const MultiGraph& g) { return validate(g).empty(); };
    caps.multi_edges = cap;
    std::set<MultiGraph> reps;
    for (int n = 1; n <= cap; ++n) {
      for (const MultiGraph& g : enumerate_labeled_multi(n, caps)) {
        fam.labeled.push_back(g);
        reps.insert(canonical_multigraph(g));
      }
    }
    fam.reps.assign(reps.begin(), reps.end());
    Checker<MultiGraph> checker(fam, report);
    checker.run();
    // Edge counts add up under composition.
    for (const MultiGraph& a : fam.reps) {
      for (const MultiGraph& b : fam.reps) {
        for (int i = 1; i <= a.size(); ++i) {
          ++report.checked["edge-count"];
          const MultiGraphSum composed = compose_mgra(a, i, b);
          for (const auto& [g, c] : composed.terms()) {
            if (g.edge_count() != a.edge_count() + b.edge_count()) {
              ++report.failure_count;
              if (report.failures.size() < 10) report.failures.push_back("edge-count " + format_graph(g));
            }
          }
        }
      }
    }
    return report;
  }

  Family<DirectedGraph> fam;
  fam.flavor = flavor;
  std::vector<DirectedGraph> all;
  const Flavor base = flavor == OperadFlavor::NcGra ? Flavor::NcSimple : Flavor::ConnectedSimple;
  for (int n = 1; n <= cap; ++n) {
    for (const DirectedGraph& g : enumerate_labeled(n, base, caps)) all.push_back(g);
  }
  switch (flavor) {
    case OperadFlavor::LieGra:
    case OperadFlavor::NcGra:
      fam.compose = [corrupt](const DirectedGraph& a, int i, const DirectedGraph& b, Bag<DirectedGraph>& out) {
        compose_subsets_into(a, i, b, corrupt, out);
      };
      fam.valid_output = [base](const DirectedGraph& g) { return validate(g, base).empty(); };
      fam.labeled = all;
      break;
    case OperadFlavor::RootedTrees:
      fam.compose = [](const DirectedGraph& a, int i, const DirectedGraph& b, Bag<DirectedGraph>& out) {
        const GraphSum composed = compose_rt(a, i, b);
        for (const auto& [g, c] : composed.terms()) out.push_back(g);
      };
      fam.valid_output = is_rooted_tree;
      std::copy_if(all.begin(), all.end(), std::back_inserter(fam.labeled), is_rooted_tree);
      break;
    case OperadFlavor::Ladders:
      fam.compose = [](const DirectedGraph& a, int i, const DirectedGraph& b, Bag<DirectedGraph>& out) {
        out.push_back(compose_lad(a, i, b).terms().begin()->first);
      };
      fam.valid_output = is_ladder;
      std::copy_if(all.begin(), all.end(), std::back_inserter(fam.labeled), is_ladder);
      break;
    case OperadFlavor::MGra: break;
  }
  if (corrupt) fam.valid_output = [](const DirectedGraph&) { return true; };
  fam.reps = dedup(fam.labeled);
  Checker<DirectedGraph> checker(fam, report);
  checker.run();
  return report;
}

nlohmann::json to_json(const GraphSum& s) {
  nlohmann::json j;
  j["flavor"] = to_string(s.flavor());
  j["arity"] = s.arity();
  j["terms"] = nlohmann::json::array();
  for (const auto& [g, c] : s.terms()) j["terms"].push_back({{"coeff", to_string(c)}, {"graph", to_json(g)}});
  return j;
}

nlohmann::json to_json(const MultiGraphSum& s) {
  nlohmann::json j;
  j["flavor"] = to_string(s.flavor());
  j["arity"] = s.arity();
  j["terms"] = nlohmann::json::array();
  for (const auto& [g, c] : s.terms()) j["terms"].push_back({{"coeff", to_string(c)}, {"graph", to_json(g)}});
  return j;
}

}  // namespace liegra
