#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "liegra/graph.hpp"
#include "liegra/rational.hpp"

namespace liegra {

enum class OperadFlavor { LieGra, RootedTrees, Ladders, NcGra, MGra };

std::string to_string(OperadFlavor f);
OperadFlavor parse_operad_flavor(const std::string& s);

/// Finite rational combination of labeled graphs of one arity.
template <class G>
class GraphSumT {
public:
  GraphSumT() = default;
  GraphSumT(OperadFlavor flavor, int arity) : flavor_(flavor), arity_(arity) {}
  static GraphSumT single(OperadFlavor flavor, const G& g) {
    GraphSumT s(flavor, g.size());
    s.add(g, 1);
    return s;
  }

  OperadFlavor flavor() const { return flavor_; }
  int arity() const { return arity_; }
  const std::map<G, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const G& g, const Rational& c) {
    if (c == 0) return;
    if (g.size() != arity_) throw Error("GraphSum: arity mismatch");
    auto [it, fresh] = terms_.try_emplace(g, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const GraphSumT& other, const Rational& scale = 1) {
    for (const auto& [g, c] : other.terms_) add(g, c * scale);
  }

  Rational coeff(const G& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const GraphSumT& other) const {
    return (empty() && other.empty()) || (arity_ == other.arity_ && terms_ == other.terms_);
  }

private:
  OperadFlavor flavor_ = OperadFlavor::LieGra;
  int arity_ = 0;
  std::map<G, Rational> terms_;
};

using GraphSum = GraphSumT<DirectedGraph>;
using MultiGraphSum = GraphSumT<MultiGraph>;

bool is_rooted_tree(const DirectedGraph& g);  // edges point toward the unique sink (the root)
bool is_ladder(const DirectedGraph& g);

// Partial compositions; `i` is 1-based.
GraphSum compose_liegra(const DirectedGraph& g1, int i, const DirectedGraph& g2);
GraphSum compose_rt(const DirectedGraph& t1, int i, const DirectedGraph& t2);
GraphSum compose_lad(const DirectedGraph& l1, int i, const DirectedGraph& l2);
GraphSum compose_ncgra(const DirectedGraph& g1, int i, const DirectedGraph& g2);
MultiGraphSum compose_mgra(const MultiGraph& g1, int i, const MultiGraph& g2);

GraphSum compose(OperadFlavor flavor, const DirectedGraph& g1, int i, const DirectedGraph& g2);

/// Linear extension of a partial composition to sums in either slot.
GraphSum compose(const GraphSum& s1, int i, const GraphSum& s2);
MultiGraphSum compose(const MultiGraphSum& s1, int i, const MultiGraphSum& s2);

/// g(h_1, ..., h_k) by iterated partial composition, inserting from the last vertex down.
GraphSum full_compose(OperadFlavor flavor, const DirectedGraph& g, const std::vector<DirectedGraph>& hs);
/// Same, inserting from the first vertex up (tracks shifting positions).
GraphSum full_compose_forward(OperadFlavor flavor, const DirectedGraph& g, const std::vector<DirectedGraph>& hs);
/// Direct block composition (Lie-gra / nc rule): every g-edge a->b becomes a nonempty
/// set of edges from block a to block b.
GraphSum compose_blocks(const DirectedGraph& g, const std::vector<DirectedGraph>& hs,
                        OperadFlavor flavor = OperadFlavor::LieGra);

/// Morphisms Lie-gra -> RT -> Lad (zero sum when the graph is killed).
GraphSum project_to_rt(const DirectedGraph& g);
GraphSum project_rt_to_lad(const DirectedGraph& t);
GraphSum project(const GraphSum& s, OperadFlavor target);

struct InclusionFailure {
  OperadFlavor source;  // the suboperad whose inclusion fails
  OperadFlavor target;
  DirectedGraph g1;
  int i = 1;
  DirectedGraph g2;
  GraphSum in_source;  // composed in the suboperad, then included
  GraphSum in_target;  // included, then composed in the larger operad
};

/// Concrete pair witnessing that RT -> Lie-gra (or Lad -> RT) is not a morphism.
InclusionFailure inclusion_failure(OperadFlavor source);

/// Vertices of a graph labeled by the blocks of a set partition of {1..n}.
struct PartitionGraph {
  std::vector<std::vector<int>> blocks;  // 1-based labels
  DirectedGraph graph;                   // vertex b stands for blocks[b]
};

GraphSum distributive_expand(const PartitionGraph& pg);

/// Lie-gra graph g viewed in completed Lie-mgra: every multigraph with support g and at
/// most `max_edges` edges.
MultiGraphSum embed_in_mgra(const DirectedGraph& g, int max_edges);

struct AxiomReport {
  OperadFlavor flavor = OperadFlavor::LieGra;
  int cap = 0;
  bool corrupted = false;
  std::map<std::string, std::size_t> checked;  // axiom -> instances
  std::map<std::string, std::size_t> failures_by_axiom;
  std::vector<std::string> failures;            // first few counterexamples, term by term
  std::size_t failure_count = 0;
  bool ok() const { return failure_count == 0; }
};

/// Unit, sequential, parallel and equivariance axioms on factors with at most `cap`
/// vertices. `corrupt` drops the nonempty-subset rule (Lie-gra / nc only); it is the
/// negative control and must fail. Multigraph factors carry at most `cap` edges.
AxiomReport check_operad_axioms(OperadFlavor flavor, int cap = 3, bool corrupt = false);

nlohmann::json to_json(const GraphSum& s);
nlohmann::json to_json(const MultiGraphSum& s);

}  // namespace liegra
