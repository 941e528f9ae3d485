#include <doctest.h>

#include <fstream>
#include <sstream>

#include "liegra/enumerate.hpp"
#include "liegra/io.hpp"
#include "liegra/operad.hpp"
#include "liegra/verify.hpp"

using namespace liegra;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream f(std::string(LIEGRA_GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string lines(const GraphSum& s) {
  std::string out;
  for (const auto& [g, c] : s.terms()) out += to_string(c) + " " + format_graph(g) + "\n";
  return out;
}

std::vector<DirectedGraph> small_graphs(Flavor f, int cap) {
  std::vector<DirectedGraph> out;
  for (int n = 1; n <= cap; ++n) {
    for (const DirectedGraph& g : enumerate_labeled(n, f)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("composition golden files") {
  const DirectedGraph g1(3, {{1, 0}, {1, 2}});
  const GraphSum nine = compose_liegra(g1, 2, shapes::chain(2));
  CHECK(nine.size() == 9);
  CHECK(lines(nine) == read_golden("liegra_composition.txt"));
  const GraphSum four = compose_rt(DirectedGraph(3, {{0, 1}, {2, 1}}), 2, shapes::chain(2));
  CHECK(four.size() == 4);
  CHECK(lines(four) == read_golden("rt_composition.txt"));
  CHECK(lines(nine) == golden_liegra_composition());
  CHECK(lines(four) == golden_rt_composition());
}

TEST_CASE("unit laws") {
  for (const DirectedGraph& g : small_graphs(Flavor::ConnectedSimple, 3)) {
    for (int i = 1; i <= g.size(); ++i) {
      CHECK(compose_liegra(g, i, shapes::vertex()) == GraphSum::single(OperadFlavor::LieGra, g));
    }
    CHECK(compose_liegra(shapes::vertex(), 1, g) == GraphSum::single(OperadFlavor::LieGra, g));
  }
  const DirectedGraph pair(2);
  CHECK(compose_ncgra(pair, 1, shapes::vertex()) == GraphSum::single(OperadFlavor::NcGra, pair));
  MultiGraph doubled(2);
  doubled.add_edge(0, 1, 2);
  CHECK(compose_mgra(doubled, 1, MultiGraph(1)) == MultiGraphSum::single(OperadFlavor::MGra, doubled));
}

TEST_CASE("nc composition restricted to connected inputs matches Lie-gra") {
  for (const DirectedGraph& g1 : small_graphs(Flavor::ConnectedSimple, 3)) {
    for (const DirectedGraph& g2 : small_graphs(Flavor::ConnectedSimple, 3)) {
      for (int i = 1; i <= g1.size(); ++i) {
        CHECK(compose_ncgra(g1, i, g2).terms() == compose_liegra(g1, i, g2).terms());
      }
    }
  }
}

TEST_CASE("mgra keeps edge counts") {
  MultiGraph g1(2);
  g1.add_edge(0, 1, 2);
  MultiGraph g2(2, {{0, 1}});
  const MultiGraphSum s = compose_mgra(g1, 1, g2);
  CHECK_FALSE(s.empty());
  for (const auto& [g, c] : s.terms()) {
    CHECK(g.edge_count() == 3);
    CHECK(c == 1);
  }
}

TEST_CASE("full composition is order independent") {
  const std::vector<DirectedGraph> hs{shapes::chain(2), shapes::vertex(), shapes::source_fork()};
  const DirectedGraph g = shapes::triangle();
  const GraphSum a = full_compose(OperadFlavor::LieGra, g, hs);
  CHECK(a == full_compose_forward(OperadFlavor::LieGra, g, hs));
  CHECK(a == compose_blocks(g, hs));
  const std::vector<DirectedGraph> points{shapes::vertex(), shapes::vertex(), shapes::vertex()};
  CHECK(full_compose(OperadFlavor::LieGra, g, points) == GraphSum::single(OperadFlavor::LieGra, g));
}

TEST_CASE("projections") {
  CHECK(project_to_rt(DirectedGraph(2, {{1, 0}})).size() == 1);
  CHECK(project_to_rt(shapes::complete_bipartite(2, 2)).empty());
  CHECK(project_rt_to_lad(DirectedGraph(3, {{2, 1}, {1, 0}})).size() == 1);
  CHECK(project_rt_to_lad(DirectedGraph(3, {{1, 0}, {2, 0}})).empty());
  for (const DirectedGraph& g1 : small_graphs(Flavor::ConnectedSimple, 3)) {
    for (const DirectedGraph& g2 : small_graphs(Flavor::ConnectedSimple, 3)) {
      for (int i = 1; i <= g1.size(); ++i) {
        const GraphSum lhs = project(compose_liegra(g1, i, g2), OperadFlavor::RootedTrees);
        const GraphSum rhs = compose(project(GraphSum::single(OperadFlavor::LieGra, g1), OperadFlavor::RootedTrees), i,
                                     project(GraphSum::single(OperadFlavor::LieGra, g2), OperadFlavor::RootedTrees));
        CHECK(lhs.terms() == rhs.terms());
      }
    }
  }
  for (OperadFlavor f : {OperadFlavor::RootedTrees, OperadFlavor::Ladders}) {
    const InclusionFailure fail = inclusion_failure(f);
    CHECK(fail.in_source.terms() != fail.in_target.terms());
  }
}

TEST_CASE("distributive expansion") {
  PartitionGraph single{{{1, 2, 3}}, DirectedGraph(1)};
  CHECK(distributive_expand(single) == GraphSum::single(OperadFlavor::NcGra, DirectedGraph(3)));
  PartitionGraph two{{{1}, {2}}, shapes::chain(2)};
  CHECK(distributive_expand(two) == GraphSum::single(OperadFlavor::NcGra, shapes::chain(2)));
  PartitionGraph three{{{1, 2}, {3}}, shapes::chain(2)};
  CHECK(distributive_expand(three).size() == 3);
}

TEST_CASE("operad axioms on small factors") {
  for (OperadFlavor f : {OperadFlavor::RootedTrees, OperadFlavor::Ladders}) {
    const AxiomReport r = check_operad_axioms(f, 3);
    CAPTURE(to_string(f));
    CHECK(r.ok());
  }
  const AxiomReport lie = check_operad_axioms(OperadFlavor::LieGra, 2);
  CHECK(lie.ok());
  const AxiomReport bad = check_operad_axioms(OperadFlavor::LieGra, 2, true);
  CHECK_FALSE(bad.ok());
}
