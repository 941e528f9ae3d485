#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "liegra/canonical.hpp"
#include "liegra/enumerate.hpp"
#include "liegra/io.hpp"

using namespace liegra;

namespace {

// Brute force over all n! relabelings.
std::uint64_t aut_by_permutations(const DirectedGraph& g) {
  std::vector<int> p(static_cast<std::size_t>(g.size()));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    if (g.relabeled(p) == g) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::uint64_t extensions_by_permutations(const DirectedGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.size()));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t count = 0;
  do {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && pos[static_cast<std::size_t>(e.src)] < pos[static_cast<std::size_t>(e.dst)];
    if (ok) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(DirectedGraph(1), Flavor::ConnectedSimple).empty());
  CHECK(validate(DirectedGraph(2, {{0, 1}, {1, 0}}), Flavor::ConnectedSimple) ==
        std::vector<Violation>{Violation::NotSimple, Violation::Cycle});
  CHECK(validate(DirectedGraph(3, {{0, 1}}), Flavor::ConnectedSimple) == std::vector<Violation>{Violation::Disconnected});
  CHECK(validate(DirectedGraph(3, {{0, 1}}), Flavor::NcSimple).empty());
  CHECK(validate(DirectedGraph(3, {{0, 1}, {1, 2}, {2, 0}}), Flavor::ConnectedSimple) ==
        std::vector<Violation>{Violation::Cycle});
  CHECK_THROWS_AS(DirectedGraph(kMaxVertices + 1), Error);
}

TEST_CASE("canonical form ignores labels") {
  CHECK(canonicalize(DirectedGraph(2, {{0, 1}})).graph == canonicalize(DirectedGraph(2, {{1, 0}})).graph);
  const std::vector<int> xy{0, 1}, yx{1, 0};
  const CanonicalForm a = canonicalize(DirectedGraph(2, {{0, 1}}), xy);
  const CanonicalForm b = canonicalize(DirectedGraph(2, {{1, 0}}), yx);
  CHECK(a.graph == b.graph);
  CHECK(a.colors == b.colors);
  CHECK(canonicalize(shapes::source_fork()).graph != canonicalize(shapes::sink_join()).graph);
}

TEST_CASE("odd automorphism kills the canonical sign") {
  // Two odd vertices swapped by an automorphism.
  const std::vector<int> colors{0, 1, 1};
  CHECK(canonicalize(shapes::source_fork(), colors, 0b110).sign == 0);
  CHECK(canonicalize(shapes::source_fork(), colors, 0b010).sign != 0);
  const std::vector<int> swap{1, 0, 2};
  CHECK(koszul_sign(swap, 0b011) == -1);
  CHECK(koszul_sign(swap, 0b001) == 1);
}

TEST_CASE("aut and linear extensions agree with brute force up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (const IsoClass& c : enumerate_iso_classes(n, Flavor::NcSimple)) {
      CHECK(c.aut_order == aut_by_permutations(c.graph));
      CHECK(aut_order(c.graph) == c.aut_order);
      CHECK(linear_extension_count(c.graph) == extensions_by_permutations(c.graph));
      CHECK(levelization_count(c.graph) * c.aut_order == linear_extension_count(c.graph));
    }
  }
  CHECK(linear_extension_count(DirectedGraph(1)) == 1);
  CHECK(linear_extension_count(shapes::chain(5)) == 1);
  CHECK(linear_extension_count(shapes::source_fork()) == 2);
  CHECK(levelization_count(shapes::source_fork()) == 1);
  CHECK(levelization_count(shapes::complete_bipartite(2, 2)) == 1);
}

TEST_CASE("labeled counts") {
  const std::vector<std::size_t> connected{1, 2, 18, 446, 26430};
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(enumerate_labeled(n, Flavor::ConnectedSimple).size() == connected[static_cast<std::size_t>(n - 1)]);
  }
  // Labeled DAGs (OEIS A003024).
  CHECK(enumerate_labeled(4, Flavor::NcSimple).size() == 543);
  CHECK(enumerate_labeled(3, Flavor::Oriented).size() == 27);
  CHECK_THROWS_AS(enumerate_labeled(default_caps().labeled + 1, Flavor::ConnectedSimple), CapExceeded);
}

TEST_CASE("serial and parallel labeled enumeration agree") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_labeled(n, Flavor::NcSimple, default_caps(), Exec::Serial) ==
          enumerate_labeled(n, Flavor::NcSimple, default_caps(), Exec::Parallel));
  }
}

TEST_CASE("labeled graphs are distinct and valid") {
  const auto all = enumerate_labeled(4, Flavor::ConnectedSimple);
  CHECK(std::set<DirectedGraph>(all.begin(), all.end()).size() == all.size());
  for (const DirectedGraph& g : all) CHECK(validate(g, Flavor::ConnectedSimple).empty());
}

TEST_CASE("iso classes") {
  CHECK(enumerate_iso_classes(1, Flavor::ConnectedSimple).size() == 1);
  const auto& two = enumerate_iso_classes(2, Flavor::ConnectedSimple);
  REQUIRE(two.size() == 1);
  CHECK(two[0].multiplicity == 2);

  std::set<DirectedGraph> three;
  for (const IsoClass& c : enumerate_iso_classes(3, Flavor::ConnectedSimple)) three.insert(c.graph);
  const std::set<DirectedGraph> expected{canonicalize(shapes::chain(3)).graph, canonicalize(shapes::source_fork()).graph,
                                         canonicalize(shapes::sink_join()).graph, canonicalize(shapes::triangle()).graph};
  CHECK(three == expected);

  for (int n = 1; n <= 5; ++n) {
    for (Flavor f : {Flavor::ConnectedSimple, Flavor::NcSimple}) {
      const auto& grown = enumerate_iso_classes(n, f);
      const auto dedup = iso_classes_by_dedup(n, f);
      REQUIRE(grown.size() == dedup.size());
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < grown.size(); ++i) {
        CHECK(grown[i].graph == dedup[i].graph);
        CHECK(grown[i].multiplicity == dedup[i].multiplicity);
        total += grown[i].multiplicity;
      }
      CHECK(total == enumerate_labeled(n, f).size());
    }
  }
  // Unlabeled weakly connected DAGs (OEIS A101228).
  CHECK(enumerate_iso_classes(4, Flavor::ConnectedSimple).size() == 24);
  CHECK(enumerate_iso_classes(5, Flavor::ConnectedSimple).size() == 267);
}

TEST_CASE("leveled classes") {
  CHECK(enumerate_leveled({1, 0}).size() == 1);
  CHECK(enumerate_leveled({1, 1}).size() == 1);
  CHECK(enumerate_leveled({1, 1}, false).size() == 2);
  CHECK(enumerate_leveled({2, 1}).size() == 1);
  for (const LeveledClass& c : enumerate_leveled({1, 2, 1})) {
    CHECK(c.leveled.is_valid());
    CHECK(c.aut_order == leveled_aut_order(c.leveled));
  }
  const LeveledGraph nat = natural_leveling(shapes::diamond_with_tail());
  CHECK(nat.is_valid());
}

TEST_CASE("parse and format") {
  const GraphText chain = parse_graph("n=2;e=1>2");
  CHECK(chain.graph() == shapes::chain(2));
  CHECK(format_graph(chain.graph()) == "n=2;e=1>2");
  const GraphText cyc = parse_graph("n=2;e=1>2,2>1");
  CHECK_FALSE(validate(cyc.graph(), Flavor::ConnectedSimple).empty());
  const GraphText d = parse_graph("n=3;e=1>2,1>3;d=x,y,y");
  CHECK(d.decoration == std::vector<std::string>{"x", "y", "y"});
  CHECK(format_graph(d.graph(), d.decoration) == "n=3;e=1>2,1>3;d=x,y,y");
  CHECK(graph_from_json(to_json(d.graph(), d.decoration)).graph() == d.graph());
  CHECK_THROWS_AS(parse_graph("n=2;e=1>3"), ParseError);
  CHECK_THROWS_AS(parse_graph("x=2"), ParseError);
  CHECK(to_dot(natural_leveling(shapes::chain(2))).find("rank=same") != std::string::npos);
}
