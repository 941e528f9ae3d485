#include <doctest.h>

#include "liegra/free_algebra.hpp"
#include "liegra/lie_theory.hpp"

using namespace liegra;

namespace {

AlgebraPtr algebra(std::vector<Generator> gens, int K, bool nc = false) { return Algebra::make(std::move(gens), K, nc); }

Series gen(const AlgebraPtr& a, const std::string& name) { return Series::generator(a, name); }

}  // namespace

TEST_CASE("algebra validation") {
  CHECK_THROWS_AS(algebra({{"x", 0}, {"x", 1}}, 3), Error);
  CHECK_THROWS_AS(algebra({{"x", 0}}, 0), Error);
  const AlgebraPtr a = algebra({{"x", 0}, {"y", 0}}, 3);
  CHECK(a->index_of("y") == 1);
  CHECK_THROWS_AS(gen(a, "z"), Error);
}

TEST_CASE("star is the decorated chain") {
  const AlgebraPtr a = algebra({{"x", 0}, {"y", 0}}, 3);
  const Series x = gen(a, "x"), y = gen(a, "y");
  const Series s = star(x, y);
  CHECK(s == apply_graph(shapes::chain(2), {x, y}));
  CHECK(s.size() == 1);
  CHECK(s.coeff("n=2;e=1>2;d=x,y") == 1);
  CHECK(s.coeff("n=2;e=2>1;d=y,x") == 1);
  CHECK(s.coeff("n=2;e=1>2;d=y,x") == 0);
  CHECK(bracket(x, x).is_zero());
  const Series b = bracket(x, y);
  CHECK(b.coeff("n=2;e=1>2;d=x,y") == 1);
  CHECK(b.coeff("n=2;e=1>2;d=y,x") == -1);
}

TEST_CASE("odd generators") {
  const AlgebraPtr a = algebra({{"a", 1}, {"x", 0}}, 3);
  const Series alpha = gen(a, "a");
  CHECK(alpha.degree() == 1);
  // Two odd vertices swapped by the automorphism of the edgeless pair.
  CHECK(disjoint_union({alpha, alpha}).is_zero());
  CHECK_FALSE(bracket(alpha, alpha).is_zero());
  CHECK(bracket(gen(a, "x"), alpha) == -bracket(alpha, gen(a, "x")));
}

TEST_CASE("derivation obeys Leibniz") {
  const AlgebraPtr a = algebra({{"l", 0}, {"m", -1}}, 3);
  const Series l = gen(a, "l"), m = gen(a, "m");
  const Derivation d(a, {{"l", m}});
  CHECK(d(l) == m);
  CHECK(d(m).is_zero());
  CHECK(d(star(l, l)) == star(m, l) + star(l, m));
  CHECK(d(d(star(l, star(l, l)))).is_zero());
}

TEST_CASE("truncation and weight components") {
  const AlgebraPtr a = algebra({{"x", 0}}, 5);
  const Series e = exp_series(gen(a, "x"));
  CHECK(e.truncate(3).truncate(3) == e.truncate(3));
  Series sum(a);
  for (int n = 1; n <= 5; ++n) sum += e.weight_component(n);
  CHECK(sum == e);
  CHECK(e.up_to_weight(2).size() == 2);
  CHECK(substitute(e, {{0, gen(a, "x")}}) == e);
  CHECK(e.min_weight() == 1);
}

TEST_CASE("serial and parallel apply_graph agree") {
  const AlgebraPtr a = algebra({{"x", 0}, {"y", 0}}, 6);
  const Series ex = exp_series(gen(a, "x")), ey = exp_series(gen(a, "y"));
  for (const DirectedGraph& g : {shapes::chain(2), shapes::source_fork(), shapes::triangle(), DirectedGraph(2)}) {
    std::vector<Series> args;
    for (int i = 0; i < g.size(); ++i) args.push_back(i % 2 == 0 ? ex : ey);
    CHECK(apply_graph(g, args, Exec::Serial) == apply_graph(g, args, Exec::Parallel));
  }
}

TEST_CASE("polarization") {
  const AlgebraPtr a = algebra({{"x", 0}, {"y", 0}, {"z", 0}}, 4);
  const Series x = gen(a, "x"), z = gen(a, "z");
  const Series zero(a);
  CHECK(product_linearized(x, zero, Slot::Bottom, zero).is_zero());
  const Series top = product_linearized(zero, zero, Slot::Top, z);
  CHECK(top.weight_component(1) == z);
  // Marked-level route against interpolation of the product.
  const Series y = gen(a, "y");
  const auto F = [&](const Series& t) { return gp_product_series(x, t); };
  CHECK(polarize(F, y, z) == product_linearized(x, y, Slot::Top, z));
}

TEST_CASE("describe and json") {
  const AlgebraPtr a = algebra({{"x", 0}, {"y", 0}}, 2);
  const Series s = star(gen(a, "x"), gen(a, "y"));
  REQUIRE(s.size() == 1);
  CHECK(describe(s.terms().begin()->first, *a) == "n=2;e=1>2;d=x,y");
  CHECK(to_json(s)["terms"].size() == 1);
  CHECK(to_text(s) == "1/1  n=2;e=1>2;d=x,y\n");
}
