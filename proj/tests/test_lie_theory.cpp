#include <doctest.h>

#include "liegra/lie_theory.hpp"
#include "liegra/operad.hpp"

using namespace liegra;

namespace {

Series gen(const AlgebraPtr& a, const std::string& name) { return Series::generator(a, name); }

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string ladder_text(int n) {
  std::string s = "n=" + std::to_string(n);
  if (n > 1) {
    s += ";e=";
    for (int i = 1; i < n; ++i) s += (i > 1 ? "," : "") + std::to_string(i) + ">" + std::to_string(i + 1);
  }
  s += ";d=x";
  for (int i = 1; i < n; ++i) s += ",x";
  return s;
}

}  // namespace

TEST_CASE("exponential") {
  const AlgebraPtr a = Algebra::make({{"x", 0}}, 6);
  const Series x = gen(a, "x");
  CHECK(exp(Series(a)).is_unit());
  const Series e = exp_series(x);
  for (int n = 1; n <= 6; ++n) {
    Rational f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    CHECK(e.coeff(ladder_text(n)) == 1 / f);
  }
  CHECK(e.coeff("n=3;e=1>2,1>3;d=x,x,x") == q(1, 6));
  CHECK(e.coeff("n=4;e=1>2,1>3,2>4;d=x,x,x,x") == q(1, 8));
  CHECK(e.coeff("n=4;e=1>3,1>4,2>3,2>4;d=x,x,x,x") == q(1, 24));
  CHECK(e == exp_series(x, ExpRoute::Flow));
  // Coefficient of every connected class of weight n: levelizations / n!.
  std::size_t classes = 0;
  for (int n = 1; n <= 5; ++n) classes += enumerate_iso_classes(n, Flavor::ConnectedSimple).size();
  CHECK(e.up_to_weight(5).size() == classes);
}

TEST_CASE("logarithm") {
  const AlgebraPtr a = Algebra::make({{"x", 0}}, 5);
  const Series x = gen(a, "x");
  CHECK(log(GroupElement::unit(a)).is_zero());
  const Series l = log_series(x);
  CHECK(l.coeff("n=2;e=1>2;d=x,x") == q(-1, 2));
  CHECK(l.coeff("n=3;e=1>2,1>3;d=x,x,x") == q(1, 12));
  CHECK(l.coeff("n=3;e=1>2,2>3;d=x,x,x") == q(1, 3));
  CHECK(log(exp(x)) == x);
  CHECK(exp_series(log_series(x)) == x);
}

TEST_CASE("group law") {
  const AlgebraPtr a = Algebra::make({{"x", 0}, {"y", 0}, {"z", 0}}, 4);
  const GroupElement u = GroupElement::unit(a);
  const GroupElement gx = GroupElement::from_series(gen(a, "x"));
  const GroupElement gy = GroupElement::from_series(gen(a, "y"));
  const GroupElement gz = GroupElement::from_series(gen(a, "z"));
  CHECK(gp_product(gx, u) == gx);
  CHECK(gp_product(u, gx) == gx);
  CHECK(gp_product(gp_product(gx, gy), gz) == gp_product(gx, gp_product(gy, gz)));
  CHECK(gp_product(gx, gy) == gp_product(gx, gy, ProductRoute::Labeled));
  CHECK(gp_product(gx, gy).x().coeff("n=2;e=1>2;d=y,x") == 1);
  CHECK(gp_inverse(u).is_unit());
  CHECK(gp_product(gp_inverse(gx), gx).is_unit());
  CHECK(gp_product(gx, gp_inverse(gx)).is_unit());
  CHECK_THROWS_AS(GroupElement::from_series(gen(Algebra::make({{"a", -1}}, 3), "a")), Error);
}

TEST_CASE("non-connected product") {
  const AlgebraPtr a = Algebra::make({{"x", 0}, {"y", 0}}, 4, true);
  const Series x = gen(a, "x"), y = gen(a, "y");
  const GroupElement u = GroupElement::unit(a);
  CHECK(gp_product_nc(u, u).is_unit());
  // Empty levels are allowed, so a (.)nc 1 is the disjoint-union exponential of a.
  CHECK(gp_product_nc(GroupElement::from_series(x), u).x() == disjoint_exp(x));
  CHECK(gp_product_nc_series(x, y) == gp_product_nc_series(x, y, NcRoute::Assembly));
}

TEST_CASE("triangle actions") {
  const AlgebraPtr a = Algebra::make({{"x", 0}, {"y", 0}, {"w", 0}}, 4);
  const Series x = gen(a, "x"), y = gen(a, "y"), w = gen(a, "w");
  CHECK(tri_right(GroupElement::unit(a), y) == y);
  const GroupElement ex = exp(x);
  CHECK(tri_right(ex, y + w) == tri_right(ex, y) + tri_right(ex, w));
  CHECK(tri_left(y, GroupElement::unit(a)) == y);
}

TEST_CASE("BCH") {
  const AlgebraPtr a = Algebra::make({{"x", 0}, {"y", 0}}, 4);
  const Series x = gen(a, "x"), y = gen(a, "y");
  CHECK(bch(x, Series(a)) == x);
  CHECK(bch(Series(a), y) == y);
  const Series z = bch(x, y);
  CHECK(z.up_to_weight(2) == x + y + q(1, 2) * group_bracket(x, y));
  CHECK(exp(z) == gp_product(exp(x), exp(y)));
  CHECK(z == bch_via_log(x, y));
  const auto words = bch_word_coefficients(3);
  CHECK(words.at({0, 1}) == q(1, 2));
  CHECK(words.at({1, 0}) == q(-1, 2));
  CHECK(words.at({0, 0, 1}) == q(1, 12));
}

TEST_CASE("bowtie and gauge action") {
  const AlgebraPtr a = Algebra::make({{"l", 0}, {"a", -1}}, 4);
  const Series l = gen(a, "l"), alpha = gen(a, "a");
  const GroupElement u = GroupElement::unit(a);
  CHECK(bowtie(u, alpha, u) == alpha);
  CHECK(gauge_action(Series(a), alpha) == alpha);
  CHECK(gauge_action(l, alpha) == exp_ad(l, alpha));
  CHECK_THROWS_AS(gauge_action(alpha, alpha), Error);
}

TEST_CASE("reports") {
  const AlgebraPtr a = Algebra::make({{"x", 0}}, 3);
  const Series x = gen(a, "x");
  const IdentityReport ok = compare("x = x", x, x);
  CHECK(ok.pass);
  const IdentityReport bad = compare("x = 2x", x, q(2) * x);
  CHECK_FALSE(bad.pass);
  CHECK(bad.failing_weight == 1);
  CHECK(bad.lhs_coeff == 1);
  CHECK(bad.rhs_coeff == 2);
  CHECK(to_json(bad)["status"] == "fail");
  CHECK(to_text(ok).rfind("PASS", 0) == 0);
}
