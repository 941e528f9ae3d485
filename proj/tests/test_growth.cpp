#include <doctest.h>

#include "liegra/growth.hpp"

using namespace liegra;

TEST_CASE("exact counts") {
  const std::vector<long> expected{1, 2, 18, 446, 26430};
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const BigInt e = expected[static_cast<std::size_t>(n - 1)];
    CHECK(count_dsgra(n) == e);
    CHECK(count_dsgra(n, CountRoute::OrientationCodes, Exec::Serial) == e);
    CHECK(count_dsgra(n, CountRoute::Extension) == e);
    CHECK(count_dsgra(n, CountRoute::Extension, Exec::Serial) == e);
  }
}

TEST_CASE("bounds") {
  CHECK(lower_bound(2) == 1);
  CHECK(lower_bound(3) == 2);
  CHECK(upper_bound(3) == 27);
  for (int n = 3; n <= 5; ++n) {
    CHECK(lower_bound_check(n));
    CHECK(count_dsgra(n) <= upper_bound(n));
  }
}

TEST_CASE("Schroder numbers") {
  const std::vector<long> s{1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049};
  for (int n = 1; n <= 10; ++n) {
    CHECK(schroder(n) == s[static_cast<std::size_t>(n - 1)]);
    CHECK(schroder_by_trees(n) == s[static_cast<std::size_t>(n - 1)]);
  }
  BigInt six = 1;
  for (int n = 1; n <= 20; ++n) {
    six *= 6;
    CHECK(schroder(n) <= six);
  }
  CHECK(shuffle_tree_bound(2, 3) == 36 * 2 * 3);
}

TEST_CASE("growth report") {
  const GrowthReport r = growth_report(20, BigInt(26430), 5);
  REQUIRE(r.rows.size() == 20);
  CHECK(r.rows[4].exact == BigInt(26430));
  CHECK_FALSE(r.rows[5].exact.has_value());
  CHECK(r.diverging);
  REQUIRE(r.crossover.has_value());
  CHECK(*r.crossover > 20);
  CHECK_FALSE(r.verdict.empty());
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("n,exact,lower,upper,schroder,shuffle_bound\n", 0) == 0);
  CHECK(to_json(r)["rows"].size() == 20);
}
