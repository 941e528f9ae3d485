#include <doctest.h>

#include "liegra/verify.hpp"

using namespace liegra;

namespace {

void check_suite(const std::string& name) {
  for (const IdentityReport& r : run_suite(name)) {
    CAPTURE(name);
    CAPTURE(to_text(r));
    CHECK((r.pass || r.informational));
  }
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 13);
  CHECK(expand_suite("all") == suite_names());
  CHECK(expand_suite("exp-log") == std::vector<std::string>{"exp", "log"});
  CHECK_THROWS_AS(expand_suite("nope"), Error);
}

TEST_CASE("rooted trees") {
  const std::vector<std::size_t> counts{1, 1, 2, 4, 9};
  for (int n = 1; n <= 5; ++n) CHECK(rooted_trees(n).size() == counts[static_cast<std::size_t>(n - 1)]);
  for (const RootedTreeInfo& t : rooted_trees(4)) CHECK(t.graph.edge_count() == 3);
}

TEST_CASE("basis") { check_suite("basis"); }
TEST_CASE("composition") { check_suite("composition"); }
TEST_CASE("exp") { check_suite("exp"); }
TEST_CASE("log") { check_suite("log"); }
TEST_CASE("group") { check_suite("group"); }
TEST_CASE("bch") { check_suite("bch"); }
TEST_CASE("flow") { check_suite("flow"); }
TEST_CASE("action") { check_suite("action"); }
TEST_CASE("dg") { check_suite("dg"); }
TEST_CASE("nc") { check_suite("nc"); }
TEST_CASE("reductions") { check_suite("reductions"); }

TEST_CASE("star orientation is reported, not counted") {
  bool saw_info = false;
  for (const IdentityReport& r : run_suite("bch")) saw_info = saw_info || r.informational;
  CHECK(saw_info);
}
