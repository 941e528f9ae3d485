#pragma once

#include <string>
#include <vector>

#include "liegra/lie_theory.hpp"

namespace liegra {

struct VerifyOptions {
  int K = 0;  // 0: 5 for one-generator identities, 4 for several generators
};

/// Suites in report order: basis, composition, operad-axioms, exp, log, group, bch,
/// flow, action, dg, nc, reductions, growth.
const std::vector<std::string>& suite_names();

/// Resolves aliases ("exp-log", "all"); throws Error for unknown names.
std::vector<std::string> expand_suite(const std::string& name);

std::vector<IdentityReport> run_suite(const std::string& suite, const VerifyOptions& opts = {});

/// Rooted trees on n vertices (edges child -> root) with tree factorial and symmetry
/// factor, generated from sorted child multisets.
struct RootedTreeInfo {
  DirectedGraph graph;
  std::uint64_t tree_factorial = 1;
  std::uint64_t symmetry = 1;
};
std::vector<RootedTreeInfo> rooted_trees(int n);

/// Reference nine-term Lie-gra and four-term RT compositions, one graph per line.
std::string golden_liegra_composition();
std::string golden_rt_composition();

}  // namespace liegra
