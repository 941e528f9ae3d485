#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liegra/enumerate.hpp"
#include "liegra/rational.hpp"

namespace liegra {

enum class CountRoute {
  OrientationCodes,  // every orientation code of the complete graph, filtered
  Extension,         // DAGs grown vertex by vertex with reachability masks
};

/// Labeled connected simple DAGs on n vertices.
BigInt count_dsgra(int n, CountRoute route = CountRoute::OrientationCodes, Exec exec = Exec::Parallel,
                   const EnumerationCaps& caps = default_caps());

BigInt lower_bound(int n);  // 2^(C(n,2) - n + 1)
BigInt upper_bound(int n);  // 3^C(n,2)
/// lower_bound(n) < count_dsgra(n) for n >= 3.
bool lower_bound_check(int n, const EnumerationCaps& caps = default_caps());

/// s_n by the recurrence, s_1 = s_2 = 1.
BigInt schroder(int n);
/// Rooted planar trees with n leaves and internal arities >= 2, counted by
/// splitting the leaves over the root's ordered subtrees.
BigInt schroder_by_trees(int n);

BigInt shuffle_tree_bound(int n, const BigInt& b);  // 6^n n! b^(n-1)

struct GrowthRow {
  int n = 0;
  std::optional<BigInt> exact;
  BigInt lower;
  BigInt upper;
  BigInt schroder;
  BigInt shuffle_bound;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  BigInt b;
  int exact_cap = 0;
  /// (log2 lower(n) - log2 lower(n-1)) - (log2 shuffle(n) - log2 shuffle(n-1)) for n in [8, n_max].
  std::vector<std::pair<int, double>> slope_gap;
  bool diverging = false;  // slope_gap strictly increasing
  std::optional<int> crossover;  // first n with lower bound above the shuffle bound (searched to 400)
  std::string verdict;
};

/// Rows for 1..n_max; exact counts up to `exact_cap`. When b is absent it is the
/// largest exact count in range.
GrowthReport growth_report(int n_max, std::optional<BigInt> b = {}, int exact_cap = 6);

std::string to_csv(const GrowthReport& r);
nlohmann::json to_json(const GrowthReport& r);
std::string to_text(const GrowthReport& r);

}  // namespace liegra
