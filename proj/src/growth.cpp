#include "liegra/growth.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

namespace liegra {

namespace {

using Masks = std::array<VertexMask, kMaxVertices>;

bool connected(int n, const Masks& out, const Masks& in) {
  VertexMask seen = 1;
  VertexMask frontier = 1;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      const int v = std::countr_zero(f);
      next |= out[v] | in[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1);
}

bool acyclic(int n, const Masks& in) {
  VertexMask done = 0;
  for (int round = 0; round < n; ++round) {
    bool progressed = false;
    for (int v = 0; v < n; ++v) {
      if (((done >> v) & 1U) == 0 && (in[v] & ~done) == 0) {
        done |= VertexMask{1} << v;
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  return std::popcount(done) == n;
}

bool code_is_dsgra(int n, std::uint64_t code) {
  Masks out{}, in{};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int digit = static_cast<int>(code % 3);
      code /= 3;
      if (digit == 1) {
        out[i] |= VertexMask{1} << j;
        in[j] |= VertexMask{1} << i;
      } else if (digit == 2) {
        out[j] |= VertexMask{1} << i;
        in[i] |= VertexMask{1} << j;
      } else {
        continue;
      }
    }
  }
  return connected(n, out, in) && acyclic(n, in);
}

std::uint64_t count_codes(int n, Exec exec) {
  std::uint64_t total = 1;
  for (int p = 0; p < n * (n - 1) / 2; ++p) total *= 3;
  std::int64_t count = 0;
  const auto total_signed = static_cast<std::int64_t>(total);
  if (exec == Exec::Serial) {
    for (std::int64_t c = 0; c < total_signed; ++c) count += code_is_dsgra(n, static_cast<std::uint64_t>(c)) ? 1 : 0;
  } else {
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::int64_t c = 0; c < total_signed; ++c) count += code_is_dsgra(n, static_cast<std::uint64_t>(c)) ? 1 : 0;
  }
  return static_cast<std::uint64_t>(count);
}

// Vertex k joins with parents P and children C among 0..k-1; a cycle appears exactly
// when some child reaches some parent. reach[v] holds v and everything below it.
struct Extender {
  int n = 0;
  Masks out{}, in{}, reach{};
  std::uint64_t count = 0;

  void grow(int k) {
    if (k == n) {
      if (connected(n, out, in)) ++count;
      return;
    }
    const VertexMask all = (VertexMask{1} << k) - 1;
    for (VertexMask parents = 0;; parents = (parents - all) & all) {
      // Children are drawn from vertices that cannot reach a parent.
      VertexMask allowed = all & ~parents;
      for (int v = 0; v < k; ++v) {
        if ((reach[v] & parents) != 0) allowed &= ~(VertexMask{1} << v);
      }
      for (VertexMask children = 0;; children = (children - allowed) & allowed) {
        place(k, parents, children);
        grow(k + 1);
        unplace(k, parents, children);
        if (children == allowed) break;
      }
      if (parents == all) break;
    }
  }

  void place(int k, VertexMask parents, VertexMask children) {
    stack.push_back(reach);
    out[k] = children;
    in[k] = parents;
    VertexMask below = VertexMask{1} << k;
    for (VertexMask c = children; c != 0; c &= c - 1) below |= reach[std::countr_zero(c)];
    reach[k] = below;
    for (VertexMask p = parents; p != 0; p &= p - 1) {
      const int u = std::countr_zero(p);
      out[u] |= VertexMask{1} << k;
    }
    for (VertexMask c = children; c != 0; c &= c - 1) in[std::countr_zero(c)] |= VertexMask{1} << k;
    // Everything that reaches a parent now reaches k and below.
    for (int v = 0; v < k; ++v) {
      if ((reach[v] & parents) != 0) reach[v] |= below;
    }
  }

  void unplace(int k, VertexMask parents, VertexMask children) {
    reach = stack.back();
    stack.pop_back();
    for (VertexMask p = parents; p != 0; p &= p - 1) out[std::countr_zero(p)] &= ~(VertexMask{1} << k);
    for (VertexMask c = children; c != 0; c &= c - 1) in[std::countr_zero(c)] &= ~(VertexMask{1} << k);
    out[k] = in[k] = reach[k] = 0;
  }

  std::vector<Masks> stack;  // saved reach masks
};

std::uint64_t count_extension(int n) {
  Extender e;
  e.n = n;
  e.grow(0);
  return e.count;
}

BigInt pow_big(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

double log2_big(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

}  // namespace

BigInt count_dsgra(int n, CountRoute route, Exec exec, const EnumerationCaps& caps) {
  if (n < 1) throw Error("count_dsgra: n must be at least 1");
  if (n > caps.labeled) throw CapExceeded("exact count n=" + std::to_string(n), caps.labeled);
  const std::uint64_t c = route == CountRoute::OrientationCodes ? count_codes(n, exec) : count_extension(n);
  return BigInt(std::to_string(c));
}

BigInt lower_bound(int n) { return pow_big(2, static_cast<unsigned long>(n * (n - 1) / 2 - n + 1)); }

BigInt upper_bound(int n) { return pow_big(3, static_cast<unsigned long>(n * (n - 1) / 2)); }

bool lower_bound_check(int n, const EnumerationCaps& caps) { return lower_bound(n) < count_dsgra(n, CountRoute::OrientationCodes, Exec::Parallel, caps); }

BigInt schroder(int n) {
  if (n < 1) throw Error("schroder: n must be at least 1");
  BigInt prev2 = 1, prev1 = 1;
  if (n <= 2) return 1;
  for (int m = 3; m <= n; ++m) {
    BigInt next = ((6 * m - 9) * prev1 - (m - 3) * prev2) / m;
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

BigInt schroder_by_trees(int n) {
  if (n < 1) throw Error("schroder_by_trees: n must be at least 1");
  // forests[m][k]: ordered sequences of k trees with m leaves in total.
  std::vector<BigInt> trees(n + 1, 0);
  trees[1] = 1;
  for (int m = 2; m <= n; ++m) {
    std::vector<std::vector<BigInt>> seq(m + 1, std::vector<BigInt>(m + 1, 0));
    seq[0][0] = 1;
    for (int k = 1; k <= m; ++k) {
      for (int total = 1; total <= m; ++total) {
        for (int first = 1; first <= total && first < m; ++first) seq[total][k] += trees[first] * seq[total - first][k - 1];
      }
    }
    for (int k = 2; k <= m; ++k) trees[m] += seq[m][k];
  }
  return trees[n];
}

BigInt shuffle_tree_bound(int n, const BigInt& b) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  BigInt bp;
  mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return pow_big(6, static_cast<unsigned long>(n)) * f * bp;
}

GrowthReport growth_report(int n_max, std::optional<BigInt> b, int exact_cap) {
  if (n_max < 1) throw Error("growth_report: n_max must be at least 1");
  GrowthReport r;
  r.exact_cap = exact_cap;
  EnumerationCaps caps;
  caps.labeled = exact_cap;
  std::map<int, BigInt> exact;
  for (int n = 1; n <= std::min(n_max, exact_cap); ++n) exact[n] = count_dsgra(n, CountRoute::OrientationCodes, Exec::Parallel, caps);
  if (b) {
    r.b = *b;
  } else {
    r.b = 1;
    for (const auto& [n, c] : exact) r.b = c > r.b ? c : r.b;
  }
  for (int n = 1; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    if (auto it = exact.find(n); it != exact.end()) row.exact = it->second;
    row.lower = lower_bound(n);
    row.upper = upper_bound(n);
    row.schroder = schroder(n);
    row.shuffle_bound = shuffle_tree_bound(n, r.b);
    r.rows.push_back(std::move(row));
  }
  auto log_lower = [](int n) { return static_cast<double>(n * (n - 1) / 2 - n + 1); };
  auto log_shuffle = [&](int n) { return log2_big(shuffle_tree_bound(n, r.b)); };
  r.diverging = n_max >= 9;
  for (int n = 8; n <= n_max; ++n) {
    const double gap = (log_lower(n) - log_lower(n - 1)) - (log_shuffle(n) - log_shuffle(n - 1));
    if (!r.slope_gap.empty() && !(gap > r.slope_gap.back().second)) r.diverging = false;
    r.slope_gap.emplace_back(n, gap);
  }
  for (int n = 1; n <= 400; ++n) {
    if (lower_bound(n) > shuffle_tree_bound(n, r.b)) {
      r.crossover = n;
      break;
    }
  }
  std::ostringstream v;
  if (r.diverging) {
    v << "evidence on 8.." << n_max
      << ": the log2 increments of the lower bound outgrow those of the shuffle-tree bound at every step";
  } else {
    v << "no divergence established on the computed range";
  }
  if (r.crossover) v << "; lower bound exceeds the shuffle-tree bound from n=" << *r.crossover;
  r.verdict = v.str();
  return r;
}

std::string to_csv(const GrowthReport& r) {
  std::ostringstream out;
  out << "n,exact,lower,upper,schroder,shuffle_bound\n";
  for (const GrowthRow& row : r.rows) {
    out << row.n << ',' << (row.exact ? row.exact->get_str() : "") << ',' << row.lower.get_str() << ','
        << row.upper.get_str() << ',' << row.schroder.get_str() << ',' << row.shuffle_bound.get_str() << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const GrowthReport& r) {
  nlohmann::json j;
  j["b"] = r.b.get_str();
  j["exact_cap"] = r.exact_cap;
  j["rows"] = nlohmann::json::array();
  for (const GrowthRow& row : r.rows) {
    nlohmann::json jr{{"n", row.n},
                      {"lower", row.lower.get_str()},
                      {"upper", row.upper.get_str()},
                      {"schroder", row.schroder.get_str()},
                      {"shuffle_bound", row.shuffle_bound.get_str()}};
    jr["exact"] = row.exact ? nlohmann::json(row.exact->get_str()) : nlohmann::json(nullptr);
    j["rows"].push_back(jr);
  }
  j["slope_gap"] = nlohmann::json::array();
  for (const auto& [n, g] : r.slope_gap) j["slope_gap"].push_back({{"n", n}, {"gap", g}});
  j["diverging"] = r.diverging;
  j["crossover"] = r.crossover ? nlohmann::json(*r.crossover) : nlohmann::json(nullptr);
  j["verdict"] = r.verdict;
  return j;
}

std::string to_text(const GrowthReport& r) {
  std::ostringstream out;
  out << "b = " << r.b.get_str() << "\n";
  out << "n  exact  lower  upper  s_n  shuffle_bound\n";
  for (const GrowthRow& row : r.rows) {
    out << row.n << "  " << (row.exact ? row.exact->get_str() : "-") << "  " << row.lower.get_str() << "  "
        << row.upper.get_str() << "  " << row.schroder.get_str() << "  " << row.shuffle_bound.get_str() << "\n";
  }
  out << "verdict: " << r.verdict << "\n";
  return out.str();
}

}  // namespace liegra
