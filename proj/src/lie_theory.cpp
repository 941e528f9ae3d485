#include "liegra/lie_theory.hpp"

#include <algorithm>
#include <cctype>

#include "liegra/canonical.hpp"

namespace liegra {

namespace {

Rational inv_factorial(int n) { return Rational(1, static_cast<unsigned long>(factorial(n))); }

void require_nc(const Series& s) {
  if (!s.algebra()->nc()) throw Error("the nc product needs an algebra with disconnected basis graphs");
}

// Ordered tuples (k_1, ..., k_r), k_i >= 1, summing to n.
void for_each_composition(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(r, 1);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == r - 1) {
      parts[i] = left;
      fn(parts);
      return;
    }
    for (int k = 1; k <= left - (r - 1 - i); ++k) {
      parts[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (r >= 1 && n >= r) rec(rec, 0, n);
}

Series exp_direct(const Series& x) {
  const AlgebraPtr& alg = x.algebra();
  Series out(alg);
  if (x.is_zero()) return out;
  const int mw = x.min_weight();
  for (int n = 1; n * mw <= alg->K(); ++n) {
    const Rational nfact_inv = inv_factorial(n);
    for (const IsoClass& cls : enumerate_iso_classes(n, Flavor::ConnectedSimple)) {
      const Rational c = make_rational(static_cast<long>(linear_extension_count(cls.graph)),
                                       static_cast<long>(cls.aut_order)) *
                         nfact_inv;
      out += apply_graph(cls.graph, std::vector<Series>(n, x)) * c;
    }
  }
  return out;
}

Series exp_flow(const Series& x) {
  const AlgebraPtr& alg = x.algebra();
  Series out(alg);
  if (x.is_zero()) return out;
  const int K = alg->K();
  std::vector<Series> E(K + 1, Series(alg));
  for (int n = 1; n <= K && n * x.min_weight() <= K; ++n) {
    Series acc(alg);
    if (n == 1) acc = x;
    for (int r = 1; r <= n - 1; ++r) {
      const DirectedGraph corolla = shapes::corolla_up(r);
      for_each_composition(n - 1, r, [&](const std::vector<int>& ks) {
        std::vector<Series> args{x};
        for (int k : ks) {
          if (E[k].is_zero()) return;
          args.push_back(E[k]);
        }
        acc += apply_graph(corolla, args) * inv_factorial(r);
      });
    }
    E[n] = acc * Rational(1, n);
    out += E[n];
  }
  return out;
}

Rational sign_of(int da, int db) { return (da * db) % 2 == 0 ? Rational(1) : Rational(-1); }

int degree_or_zero(const Series& s) { return s.degree().value_or(0); }

}  // namespace

GroupElement GroupElement::unit(AlgebraPtr algebra) { return GroupElement(Series(std::move(algebra))); }

GroupElement GroupElement::from_series(Series x) {
  if (x.degree().value_or(0) != 0) throw Error("group elements have degree 0");
  return GroupElement(std::move(x));
}

Series exp_series(const Series& x, ExpRoute route) {
  return route == ExpRoute::Direct ? exp_direct(x) : exp_flow(x);
}

GroupElement exp(const Series& x, ExpRoute route) { return GroupElement::from_series(exp_series(x, route)); }

Series log_series(const Series& x) {
  const AlgebraPtr& alg = x.algebra();
  Series y(alg);
  for (int k = 1; k <= alg->K(); ++k) {
    const Series residual = x - exp_series(y);
    if (residual.is_zero()) break;
    y += residual.weight_component(k);
  }
  return y;
}

Series log(const GroupElement& e) { return log_series(e.x()); }

Series gp_product_series(const Series& x, const Series& y, ProductRoute route) {
  if (route == ProductRoute::IsoClasses) return leveled_sum({Level{x, {}}, Level{y, {}}});
  const AlgebraPtr& alg = x.algebra();
  const int K = alg->K();
  Series out(alg);
  for (int p = 0; p <= K; ++p) {
    for (int q = 0; p + q <= K; ++q) {
      if (p + q == 0 || (p > 0 && x.is_zero()) || (q > 0 && y.is_zero())) continue;
      if (p * (p > 0 ? x.min_weight() : 0) + q * (q > 0 ? y.min_weight() : 0) > K) continue;
      const Rational c = inv_factorial(p) * inv_factorial(q);
      for (const LeveledGraph& lg : enumerate_leveled_labeled({p, q}, true)) {
        std::vector<Series> args;
        for (int v = 0; v < lg.graph.size(); ++v) args.push_back(lg.level[v] == 1 ? x : y);
        out += apply_graph(lg.graph, args) * c;
      }
    }
  }
  return out;
}

GroupElement gp_product(const GroupElement& a, const GroupElement& b, ProductRoute route) {
  return GroupElement::from_series(gp_product_series(a.x(), b.x(), route));
}

GroupElement gp_triple(const GroupElement& a, const GroupElement& b, const GroupElement& c) {
  return GroupElement::from_series(leveled_sum({Level{a.x(), {}}, Level{b.x(), {}}, Level{c.x(), {}}}));
}

GroupElement gp_inverse(const GroupElement& a) {
  const Series& x = a.x();
  const AlgebraPtr& alg = x.algebra();
  Series out(alg);
  if (x.is_zero()) return a;
  for (int n = 1; n * x.min_weight() <= alg->K(); ++n) {
    for (const IsoClass& cls : enumerate_iso_classes(n, Flavor::ConnectedSimple)) {
      const Rational c(n % 2 == 0 ? 1 : -1, static_cast<unsigned long>(cls.aut_order));
      out += apply_graph(cls.graph, std::vector<Series>(n, x)) * c;
    }
  }
  return GroupElement::from_series(out);
}

Series disjoint_exp(const Series& x) {
  require_nc(x);
  Series out(x.algebra());
  if (x.is_zero()) return out;
  for (int n = 1; n * x.min_weight() <= x.algebra()->K(); ++n) {
    out += disjoint_union(std::vector<Series>(n, x)) * inv_factorial(n);
  }
  return out;
}

Series gp_product_nc_series(const Series& x, const Series& y, NcRoute route) {
  require_nc(x);
  if (route == NcRoute::Assembly) return disjoint_exp(gp_product_series(x, y));
  return leveled_sum({Level{x, {}}, Level{y, {}}}, false);
}

GroupElement gp_product_nc(const GroupElement& a, const GroupElement& b, NcRoute route) {
  return GroupElement::from_series(gp_product_nc_series(a.x(), b.x(), route));
}

GroupElement gp_triple_nc(const GroupElement& a, const GroupElement& b, const GroupElement& c) {
  require_nc(a.x());
  return GroupElement::from_series(leveled_sum({Level{a.x(), {}}, Level{b.x(), {}}, Level{c.x(), {}}}, false));
}

Series tri_right_series(const Series& x, const Series& y) {
  Series out = y;
  if (x.is_zero() || y.is_zero()) return out;
  const int K = x.algebra()->K();
  for (int r = 1; y.min_weight() + r * x.min_weight() <= K; ++r) {
    std::vector<Series> args{y};
    args.insert(args.end(), r, x);
    out += apply_graph(shapes::corolla_up(r), args) * inv_factorial(r);
  }
  return out;
}

Series tri_right(const GroupElement& a, const Series& y) { return tri_right_series(a.x(), y); }

Series tri_left_series(const Series& x, const Series& y) {
  Series out = x;
  if (x.is_zero() || y.is_zero()) return out;
  const int K = x.algebra()->K();
  for (int r = 1; x.min_weight() + r * y.min_weight() <= K; ++r) {
    std::vector<Series> args(r, y);
    args.push_back(x);
    out += apply_graph(shapes::corolla_down(r), args) * inv_factorial(r);
  }
  return out;
}

Series tri_left(const Series& x, const GroupElement& b) { return tri_left_series(x, b.x()); }

Series lower(const Series& a, const Series& b) { return star(b, a); }

Series group_bracket(const Series& a, const Series& b) {
  return lower(a, b) - lower(b, a) * sign_of(degree_or_zero(a), degree_or_zero(b));
}

Series lie_bracket(const Series& a, const Series& b, BracketConvention conv) {
  return conv == BracketConvention::Group ? group_bracket(a, b) : bracket(a, b);
}

std::map<std::vector<int>, Rational> bch_word_coefficients(int K) {
  using Word = std::vector<int>;
  using Poly = std::map<Word, Rational>;
  auto mul = [K](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [u, cu] : a) {
      for (const auto& [v, cv] : b) {
        if (static_cast<int>(u.size() + v.size()) > K) continue;
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        out[w] += cu * cv;
      }
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
  };
  auto exp_letter = [K](int letter) {
    Poly p;
    for (int n = 0; n <= K; ++n) p[Word(n, letter)] = inv_factorial(n);
    return p;
  };
  Poly w = mul(exp_letter(0), exp_letter(1));
  w.erase(Word{});
  Poly result;
  Poly power = w;
  for (int k = 1; k <= K; ++k) {
    const Rational c(k % 2 == 1 ? 1 : -1, k);
    for (const auto& [word, coeff] : power) result[word] += c * coeff;
    power = mul(power, w);
  }
  std::erase_if(result, [](const auto& t) { return t.second == 0; });
  return result;
}

Series bch(const Series& x, const Series& y, BracketConvention conv) {
  const AlgebraPtr& alg = x.algebra();
  const int K = alg->K();
  std::map<std::vector<int>, Series> nested;
  std::function<const Series&(const std::vector<int>&)> eval = [&](const std::vector<int>& w) -> const Series& {
    if (auto it = nested.find(w); it != nested.end()) return it->second;
    Series value(alg);
    if (w.size() == 1) {
      value = w[0] == 0 ? x : y;
    } else {
      const std::vector<int> tail(w.begin() + 1, w.end());
      value = lie_bracket(w[0] == 0 ? x : y, eval(tail), conv);
    }
    return nested.emplace(w, std::move(value)).first->second;
  };
  Series out(alg);
  for (const auto& [w, c] : bch_word_coefficients(K)) {
    out += eval(w) * (c / static_cast<long>(w.size()));
  }
  return out;
}

Series bch_via_log(const Series& x, const Series& y) {
  return log_series(gp_product_series(exp_series(x), exp_series(y)));
}

Series bowtie_series(const Series& x, const Series& m, const Series& y) {
  return leveled_sum({Level{x, {}}, Level{m, {}}, Level{y, {}}}, true,
                     [](const std::vector<int>& shape) { return shape[1] == 1; });
}

Series bowtie(const GroupElement& a, const Series& m, const GroupElement& b) { return bowtie_series(a.x(), m, b.x()); }

Series gauge_action(const Series& lambda, const Series& alpha) {
  if (lambda.degree().value_or(0) != 0) throw Error("gauge action: lambda must have degree 0");
  return bowtie(exp(lambda), alpha, exp(-lambda));
}

Series exp_ad(const Series& lambda, const Series& alpha, BracketConvention conv) {
  Series out = alpha;
  Series term = alpha;
  for (int k = 1; k <= alpha.algebra()->K() && !term.is_zero(); ++k) {
    term = lie_bracket(lambda, term, conv) * Rational(1, k);
    out += term;
  }
  return out;
}

Series polarize(const std::function<Series(const Series&)>& F, const Series& at, const Series& direction) {
  const int m = at.algebra()->K();
  Series out(at.algebra());
  for (int j = 0; j <= m; ++j) {
    // Derivative at 0 of the Lagrange basis polynomial of node j on nodes 0..m.
    Rational denom = 1;
    for (int i = 0; i <= m; ++i) {
      if (i != j) denom *= j - i;
    }
    Rational numer = 0;
    for (int k = 0; k <= m; ++k) {
      if (k == j) continue;
      Rational prod = 1;
      for (int i = 0; i <= m; ++i) {
        if (i != j && i != k) prod *= -i;
      }
      numer += prod;
    }
    const Rational w = numer / denom;
    if (w != 0) out += F(at + direction * Rational(j)) * w;
  }
  return out;
}

Series product_linearized(const Series& x, const Series& y, Slot slot, const Series& direction) {
  if (slot == Slot::Bottom) return leveled_sum({Level{x, direction}, Level{y, {}}});
  return leveled_sum({Level{x, {}}, Level{y, direction}});
}

IdentityReport compare(const std::string& name, const Series& lhs, const Series& rhs) {
  IdentityReport r;
  r.name = name;
  r.K = lhs.algebra()->K();
  const Series diff = lhs - rhs;
  r.differing_terms = diff.size();
  r.pass = diff.is_zero();
  if (!r.pass) {
    const int w = diff.min_weight();
    const Series at = diff.weight_component(w);
    const Basis& b = at.terms().begin()->first;
    r.failing_weight = w;
    r.failing_class = describe(b, *lhs.algebra());
    r.lhs_coeff = lhs.coeff(b);
    r.rhs_coeff = rhs.coeff(b);
  }
  return r;
}

IdentityReport compare(const std::string& name, const GroupElement& lhs, const GroupElement& rhs) {
  return compare(name, lhs.x(), rhs.x());
}

IdentityReport boolean_report(const std::string& name, int K, bool pass, const std::string& detail) {
  IdentityReport r;
  r.name = name;
  r.K = K;
  r.pass = pass;
  r.failing_class = detail;
  return r;
}

IdentityReport coefficient_report(const std::string& name, const Series& s,
                                  const std::vector<std::pair<std::string, Rational>>& expected) {
  for (const auto& [text, value] : expected) {
    const Rational got = s.coeff(text);
    if (got != value) {
      return boolean_report(name, s.algebra()->K(), false,
                            text + ": got " + to_string(got) + ", expected " + to_string(value));
    }
  }
  return boolean_report(name, s.algebra()->K(), true, std::to_string(expected.size()) + " coefficients");
}

namespace {

std::string status_word(const IdentityReport& r) {
  if (r.informational) return "info";
  return r.pass ? "pass" : "fail";
}

}  // namespace

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j{{"identity", r.name}, {"K", r.K}, {"status", status_word(r)}};
  if (r.failing_weight) {
    j["failing_weight"] = *r.failing_weight;
    j["failing_class"] = r.failing_class;
    j["lhs"] = to_string(r.lhs_coeff);
    j["rhs"] = to_string(r.rhs_coeff);
    j["differing_terms"] = r.differing_terms;
  } else if (!r.failing_class.empty()) {
    j["detail"] = r.failing_class;
  }
  return j;
}

std::string to_text(const IdentityReport& r) {
  std::string word = status_word(r);
  std::transform(word.begin(), word.end(), word.begin(), ::toupper);
  std::string s = word + "  " + r.name + "  K=" + std::to_string(r.K);
  if (r.failing_weight) {
    s += "  weight " + std::to_string(*r.failing_weight) + " at " + r.failing_class + ": lhs " +
         to_string(r.lhs_coeff) + " rhs " + to_string(r.rhs_coeff) + " (" + std::to_string(r.differing_terms) +
         " differing terms)";
  } else if (!r.failing_class.empty()) {
    s += "  " + r.failing_class;
  }
  return s;
}

}  // namespace liegra
