#include "liegra/free_algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liegra/canonical.hpp"
#include "liegra/io.hpp"

namespace liegra {

namespace {

void require_same(const Algebra& a, const Algebra& b) {
  if (!a.same_as(b)) throw Error("series belong to different algebras (generators or truncation differ)");
}

// Calls `emit` for every graph obtained by inserting `blocks` into g: block a occupies
// vertices offset[a].., and each g-edge a->b becomes a nonempty set of block-a to block-b edges.
template <class Emit>
void for_each_block_composite(const DirectedGraph& g, const std::vector<const DirectedGraph*>& blocks, Emit&& emit) {
  const int k = g.size();
  std::array<int, kMaxVertices + 1> offset{};
  for (int a = 0; a < k; ++a) offset[a + 1] = offset[a] + blocks[a]->size();
  const int n = offset[k];
  DirectedGraph base(n);
  bool singletons = true;
  for (int a = 0; a < k; ++a) {
    if (blocks[a]->size() != 1) singletons = false;
    for (const Edge& e : blocks[a]->edges()) base.add_edge(offset[a] + e.src, offset[a] + e.dst);
  }
  if (singletons) {
    for (const Edge& e : g.edges()) base.add_edge(e.src, e.dst);
    emit(base);
    return;
  }
  struct Slot {
    int a, b, na, nb;
    std::uint32_t full;
  };
  std::vector<Slot> slots;
  for (const Edge& e : g.edges()) {
    const int na = blocks[e.src]->size();
    const int nb = blocks[e.dst]->size();
    if (na * nb > 30) throw Error("apply_graph: block product too large");
    slots.push_back({e.src, e.dst, na, nb, (std::uint32_t{1} << (na * nb)) - 1});
  }
  std::vector<std::uint32_t> choice(slots.size(), 1);
  while (true) {
    DirectedGraph r = base;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const Slot& sl = slots[s];
      for (std::uint32_t m = choice[s]; m != 0; m &= m - 1) {
        const int bit = std::countr_zero(m);
        r.add_edge(offset[sl.a] + bit / sl.nb, offset[sl.b] + bit % sl.nb);
      }
    }
    emit(r);
    std::size_t s = 0;
    while (s < choice.size() && choice[s] == slots[s].full) choice[s++] = 1;
    if (s == choice.size()) break;
    ++choice[s];
  }
}

using Term = std::pair<const Basis, Rational>;

}  // namespace

std::shared_ptr<const Algebra> Algebra::make(std::vector<Generator> gens, int K, bool nc, std::vector<int> caps) {
  if (K < 1) throw Error("truncation K must be at least 1");
  if (K > kMaxVertices) throw Error("truncation K exceeds the vertex limit");
  if (gens.empty()) throw Error("an algebra needs at least one generator");
  std::set<std::string> names;
  for (const Generator& g : gens) {
    if (g.name.empty() || !names.insert(g.name).second) throw Error("generator names must be unique and nonempty");
  }
  if (caps.empty()) caps.assign(gens.size(), -1);
  if (caps.size() != gens.size()) throw Error("one cap per generator expected");
  auto a = std::make_shared<Algebra>();
  a->gens_ = std::move(gens);
  a->K_ = K;
  a->nc_ = nc;
  a->caps_ = std::move(caps);
  return a;
}

int Algebra::index_of(const std::string& name) const {
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (gens_[k].name == name) return static_cast<int>(k);
  }
  throw Error("unknown generator '" + name + "'");
}

bool Algebra::admits(std::span<const int> deco) const {
  if (static_cast<int>(deco.size()) > K_) return false;
  for (std::size_t g = 0; g < caps_.size(); ++g) {
    if (caps_[g] < 0) continue;
    if (std::count(deco.begin(), deco.end(), static_cast<int>(g)) > caps_[g]) return false;
  }
  return true;
}

bool Algebra::same_as(const Algebra& other) const {
  return this == &other || (gens_ == other.gens_ && K_ == other.K_ && nc_ == other.nc_ && caps_ == other.caps_);
}

int Basis::count(int gen) const { return static_cast<int>(std::count(deco.begin(), deco.end(), gen)); }

Series::Series(AlgebraPtr algebra) : alg_(std::move(algebra)) {
  if (!alg_) throw Error("series needs an algebra");
}

Series Series::generator(AlgebraPtr algebra, const std::string& name) {
  Series s(algebra);
  s.add(Basis{DirectedGraph(1), {algebra->index_of(name)}}, 1);
  return s;
}

void Series::add(const Basis& b, const Rational& c) {
  if (c == 0 || !alg_->admits(b.deco)) return;
  auto [it, fresh] = terms_.try_emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Series::add_labeled(const DirectedGraph& g, std::span<const int> deco, const Rational& c) {
  if (c == 0 || !alg_->admits(deco)) return;
  VertexMask odd = 0;
  for (std::size_t v = 0; v < deco.size(); ++v) {
    if (alg_->odd(deco[v])) odd |= VertexMask{1} << v;
  }
  const CanonicalForm cf = canonicalize(g, deco, odd);
  if (cf.sign == 0) return;
  add(Basis{cf.graph, cf.colors}, cf.sign > 0 ? c : Rational(-c));
}

Rational Series::coeff(const Basis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::coeff_labeled(const DirectedGraph& g, std::span<const int> deco) const {
  Series probe(alg_);
  probe.add_labeled(g, deco, 1);
  if (probe.is_zero()) return 0;
  const auto& [b, sign] = *probe.terms_.begin();
  return coeff(b) * sign;
}

Rational Series::coeff(const std::string& text) const {
  const GraphText t = parse_graph(text);
  if (static_cast<int>(t.decoration.size()) != t.n) throw Error("series coefficient lookup needs a decoration");
  std::vector<int> deco;
  for (const std::string& name : t.decoration) deco.push_back(alg_->index_of(name));
  return coeff_labeled(t.graph(), deco);
}

int Series::min_weight() const {
  int w = kMaxVertices + 1;
  for (const auto& [b, c] : terms_) w = std::min(w, b.weight());
  return w;
}

std::optional<int> Series::degree() const {
  std::optional<int> d;
  for (const auto& [b, c] : terms_) {
    int e = 0;
    for (int g : b.deco) e += alg_->generators()[g].degree;
    if (d && *d != e) throw Error("series is not homogeneous in degree");
    d = e;
  }
  return d;
}

Series Series::weight_component(int n) const {
  return filter([n](const Basis& b) { return b.weight() == n; });
}

Series Series::up_to_weight(int n) const {
  return filter([n](const Basis& b) { return b.weight() <= n; });
}

Series Series::truncate(int K2) const {
  if (K2 > alg_->K()) throw Error("truncate: cannot raise the truncation order");
  Series out(Algebra::make(alg_->generators(), K2, alg_->nc(), alg_->caps()));
  for (const auto& [b, c] : terms_) out.add(b, c);
  return out;
}

Series Series::with_count(int gen, int count) const {
  return filter([gen, count](const Basis& b) { return b.count(gen) == count; });
}

Series Series::filter(const std::function<bool(const Basis&)>& keep) const {
  Series out(alg_);
  for (const auto& [b, c] : terms_) {
    if (keep(b)) out.terms_.emplace(b, c);
  }
  return out;
}

void Series::check_same(const Series& o) const {
  if (!alg_ || !o.alg_) throw Error("series without algebra");
  require_same(*alg_, *o.alg_);
}

Series& Series::operator+=(const Series& o) {
  check_same(o);
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_same(o);
  for (const auto& [b, c] : o.terms_) add(b, -c);
  return *this;
}

Series& Series::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= r;
  return *this;
}

Series Series::operator+(const Series& o) const { return Series(*this) += o; }
Series Series::operator-(const Series& o) const { return Series(*this) -= o; }
Series Series::operator-() const { return Series(*this) *= Rational(-1); }
Series Series::operator*(const Rational& r) const { return Series(*this) *= r; }
Series operator*(const Rational& r, const Series& s) { return s * r; }

bool Series::operator==(const Series& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

std::string describe(const Basis& b, const Algebra& alg) {
  std::vector<std::string> names;
  for (int g : b.deco) names.push_back(alg.generators()[g].name);
  return format_graph(b.graph, names);
}

Series apply_graph(const DirectedGraph& g, const std::vector<Series>& args, Exec exec) {
  const int k = g.size();
  if (static_cast<int>(args.size()) != k || k == 0) throw Error("apply_graph: argument count does not match the graph");
  for (const Series& a : args) {
    if (!a.algebra()) throw Error("apply_graph: series without algebra");
    require_same(*args[0].algebra(), *a.algebra());
  }
  const AlgebraPtr& alg = args[0].algebra();
  Series result(alg);
  const int K = alg->K();
  const int ngen = static_cast<int>(alg->generators().size());

  std::vector<std::vector<const Term*>> slot(k);
  for (int a = 0; a < k; ++a) {
    for (const Term& t : args[a].terms()) slot[a].push_back(&t);
    if (slot[a].empty()) return result;
    std::stable_sort(slot[a].begin(), slot[a].end(),
                     [](const Term* x, const Term* y) { return x->first.weight() < y->first.weight(); });
  }
  std::vector<int> rest_min(k + 1, 0);
  for (int a = k - 1; a >= 0; --a) rest_min[a] = rest_min[a + 1] + slot[a].front()->first.weight();
  if (rest_min[0] > K) return result;

  // Term tuples within the weight budget and the generator caps.
  std::vector<std::uint32_t> tuples;
  std::vector<std::uint32_t> cur(k);
  std::vector<int> counts(ngen, 0);
  const auto& caps = alg->caps();
  auto rec = [&](auto&& self, int a, int used) -> void {
    if (a == k) {
      tuples.insert(tuples.end(), cur.begin(), cur.end());
      return;
    }
    for (std::uint32_t t = 0; t < slot[a].size(); ++t) {
      const Basis& b = slot[a][t]->first;
      if (used + b.weight() + rest_min[a + 1] > K) break;
      bool fits = true;
      for (int gid : b.deco) {
        if (caps[gid] >= 0 && ++counts[gid] > caps[gid]) fits = false;
      }
      if (fits) {
        cur[a] = t;
        self(self, a + 1, used + b.weight());
      }
      for (int gid : b.deco) --counts[gid];
    }
  };
  rec(rec, 0, 0);
  const std::int64_t ntuples = static_cast<std::int64_t>(tuples.size() / k);

  auto process = [&](std::int64_t t, Series& into) {
    std::vector<const DirectedGraph*> blocks(k);
    std::vector<int> deco;
    Rational coeff = 1;
    for (int a = 0; a < k; ++a) {
      const Term* term = slot[a][tuples[t * k + a]];
      blocks[a] = &term->first.graph;
      deco.insert(deco.end(), term->first.deco.begin(), term->first.deco.end());
      coeff *= term->second;
    }
    for_each_block_composite(g, blocks, [&](const DirectedGraph& r) { into.add_labeled(r, deco, coeff); });
  };

  if (exec == Exec::Serial || ntuples < 8) {
    for (std::int64_t t = 0; t < ntuples; ++t) process(t, result);
    return result;
  }
  std::vector<Series> partial;
#pragma omp parallel
  {
#ifdef _OPENMP
#pragma omp single
    partial.assign(static_cast<std::size_t>(omp_get_num_threads()), Series(alg));
    Series& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    partial.assign(1, Series(alg));
    Series& mine = partial[0];
#endif
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < ntuples; ++t) process(t, mine);
  }
  for (const Series& p : partial) result += p;
  return result;
}

Series star(const Series& a, const Series& b) { return apply_graph(shapes::chain(2), {a, b}); }

Series bracket(const Series& a, const Series& b) {
  const int da = a.degree().value_or(0);
  const int db = b.degree().value_or(0);
  const Series ab = star(a, b);
  const Series ba = star(b, a);
  return (da * db) % 2 == 0 ? ab - ba : ab + ba;
}

Series disjoint_union(const std::vector<Series>& args) {
  if (args.empty()) throw Error("disjoint_union: no arguments");
  return apply_graph(DirectedGraph(static_cast<int>(args.size())), args);
}

Series substitute(const Series& s, const std::map<int, Series>& images) {
  const AlgebraPtr& alg = s.algebra();
  std::vector<Series> gens;
  for (const Generator& g : alg->generators()) gens.push_back(Series::generator(alg, g.name));
  Series out(alg);
  for (const auto& [b, c] : s.terms()) {
    std::vector<Series> args;
    for (int gid : b.deco) {
      auto it = images.find(gid);
      args.push_back(it == images.end() ? gens[gid] : it->second);
    }
    out += apply_graph(b.graph, args) * c;
  }
  return out;
}

Derivation::Derivation(AlgebraPtr algebra, std::map<std::string, Series> on_generators) : alg_(std::move(algebra)) {
  for (auto& [name, image] : on_generators) {
    const int gid = alg_->index_of(name);
    require_same(*alg_, *image.algebra());
    const auto d = image.degree();
    if (d && *d != alg_->generators()[gid].degree - 1) {
      throw Error("derivation image of '" + name + "' must have degree one less than the generator");
    }
    images_.emplace(gid, std::move(image));
  }
}

Series Derivation::operator()(const Series& s) const {
  require_same(*alg_, *s.algebra());
  std::vector<Series> gens;
  for (const Generator& g : alg_->generators()) gens.push_back(Series::generator(alg_, g.name));
  Series out(alg_);
  for (const auto& [b, c] : s.terms()) {
    int sign = 1;
    for (int v = 0; v < b.weight(); ++v) {
      auto it = images_.find(b.deco[v]);
      if (it != images_.end()) {
        std::vector<Series> args;
        for (int u = 0; u < b.weight(); ++u) args.push_back(u == v ? it->second : gens[b.deco[u]]);
        out += apply_graph(b.graph, args) * (c * sign);
      }
      if (alg_->odd(b.deco[v])) sign = -sign;
    }
  }
  return out;
}

Series leveled_sum(const std::vector<Level>& levels, bool connected,
                   const std::function<bool(const std::vector<int>&)>& shape_ok, const EnumerationCaps& caps) {
  if (levels.empty()) throw Error("leveled_sum: no levels");
  const AlgebraPtr& alg = levels[0].fill.algebra();
  for (const Level& l : levels) {
    require_same(*alg, *l.fill.algebra());
    if (l.marked) require_same(*alg, *l.marked->algebra());
  }
  const int k = static_cast<int>(levels.size());
  const int K = alg->K();
  Series out(alg);
  std::vector<int> shape(k, 0);
  auto visit = [&]() {
    int total = 0;
    int min_weight = 0;
    for (int l = 0; l < k; ++l) {
      const Level& lv = levels[l];
      const int s = shape[l];
      total += s;
      if (lv.marked) {
        if (s == 0 || lv.marked->is_zero()) return;
        if (s > 1 && lv.fill.is_zero()) return;
        min_weight += lv.marked->min_weight() + (s - 1) * (s > 1 ? lv.fill.min_weight() : 0);
      } else if (s > 0) {
        if (lv.fill.is_zero()) return;
        min_weight += s * lv.fill.min_weight();
      }
    }
    if (total == 0 || min_weight > K) return;
    if (shape_ok && !shape_ok(shape)) return;
    for (const LeveledClass& cls : enumerate_leveled(shape, connected, caps)) {
      const Rational weight(1, static_cast<unsigned long>(cls.aut_order));
      const auto& lg = cls.leveled;
      std::vector<Series> args;
      for (int v = 0; v < lg.graph.size(); ++v) args.push_back(levels[lg.level[v] - 1].fill);
      int marked_level = -1;
      for (int l = 0; l < k; ++l) {
        if (levels[l].marked) marked_level = l;
      }
      if (marked_level < 0) {
        out += apply_graph(lg.graph, args) * weight;
        continue;
      }
      for (int v = 0; v < lg.graph.size(); ++v) {
        if (lg.level[v] - 1 != marked_level) continue;
        std::vector<Series> marked_args = args;
        marked_args[v] = *levels[marked_level].marked;
        out += apply_graph(lg.graph, marked_args) * weight;
      }
    }
  };
  auto rec = [&](auto&& self, int l, int used) -> void {
    if (l == k) {
      visit();
      return;
    }
    for (int s = 0; used + s <= K; ++s) {
      shape[l] = s;
      self(self, l + 1, used + s);
    }
  };
  int marked_levels = 0;
  for (const Level& l : levels) marked_levels += l.marked ? 1 : 0;
  if (marked_levels > 1) throw Error("leveled_sum: at most one marked level");
  rec(rec, 0, 0);
  return out;
}

nlohmann::json to_json(const Series& s) {
  const Algebra& alg = *s.algebra();
  nlohmann::json j;
  j["K"] = alg.K();
  j["generators"] = nlohmann::json::array();
  for (const Generator& g : alg.generators()) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  j["terms"] = nlohmann::json::array();
  for (const auto& [b, c] : s.terms()) {
    std::vector<std::string> names;
    for (int g : b.deco) names.push_back(alg.generators()[g].name);
    j["terms"].push_back({{"coeff", to_string(c)}, {"graph", to_json(b.graph)}, {"decoration", names}});
  }
  return j;
}

std::string to_text(const Series& s) {
  std::string out;
  for (const auto& [b, c] : s.terms()) out += to_string(c) + "  " + describe(b, *s.algebra()) + "\n";
  return out;
}

}  // namespace liegra
