#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liegra/enumerate.hpp"
#include "liegra/graph.hpp"
#include "liegra/rational.hpp"

namespace liegra {

struct Generator {
  std::string name;
  int degree = 0;
  bool operator==(const Generator&) const = default;
};

/// Generators, truncation weight K, optional per-generator caps on the number of
/// vertices a term may carry, and whether disconnected basis graphs are allowed.
class Algebra {
public:
  static std::shared_ptr<const Algebra> make(std::vector<Generator> gens, int K, bool nc = false,
                                             std::vector<int> caps = {});

  const std::vector<Generator>& generators() const { return gens_; }
  int K() const { return K_; }
  bool nc() const { return nc_; }
  const std::vector<int>& caps() const { return caps_; }

  int index_of(const std::string& name) const;
  bool odd(int gen) const { return gens_[gen].degree % 2 != 0; }
  /// Weight and per-generator caps are respected by a decoration.
  bool admits(std::span<const int> deco) const;
  bool same_as(const Algebra& other) const;

private:
  std::vector<Generator> gens_;
  int K_ = 1;
  bool nc_ = false;
  std::vector<int> caps_;  // -1 = uncapped
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A generator-decorated graph up to decorated isomorphism (canonical form).
struct Basis {
  DirectedGraph graph;
  std::vector<int> deco;  // generator index per canonical vertex, non-decreasing

  int weight() const { return graph.size(); }
  int count(int gen) const;
  auto operator<=>(const Basis&) const = default;
  bool operator==(const Basis&) const = default;
};

class Series {
public:
  Series() = default;
  explicit Series(AlgebraPtr algebra);
  static Series generator(AlgebraPtr algebra, const std::string& name);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Basis, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// `b` must be canonical. Terms beyond the truncation are dropped.
  void add(const Basis& b, const Rational& c);
  /// Canonicalizes a labeled decorated graph; applies the Koszul sign (zero classes vanish).
  void add_labeled(const DirectedGraph& g, std::span<const int> deco, const Rational& c);
  Rational coeff(const Basis& b) const;
  Rational coeff_labeled(const DirectedGraph& g, std::span<const int> deco) const;
  Rational coeff(const std::string& text) const;  // "n=..;e=..;d=x,y"

  int min_weight() const;
  /// Common degree of all terms; nullopt for zero; throws when inhomogeneous.
  std::optional<int> degree() const;

  Series weight_component(int n) const;
  Series up_to_weight(int n) const;
  /// Same terms in a copy of the algebra with truncation K2 <= K.
  Series truncate(int K2) const;
  /// Terms with exactly `count` vertices decorated by `gen`.
  Series with_count(int gen, int count) const;
  /// Terms whose graph satisfies the predicate.
  Series filter(const std::function<bool(const Basis&)>& keep) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& r);
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Rational& r) const;
  bool operator==(const Series& o) const;

private:
  void check_same(const Series& o) const;
  AlgebraPtr alg_;
  std::map<Basis, Rational> terms_;
};

Series operator*(const Rational& r, const Series& s);

std::string describe(const Basis& b, const Algebra& alg);


/// The Lie-graph algebra structure map: g(a_1, ..., a_k), multilinear over term tuples,
/// each term composed as a block insertion (every g-edge a->b becomes a nonempty set of
/// edges from block a to block b), canonicalized with its Koszul sign.
Series apply_graph(const DirectedGraph& g, const std::vector<Series>& args, Exec exec = Exec::Parallel);

/// a on the top vertex of the 2-chain, b on the bottom.
Series star(const Series& a, const Series& b);
/// star(a, b) - (-1)^{|a||b|} star(b, a).
Series bracket(const Series& a, const Series& b);

/// Disjoint union product m_n (free commutative product of the nc algebra).
Series disjoint_union(const std::vector<Series>& args);

/// Replaces every vertex decorated by a key of `images` with the image series.
Series substitute(const Series& s, const std::map<int, Series>& images);

/// Degree -1 derivation determined by its values on generators (missing = 0).
class Derivation {
public:
  Derivation(AlgebraPtr algebra, std::map<std::string, Series> on_generators);
  Series operator()(const Series& s) const;

private:
  AlgebraPtr alg_;
  std::map<int, Series> images_;
};

/// One level of a leveled sum: vertices on it are filled with `fill`. With `marked`,
/// the sum is linearized in this level: exactly one of its vertices takes `marked`.
struct Level {
  Series fill;
  std::optional<Series> marked;
};

/// Sum over k-leveled iso-classes (connected, or not when `connected` is false) of
/// 1/|Aut| g(levels), level 1 = bottom. Empty levels stand for the unit. `shape_ok`
/// restricts the allowed vertex counts per level.
Series leveled_sum(const std::vector<Level>& levels, bool connected = true,
                   const std::function<bool(const std::vector<int>&)>& shape_ok = {},
                   const EnumerationCaps& caps = default_caps());

nlohmann::json to_json(const Series& s);
std::string to_text(const Series& s);

}  // namespace liegra
