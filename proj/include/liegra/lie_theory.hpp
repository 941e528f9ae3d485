#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liegra/free_algebra.hpp"

namespace liegra {

/// 𝟙 + x, x of degree 0.
class GroupElement {
public:
  static GroupElement unit(AlgebraPtr algebra);
  static GroupElement from_series(Series x);
  const Series& x() const { return x_; }
  const AlgebraPtr& algebra() const { return x_.algebra(); }
  bool is_unit() const { return x_.is_zero(); }
  bool operator==(const GroupElement& o) const { return x_ == o.x_; }

private:
  explicit GroupElement(Series x) : x_(std::move(x)) {}
  Series x_;
};

enum class ExpRoute { Direct, Flow };

/// exp(x) - 𝟙. Direct: sum over connected classes of l_g/|g|! g(x, ..., x).
/// Flow: n E_n = (E ▷ x)_n, E graded by the number of x insertions.
Series exp_series(const Series& x, ExpRoute route = ExpRoute::Direct);
GroupElement exp(const Series& x, ExpRoute route = ExpRoute::Direct);

/// log(𝟙 + x) by weight-by-weight correction.
Series log_series(const Series& x);
Series log(const GroupElement& e);

enum class ProductRoute { IsoClasses, Labeled };

/// (𝟙+x) ⊙ (𝟙+y) - 𝟙; x fills the bottom level, y the top.
Series gp_product_series(const Series& x, const Series& y, ProductRoute route = ProductRoute::IsoClasses);
GroupElement gp_product(const GroupElement& a, const GroupElement& b, ProductRoute route = ProductRoute::IsoClasses);
/// 𝟙 + sum over connected 3-leveled classes, levels a, b, c from the bottom.
GroupElement gp_triple(const GroupElement& a, const GroupElement& b, const GroupElement& c);
GroupElement gp_inverse(const GroupElement& a);

enum class NcRoute { Direct, Assembly };

/// Product over not necessarily connected 2-leveled classes (nc algebras only).
/// Assembly: sum of m_n((a ⊙ b)^n)/n!.
Series gp_product_nc_series(const Series& x, const Series& y, NcRoute route = NcRoute::Direct);
GroupElement gp_product_nc(const GroupElement& a, const GroupElement& b, NcRoute route = NcRoute::Direct);
GroupElement gp_triple_nc(const GroupElement& a, const GroupElement& b, const GroupElement& c);
/// Sum over n >= 1 of m_n(x, ..., x)/n!.
Series disjoint_exp(const Series& x);

/// y + sum_r 1/r! corolla(y on top, r bottoms from x).
Series tri_right_series(const Series& x, const Series& y);
Series tri_right(const GroupElement& a, const Series& y);
/// x + sum_r 1/r! corolla(x at the bottom, r tops from y).
Series tri_left_series(const Series& x, const Series& y);
Series tri_left(const Series& x, const GroupElement& b);

/// Bracket used by the Lie-theoretic identities.
/// Group: [a,b] = (a below b) - (-1)^{|a||b|} (b below a), the bracket of the ⊙ group law.
/// Star: bracket(a, b), a on top.
enum class BracketConvention { Group, Star };

Series lower(const Series& a, const Series& b);  // a below b
Series group_bracket(const Series& a, const Series& b);
Series lie_bracket(const Series& a, const Series& b, BracketConvention conv);

/// Coefficients of log(e^x e^y) in the free associative algebra on letters 0 = x, 1 = y,
/// words of length <= K.
std::map<std::vector<int>, Rational> bch_word_coefficients(int K);
/// Dynkin: sum over words of c_w/|w| [w_1, [w_2, ..., [w_{n-1}, w_n]]].
Series bch(const Series& x, const Series& y, BracketConvention conv = BracketConvention::Group);
Series bch_via_log(const Series& x, const Series& y);

/// Sum over connected 3-leveled classes with one middle vertex: a bottom, m middle, b top.
Series bowtie(const GroupElement& a, const Series& m, const GroupElement& b);
Series bowtie_series(const Series& x, const Series& m, const Series& y);
/// exp(λ) ⋈^α exp(-λ); λ must have degree 0.
Series gauge_action(const Series& lambda, const Series& alpha);
/// sum_k ad_λ^k(α)/k! with ad_λ = [λ, -].
Series exp_ad(const Series& lambda, const Series& alpha, BracketConvention conv = BracketConvention::Group);

/// d/dε F(at + ε direction) at ε = 0, from exact interpolation at ε = 0..K.
Series polarize(const std::function<Series(const Series&)>& F, const Series& at, const Series& direction);

enum class Slot { Bottom, Top };
/// Linear part of (𝟙+x) ⊙ (𝟙+y) in the given slot, as a marked-level sum.
Series product_linearized(const Series& x, const Series& y, Slot slot, const Series& direction);

struct IdentityReport {
  std::string name;
  int K = 0;
  bool pass = true;
  bool informational = false;  // reported, never counted as a failure
  std::optional<int> failing_weight;
  std::string failing_class;
  Rational lhs_coeff;
  Rational rhs_coeff;
  std::size_t differing_terms = 0;
};

IdentityReport compare(const std::string& name, const Series& lhs, const Series& rhs);
IdentityReport compare(const std::string& name, const GroupElement& lhs, const GroupElement& rhs);
/// Report for a check that is not a series identity (coefficient lists, counts).
IdentityReport boolean_report(const std::string& name, int K, bool pass, const std::string& detail = {});
/// Every listed coefficient (graph text with decoration) matches.
IdentityReport coefficient_report(const std::string& name, const Series& s,
                                  const std::vector<std::pair<std::string, Rational>>& expected);

nlohmann::json to_json(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

}  // namespace liegra
