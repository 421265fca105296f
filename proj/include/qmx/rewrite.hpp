#ifndef QMX_REWRITE_HPP
#define QMX_REWRITE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qmx/ncpoly.hpp"

namespace qmx {

struct Rule {
  Word lead;
  NCPoly tail;  // every word strictly below lead in deg-lex
};

/// Ordered reduction rules; leads are pairwise non-overlapping as subwords
/// (automatic for distinct quadratic leads) and tails are fully reduced.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  bool all_quadratic() const { return all_quadratic_; }

  /// Index of the rule whose lead matches w at position pos, if any.
  std::optional<int> match_at(const Word& w, size_t pos) const;
  /// Leftmost redex (position, rule); nullopt when w is normal.
  std::optional<std::pair<size_t, int>> find_redex(const Word& w) const;
  bool is_normal(const Word& w) const { return !find_redex(w).has_value(); }

 private:
  std::vector<Rule> rules_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> quad_index_;
  bool all_quadratic_ = true;
};

/// Fully reduce p modulo R; leftmost subword replacement, iterated to the
/// unique fixed point (guard trips on an order-incompatible rule set).
NCPoly normal_form(const NCPoly& p, const RewriteSystem& R, long long guard = 20'000'000);

/// Row-reduce quadratic relations to solved form "largest word -> smaller
/// words" and return the reduced rewrite system generating the same ideal.
RewriteSystem derive_rules(const std::vector<NCPoly>& relations);

/// Diamond check for quadratic systems: every overlap xyz of two leads
/// (xy, yz) reduces to the same normal form along both rules. Returns the
/// offending overlap word when one fails.
std::optional<Word> find_unresolved_overlap(const RewriteSystem& R);

}  // namespace qmx

#endif
