#include "qmx/rewrite.hpp"

#include <algorithm>

namespace qmx {

RewriteSystem::RewriteSystem(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (int r = 0; r < static_cast<int>(rules_.size()); ++r) {
    const Rule& rule = rules_[r];
    if (rule.lead.empty()) fail_domain("rewrite rule with empty lead");
    for (const auto& [w, c] : rule.tail.terms()) {
      if (!word_less(w, rule.lead))
        fail_domain("rewrite rule tail not below lead: " + word_str(rule.lead) + " -> " +
                    rule.tail.str());
    }
    if (rule.lead.size() == 2) {
      quad_index_[{letter_key(rule.lead[0]), letter_key(rule.lead[1])}] = r;
    } else {
      all_quadratic_ = false;
    }
  }
}

std::optional<int> RewriteSystem::match_at(const Word& w, size_t pos) const {
  if (all_quadratic_) {
    if (pos + 2 > w.size()) return std::nullopt;
    auto it = quad_index_.find({letter_key(w[pos]), letter_key(w[pos + 1])});
    if (it == quad_index_.end()) return std::nullopt;
    return it->second;
  }
  for (int r = 0; r < static_cast<int>(rules_.size()); ++r) {
    const Word& lead = rules_[r].lead;
    if (pos + lead.size() > w.size()) continue;
    bool ok = true;
    for (size_t k = 0; k < lead.size(); ++k)
      if (!(w[pos + k] == lead[k])) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  return std::nullopt;
}

std::optional<std::pair<size_t, int>> RewriteSystem::find_redex(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    if (auto r = match_at(w, pos)) return std::make_pair(pos, *r);
  }
  return std::nullopt;
}

NCPoly normal_form(const NCPoly& p, const RewriteSystem& R, long long guard) {
  NCPoly result;
  NCPoly work = p;
  long long steps = 0;
  while (!work.is_zero()) {
    // Take the largest pending term so each word is visited once on the way
    // down the order.
    auto it = std::prev(work.terms().end());
    Word w = it->first;
    QRat c = it->second;
    NCPoly single = NCPoly::monomial(w, c);
    work -= single;

    auto redex = R.find_redex(w);
    if (!redex) {
      result.add_term(w, c);
      continue;
    }
    if (++steps > guard)
      fail_guard("normal_form guard exceeded; rule set incompatible with the monomial order");
    auto [pos, ridx] = *redex;
    const Rule& rule = R.rules()[ridx];
    Word pre = w.prefix(pos);
    Word suf = w.suffix(pos + rule.lead.size());
    for (const auto& [t, tc] : rule.tail.terms()) {
      work.add_term(pre.concat(t).concat(suf), c * tc);
    }
  }
  return result;
}

RewriteSystem derive_rules(const std::vector<NCPoly>& relations) {
  // Incremental reduced row echelon form over the span of quadratic words,
  // pivoting on the deg-lex-largest word of each row.
  std::map<Word, NCPoly, WordLess> pivots;  // pivot word -> monic row

  auto reduce_row = [&](NCPoly row) {
    bool changed = true;
    while (changed && !row.is_zero()) {
      changed = false;
      for (auto it = row.terms().rbegin(); it != row.terms().rend(); ++it) {
        auto p = pivots.find(it->first);
        if (p != pivots.end()) {
          row -= p->second.scale(it->second);
          changed = true;
          break;
        }
      }
    }
    return row;
  };

  for (const NCPoly& rel : relations) {
    for (const auto& [w, c] : rel.terms()) {
      if (w.size() != 2) fail_domain("derive_rules expects quadratic relations, got " + rel.str());
    }
    NCPoly row = reduce_row(rel);
    if (row.is_zero()) continue;  // dependent relation
    const QRat& lc = row.leading_coeff();
    if (lc.is_zero()) fail_domain("degenerate pivot while reducing relation " + rel.str());
    row = row.scale(lc.inv());
    Word lead = row.leading_word();
    // Back-substitute into existing rows so tails stay fully reduced.
    for (auto& [pw, prow] : pivots) {
      QRat c = prow.coeff(lead);
      if (!c.is_zero()) prow -= row.scale(c);
    }
    pivots.emplace(std::move(lead), std::move(row));
  }

  std::vector<Rule> rules;
  rules.reserve(pivots.size());
  for (const auto& [lead, row] : pivots) {
    NCPoly tail = NCPoly::monomial(lead) - row;  // row = lead + rest
    rules.push_back(Rule{lead, std::move(tail)});
  }
  return RewriteSystem(std::move(rules));
}

std::optional<Word> find_unresolved_overlap(const RewriteSystem& R) {
  const auto& rules = R.rules();
  for (const Rule& r1 : rules) {
    if (r1.lead.size() != 2) fail_domain("overlap check requires quadratic leads");
    for (const Rule& r2 : rules) {
      if (!(r1.lead[1] == r2.lead[0])) continue;
      Word xyz({r1.lead[0], r1.lead[1], r2.lead[1]});
      NCPoly left = normal_form(r1.tail * NCPoly::monomial(Word::single(r2.lead[1])), R);
      NCPoly right = normal_form(NCPoly::monomial(Word::single(r1.lead[0])) * r2.tail, R);
      if (left != right) return xyz;
    }
  }
  return std::nullopt;
}

}  // namespace qmx
