#include "qmx/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace qmx {

std::vector<Word> words_of_length(const std::vector<GenId>& gens, int len) {
  std::vector<GenId> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), letter_less);
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (const GenId& g : sorted) {
      cur.g.push_back(g);
      rec(remaining - 1);
      cur.g.pop_back();
    }
  };
  rec(len);
  return out;
}

namespace {

// Sparse row over an indexed word universe, entries descending by index so
// the pivot (deg-lex-largest word) sits in front.
using SparseRow = std::vector<std::pair<int, QRat>>;

// Rows landing outside the universe belong to another graded slice (the
// universe may be a bidegree filter); a partial hit is a genuine error.
std::optional<SparseRow> row_from_poly(const NCPoly& p,
                                       const std::unordered_map<Word, int, WordHash>& index) {
  SparseRow row;
  row.reserve(p.term_count());
  size_t misses = 0;
  for (const auto& [w, c] : p.terms()) {
    auto it = index.find(w);
    if (it == index.end()) {
      ++misses;
      continue;
    }
    row.emplace_back(it->second, c);
  }
  if (misses == p.term_count()) return std::nullopt;
  if (misses > 0) fail_internal("span row straddles the word universe");
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return row;
}

SparseRow axpy(const SparseRow& a, const QRat& c, const SparseRow& b) {
  // a - c*b, both descending by index.
  SparseRow r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      QRat v = -(c * b[j].second);
      if (!v.is_zero()) r.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      QRat v = a[i].second - c * b[j].second;
      if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

SpanResult quotient_span(const std::vector<NCPoly>& relations, const std::vector<GenId>& gens,
                         const std::vector<Word>& universe) {
  std::unordered_map<Word, int, WordHash> index;
  index.reserve(universe.size());
  for (int k = 0; k < static_cast<int>(universe.size()); ++k) index.emplace(universe[k], k);

  std::map<int, SparseRow> pivots;  // pivot index -> monic row
  auto insert_row = [&](SparseRow row) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = axpy(row, row.front().second, it->second);
    }
    if (row.empty()) return;
    QRat inv = row.front().second.inv();
    for (auto& [idx, c] : row) c = c * inv;
    int lead = row.front().first;
    pivots.emplace(lead, std::move(row));
  };

  int target_len = universe.empty() ? 0 : static_cast<int>(universe.front().size());
  for (const NCPoly& rel : relations) {
    if (rel.is_zero()) continue;
    if (!rel.is_length_homogeneous())
      fail_domain("inhomogeneous relation in span oracle: " + rel.str());
    int e = static_cast<int>(rel.terms().begin()->first.size());
    int context = target_len - e;
    if (context < 0) continue;
    for (int l1 = 0; l1 <= context; ++l1) {
      for (const Word& w1 : words_of_length(gens, l1)) {
        for (const Word& w2 : words_of_length(gens, context - l1)) {
          NCPoly sandwich;
          for (const auto& [w, c] : rel.terms()) sandwich.add_term(w1.concat(w).concat(w2), c);
          if (sandwich.is_zero()) continue;
          if (auto row = row_from_poly(sandwich, index)) insert_row(std::move(*row));
        }
      }
    }
  }

  SpanResult res;
  res.rank = static_cast<long long>(pivots.size());
  res.dimension = static_cast<long long>(universe.size()) - res.rank;
  for (int k = 0; k < static_cast<int>(universe.size()); ++k) {
    if (!pivots.contains(k)) res.basis.push_back(universe[k]);
  }
  return res;
}

std::pair<long long, std::vector<Word>> linearize_degree(const std::vector<NCPoly>& relations,
                                                         const std::vector<GenId>& gens, int d) {
  for (const NCPoly& rel : relations) {
    if (!rel.is_length_homogeneous()) fail_domain("inhomogeneous relation: " + rel.str());
  }
  SpanResult res = quotient_span(relations, gens, words_of_length(gens, d));
  return {res.dimension, std::move(res.basis)};
}

long long count_normal_words(const RewriteSystem& R, const std::vector<GenId>& gens, int len) {
  if (len == 0) return 1;
  std::vector<GenId> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), letter_less);
  if (R.all_quadratic()) {
    // Transfer-matrix count over "last letter" states.
    int g = static_cast<int>(sorted.size());
    std::vector<long long> cur(g, 1);
    for (int step = 1; step < len; ++step) {
      std::vector<long long> next(g, 0);
      for (int b = 0; b < g; ++b) {
        for (int a = 0; a < g; ++a) {
          Word pair({sorted[a], sorted[b]});
          if (!R.match_at(pair, 0).has_value()) next[b] += cur[a];
        }
      }
      cur = std::move(next);
    }
    long long total = 0;
    for (long long v : cur) total += v;
    return total;
  }
  return static_cast<long long>(normal_words(R, gens, len).size());
}

std::vector<Word> normal_words(const RewriteSystem& R, const std::vector<GenId>& gens, int len) {
  std::vector<GenId> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), letter_less);
  // A freshly appended letter can only complete a redex ending at the end.
  auto ends_with_redex = [&](const Word& w) {
    for (const Rule& rule : R.rules()) {
      size_t L = rule.lead.size();
      if (w.size() < L) continue;
      size_t pos = w.size() - L;
      bool ok = true;
      for (size_t k = 0; k < L; ++k)
        if (!(w[pos + k] == rule.lead[k])) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  };
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (const GenId& g : sorted) {
      cur.g.push_back(g);
      if (!ends_with_redex(cur)) rec(remaining - 1);
      cur.g.pop_back();
    }
  };
  rec(len);
  return out;
}

ConfluenceReport confluence_report(const RewriteSystem& R, const std::vector<NCPoly>& relations,
                                   const std::vector<GenId>& gens, int maxdeg) {
  ConfluenceReport rep;
  for (int d = 0; d <= maxdeg; ++d) {
    ConfluenceDegree row;
    row.degree = d;
    row.normal_count = count_normal_words(R, gens, d);
    row.oracle_dim = linearize_degree(relations, gens, d).first;
    row.match = row.normal_count == row.oracle_dim;
    rep.all_match = rep.all_match && row.match;
    rep.degrees.push_back(row);
  }
  return rep;
}

}  // namespace qmx
