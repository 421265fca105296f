#ifndef QMX_ORACLE_HPP
#define QMX_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qmx/rewrite.hpp"

namespace qmx {

/// All words of the given length over the generator list, in deg-lex order.
std::vector<Word> words_of_length(const std::vector<GenId>& gens, int len);

/// Ground-truth quotient dimension in one degree: spans w1 * r * w2 over the
/// given word universe and row-reduces exactly over Q(q). Returns the
/// dimension and the complement basis (non-pivot words in deg-lex order).
struct SpanResult {
  long long dimension = 0;
  long long rank = 0;
  std::vector<Word> basis;
};
SpanResult quotient_span(const std::vector<NCPoly>& relations, const std::vector<GenId>& gens,
                         const std::vector<Word>& universe);

/// Degreewise oracle with unit letter weights (degree = word length).
/// Relations must be length-homogeneous.
std::pair<long long, std::vector<Word>> linearize_degree(const std::vector<NCPoly>& relations,
                                                         const std::vector<GenId>& gens, int d);

/// Count nf-normal words of the given length (no lead occurs as a subword).
long long count_normal_words(const RewriteSystem& R, const std::vector<GenId>& gens, int len);

/// Enumerate normal words of the given length in deg-lex order.
std::vector<Word> normal_words(const RewriteSystem& R, const std::vector<GenId>& gens, int len);

struct ConfluenceDegree {
  int degree = 0;
  long long normal_count = 0;
  long long oracle_dim = 0;
  bool match = false;
};

struct ConfluenceReport {
  std::vector<ConfluenceDegree> degrees;
  bool all_match = true;
};

/// Compare nf-normal word counts against the oracle dimension per degree.
/// Mismatches are report content, not errors.
ConfluenceReport confluence_report(const RewriteSystem& R, const std::vector<NCPoly>& relations,
                                   const std::vector<GenId>& gens, int maxdeg);

}  // namespace qmx

#endif
