#ifndef QMX_ENGINE_HPP
#define QMX_ENGINE_HPP

#include "qmx/action.hpp"
#include "qmx/expr.hpp"

namespace qmx {

struct SuiteOptions {
  int maxdeg = 3;
  int L = 4;
  int L1 = 3;
  int L2 = 4;
  int D = 3;
  int kmax = 3;
  long long oracle_cap = 2048;
  std::optional<std::string> q0;      // exact rational literal, e.g. "2", "1/3"
  std::optional<std::string> inject;  // corrupt-k | drop-relation | flip-rhat
};

Rational parse_rational(const std::string& s);

/// Hecke/braid verification of the size-N symmetry as report content.
Report rhat_report(int N, bool inject_flip);

/// Per-engine caches: the calculus for (m, n), embeddings and derived action
/// tables per probe cutoff L.
class Engine {
 public:
  Engine(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const Calculus& calculus();
  Embedding& embedding(int L);
  const ActionTable& table(int L);

  std::string normal_form_str(const std::string& expr);
  std::string differential_str(const std::string& expr);

  /// Flatness table: per bidegree (d <= maxdeg, k <= mn) compare normal-word
  /// count, classical dimension, and (within the column cap) the exact span
  /// oracle; includes the quadratic overlap certificate.
  Report hilbert(int maxdeg, long long oracle_cap, bool inject_drop);

  /// suite in {hopf, embed, module-algebra, grading, uniqueness}.
  Report run_suite(const std::string& suite, const SuiteOptions& opts);

  std::string action_json(int L);
  std::string rules_json();

 private:
  int m_, n_;
  std::optional<Calculus> calc_;
  std::map<int, Embedding> embeddings_;
  std::map<int, ActionTable> tables_;
};

}  // namespace qmx

#endif
