#ifndef QMX_OMEGA_HPP
#define QMX_OMEGA_HPP

#include <optional>

#include "qmx/oracle.hpp"
#include "qmx/rmatrix.hpp"

namespace qmx {

/// The three relation families of the differential calculus on the quantum
/// matrix space: coordinate-coordinate, coordinate-differential, and
/// differential-differential. Tautologies (zero polynomials) are dropped.
struct OmegaRelations {
  std::vector<NCPoly> tt;
  std::vector<NCPoly> tdt;
  std::vector<NCPoly> dtdt;

  std::vector<NCPoly> all() const;
};

OmegaRelations omega_relations(int m, int n);

long long binom(int a, int b);

/// The differential calculus on Mat(m, n)_q: generators t_a^alpha and
/// dt_a^alpha, rewrite rules derived from the relation families, and the
/// (polynomial degree, form degree) bigrading.
class Calculus {
 public:
  /// Builds rules and certifies flatness: for every d <= checkdeg and
  /// k <= min(mn, checkdeg), the normal-word count of bidegree (d, k) equals
  /// C(mn+d-1, d) * C(mn, k). Mismatch -> error naming the bidegree.
  /// `drop_relation` removes one relation from the rule derivation but not
  /// from the stored relation list (fault injection for negative controls).
  static Calculus build(int m, int n, int checkdeg, std::optional<int> drop_relation = {});

  int m() const { return m_; }
  int n() const { return n_; }
  int mn() const { return m_ * n_; }
  const OmegaRelations& relations() const { return rels_; }
  const RewriteSystem& rules() const { return rules_; }
  const std::vector<GenId>& generators() const { return gens_; }  // t block then dt block
  std::vector<GenId> t_generators() const;

  NCPoly nf(const NCPoly& p) const { return normal_form(p, rules_); }

  /// d(t) = dt, d(dt) = 0, graded Leibniz, result in normal form.
  NCPoly differential(const NCPoly& p) const;

  long long normal_count(int d, int k) const;  // bidegree (poly, form)
  long long classical_dim(int d, int k) const { return binom(mn() + d - 1, d) * binom(mn(), k); }

  std::vector<Word> basis(int d, int k) const;       // normal words of one bidegree
  std::vector<Word> basis_total(int maxtotal) const;  // all normal words of total degree <= maxtotal

  /// Exact oracle dimension of one bidegree (free words with d t's and k
  /// dt's modulo the sandwiched relation span).
  SpanResult bidegree_span(int d, int k) const;
  std::vector<Word> free_words(int d, int k) const;

  /// Specialize every rule/relation coefficient at q0 (constants re-embedded
  /// into Q(q)); structure is reused, not re-derived.
  Calculus specialized(const Rational& q0) const;

 private:
  Calculus() = default;
  int m_ = 0, n_ = 0, checkdeg_ = 0;
  OmegaRelations rels_;
  RewriteSystem rules_;
  std::vector<GenId> gens_;
};

}  // namespace qmx

#endif
