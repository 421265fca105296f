#ifndef QMX_PAIRING_HPP
#define QMX_PAIRING_HPP

#include <functional>
#include <unordered_map>

#include "qmx/omega.hpp"
#include "qmx/uq.hpp"

namespace qmx {

/// Inversion count of a permutation of {1..m} (given as images w[0..m-1]).
int perm_length(const std::vector<int>& w);

struct Minor {
  int m = 0;
  std::vector<int> cols;  // strictly increasing, within 1..m+n
};

Minor make_minor(int m, std::vector<int> cols, int N);

/// Quantum minor sum_{w in S_m} (-q)^{l(w)} u_{1,j_w(1)} ... u_{m,j_w(m)}.
NCPoly minor_expand(const Minor& mn);

/// Pairing of a polynomial in the u_ij against a U_q word: a monomial
/// u_{i1 j1}...u_{ik jk} evaluates to the ((i...),(j...)) entry of
/// pi^{tensor k}(Delta^(k-1)(w)); terms of mixed length pair termwise.
QRat pair_value(const NCPoly& u_poly, const Word& w, int N);

/// Truncated linear functional on U_q words (complete on length <= L).
struct FunctionalTable {
  int L = 0;
  std::unordered_map<Word, QRat, WordHash> v;

  const QRat& at(const Word& w) const {
    auto it = v.find(w);
    if (it == v.end()) fail_internal("functional table miss: " + word_str(w));
    return it->second;
  }
};

/// All U_q sl_N words of length <= L ordered by (length, F-count, deg-lex):
/// the triangular order of the convolution solve.
std::vector<Word> uq_words_sorted(int N, int L);

/// Pure-K left leg of the full-length term of Delta(eta).
Word kappa_word(const Word& eta);

/// Solve x * f = y in the convolution algebra, truncated to words of length
/// <= L. Requires x nonzero at the identity.
FunctionalTable dual_divide(int N, const NCPoly& x, const NCPoly& y, int L);

/// Column lists of the coordinate functionals: denominator (1..m) and
/// numerator (1..m with m+1-alpha omitted, m+a appended).
std::pair<Minor, Minor> embed_cols(int m, int n, int a, int alpha);

/// Embedding context for one (m, n): coordinate functionals realized as
/// lazy convolution quotients x(1..m)^-1 x(num). Values on arbitrary words
/// are produced by the triangular recursion and memoized, so probe words of
/// any length are reachable; L records the enumeration cutoff for the
/// spec'd word sweeps.
class Embedding {
 public:
  Embedding(int m, int n, int L);

  int m() const { return m_; }
  int n() const { return n_; }
  int N() const { return N_; }
  int L() const { return L_; }

  /// Full-alphabet probe words of length <= maxlen in solve order.
  std::vector<Word> core_probes(int maxlen) const;
  /// Pure E-letter words of the exact length, deg-lex order.
  std::vector<Word> e_words(int len) const;

  /// Transported pairing row from the identity multi-index (1..m); memoized.
  const PairState& state(const Word& w);
  QRat minor_value(const Minor& mn, const Word& w);

  /// Value of the coordinate functional i(t_a^alpha) on eta.
  QRat gen_value(int a, int alpha, const Word& eta);

  /// Value of the embedded monomial (word in t letters) on eta; the empty
  /// word is the counit.
  QRat monomial_value(const Word& t_word, const Word& eta);
  QRat poly_value(const NCPoly& P, const Word& eta);

  /// Materialized table of i(t_a^alpha) on all words of length <= L.
  FunctionalTable gen_table(int a, int alpha);

  /// (i) every coordinate-sector relation pairs to zero on all words of
  /// length <= L; (ii) embedded normal monomials of degree <= D are linearly
  /// independent as vectors of pairing values (probes extended with E-words
  /// until the rank completes or the degree-distance cap is reached).
  Report embed_check(int D, const Calculus& calc);

 private:
  struct GenFn {
    Minor den, num;
    std::unordered_map<Word, QRat, WordHash> memo;
  };
  GenFn& gen_fn(int a, int alpha);
  QRat gen_value_impl(GenFn& fn, const Word& eta);

  int m_, n_, N_, L_;
  std::unordered_map<Word, PairState, WordHash> states_;
  std::map<std::pair<int, int>, GenFn> gens_;
  struct WordPairHash {
    size_t operator()(const std::pair<Word, Word>& p) const {
      return WordHash{}(p.first) * 1000003u ^ WordHash{}(p.second);
    }
  };
  std::unordered_map<std::pair<Word, Word>, QRat, WordPairHash> mono_memo_;
};

}  // namespace qmx

#endif
