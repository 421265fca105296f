#ifndef QMX_UQ_HPP
#define QMX_UQ_HPP

#include <cstdint>
#include <map>

#include "qmx/ncpoly.hpp"
#include "qmx/report.hpp"

namespace qmx {

/// Type A Cartan matrix for sl_N; indices 1..N-1.
struct CartanMatrix {
  int N;
  explicit CartanMatrix(int N_) : N(N_) {
    if (N < 2) fail_domain("CartanMatrix requires N >= 2");
  }
  int a(int i, int j) const {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
  }
};

/// Chevalley generators of U_q sl_N, in a fixed deterministic order.
std::vector<GenId> uq_generators(int N);

/// The defining relation list: K-commutativity, K K^-1 = 1, K-E and K-F
/// conjugation, the E-F commutator, both quantum Serre families, and distant
/// commutativity. Each relation is one NCPoly equal to zero in U_q sl_N.
std::vector<NCPoly> uq_relations(int N);

/// Small dense matrix over Q(q); 0-based indexing.
struct Mat {
  int n = 0;
  std::vector<QRat> a;

  static Mat zero(int n);
  static Mat identity(int n);
  QRat& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const QRat& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scale(const QRat& c) const;
  bool is_zero() const;
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

/// Matrix representation of the Chevalley generators.
struct Rep {
  int N = 0;  // dimension and ambient rank marker
  std::map<std::uint32_t, Mat> mats;  // letter_key -> matrix

  const Mat& mat(const GenId& g) const;
  Mat eval_word(const Word& w) const;
  Mat eval_poly(const NCPoly& p) const;
};

/// pi(E_i) = e_{i,i+1}, pi(F_i) = e_{i+1,i},
/// pi(K_i) = q e_ii + q^-1 e_{i+1,i+1} + sum_{j != i,i+1} e_jj.
/// Validates that every defining relation maps to the zero matrix.
Rep natural_rep(int N);

/// Linear combination of k-tuples of words (tensor legs).
class TensorPoly {
 public:
  struct TupleLess {
    bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
      if (a.size() != b.size()) return a.size() < b.size();
      for (size_t k = 0; k < a.size(); ++k) {
        if (word_less(a[k], b[k])) return true;
        if (word_less(b[k], a[k])) return false;
      }
      return false;
    }
  };
  using TermMap = std::map<std::vector<Word>, QRat, TupleLess>;

  explicit TensorPoly(int legs) : legs_(legs) {}
  int legs() const { return legs_; }
  const TermMap& terms() const { return terms_; }
  void add_term(const std::vector<Word>& legs, const QRat& c);

 private:
  int legs_;
  TermMap terms_;
};

/// Iterated coproduct Delta^(k-1)(w) with unreduced words in each leg.
TensorPoly coproduct(const Word& w, int k);

/// Antipode extended anti-multiplicatively; adjacent K K^-1 pairs cancelled.
NCPoly antipode(const Word& w);

/// Counit extended multiplicatively.
QRat counit(const Word& w);

/// Sparse row-vector transport through pi^{tensor k}(Delta^(k-1)(letter)).
/// Indices are 1-based tuples of length k.
using MultiIdx = std::vector<std::uint8_t>;
using PairState = std::map<MultiIdx, QRat>;
PairState apply_letter(const PairState& v, const GenId& letter, int N);
PairState transport(const MultiIdx& start, const Word& w, int N);

/// Report: every defining relation vanishes under pi^{tensor k} compose
/// Delta^(k-1) for k <= kmax, the antipode axiom holds in pi, iterated
/// coproducts are coassociative at the representation level, and K
/// conjugation acts by the Cartan q-powers.
Report verify_hopf_in_rep(int N, int kmax);

/// Grading on U_q sl_{m+n} generators: deg E_m = 1, deg K_i = 0, deg E_i =
/// deg F_i = 0 for i != m; deg F_m is configurable (default -1, which makes
/// the E-F commutator homogeneous).
struct UqGrading {
  int m = 1;
  int deg_Fm = -1;
  int deg(const GenId& g) const;
  int word_degree(const Word& w) const;
};

bool relation_homogeneous(const NCPoly& rel, const UqGrading& grading);

}  // namespace qmx

#endif
