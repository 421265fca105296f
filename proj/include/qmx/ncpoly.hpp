#ifndef QMX_NCPOLY_HPP
#define QMX_NCPOLY_HPP

#include <functional>
#include <map>
#include <string>

#include "qmx/qrat.hpp"
#include "qmx/word.hpp"

namespace qmx {

/// Finite Q(q)-linear combination of words. No zero coefficients are stored;
/// iteration follows the deg-lex monomial order.
class NCPoly {
 public:
  using TermMap = std::map<Word, QRat, WordLess>;

  NCPoly() = default;
  static NCPoly one() { return monomial(Word{}); }
  static NCPoly monomial(Word w, QRat c = QRat(1));

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  void add_term(const Word& w, const QRat& c);
  QRat coeff(const Word& w) const;

  NCPoly operator-() const;
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator*(const NCPoly& o) const;  // concatenation product
  NCPoly scale(const QRat& c) const;

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  /// Largest word under deg-lex; poly must be nonzero.
  const Word& leading_word() const;
  const QRat& leading_coeff() const;
  int max_length() const;  // -1 for zero

  /// True when every stored word has the same length.
  bool is_length_homogeneous() const;

  NCPoly map_coeffs(const std::function<QRat(const QRat&)>& f) const;

  std::string str() const;

 private:
  TermMap terms_;
};

}  // namespace qmx

#endif
