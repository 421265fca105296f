#ifndef QMX_QRAT_HPP
#define QMX_QRAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qmx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  enum class Kind { Parse, Domain, Pole, Guard, Internal };
  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] void fail_parse(const std::string& msg);
[[noreturn]] void fail_domain(const std::string& msg);
[[noreturn]] void fail_pole(const std::string& msg);
[[noreturn]] void fail_guard(const std::string& msg);
[[noreturn]] void fail_internal(const std::string& msg);

/// Polynomial in q with integer coefficients. Coefficients are stored in
/// ascending powers with the invariant that the vector is empty (zero
/// polynomial) or ends with a nonzero coefficient.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long long c);
  QPoly(BigInt c);
  static QPoly q_power(int k);  // q^k, k >= 0
  static QPoly from_coeffs(std::vector<BigInt> ascending);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monomial() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int low_degree() const;                                         // smallest power with nonzero coeff
  const BigInt& coeff(int k) const;
  const BigInt& lc() const;

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly mul_int(const BigInt& c) const;
  QPoly shift(int k) const;  // multiply by q^k

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  BigInt content() const;  // nonnegative gcd of coefficients
  QPoly primitive_part() const;
  static QPoly div_exact(const QPoly& a, const QPoly& b);
  static QPoly gcd(const QPoly& a, const QPoly& b);  // positive leading coefficient

  Rational eval(const Rational& q0) const;
  std::string str() const;  // descending powers, e.g. "2*q^3-q+1"

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Element of the field Q(q): canonical fraction of integer polynomials.
/// Invariants: den is nonzero with positive leading coefficient,
/// gcd(num, den) = 1 (content included), zero is 0/1.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long long c) : num_(c), den_(1) {}
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}
  QRat(QPoly num, QPoly den);
  static QRat q_power(int k);  // q^k for any integer k
  static QRat from_rational(const Rational& r);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  QRat operator-() const;
  QRat operator+(const QRat& o) const;
  QRat operator-(const QRat& o) const;
  QRat operator*(const QRat& o) const;
  QRat operator/(const QRat& o) const;
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat inv() const;

  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRat& o) const { return !(*this == o); }

  /// Exact evaluation at a nonzero rational point; pole -> Error::Kind::Pole.
  Rational specialize(const Rational& q0) const;

  std::string str() const;

 private:
  struct raw_tag {};
  QRat(QPoly num, QPoly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  QPoly num_, den_;
};

/// The q-number (q^n - q^-n)/(q - q^-1); qnum(1) = 1, qnum(-n) = -qnum(n).
QRat qnum(int n);

}  // namespace qmx

#endif
