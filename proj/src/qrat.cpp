#include "qmx/qrat.hpp"

#include <algorithm>
#include <sstream>

namespace qmx {

void fail_parse(const std::string& msg) { throw Error(Error::Kind::Parse, msg); }
void fail_domain(const std::string& msg) { throw Error(Error::Kind::Domain, msg); }
void fail_pole(const std::string& msg) { throw Error(Error::Kind::Pole, msg); }
void fail_guard(const std::string& msg) { throw Error(Error::Kind::Guard, msg); }
void fail_internal(const std::string& msg) { throw Error(Error::Kind::Internal, msg); }

QPoly::QPoly(long long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

QPoly::QPoly(BigInt c) {
  if (c != 0) c_.push_back(std::move(c));
}

QPoly QPoly::q_power(int k) {
  if (k < 0) fail_internal("QPoly::q_power requires k >= 0");
  QPoly p;
  p.c_.assign(static_cast<size_t>(k) + 1, BigInt(0));
  p.c_.back() = 1;
  return p;
}

QPoly QPoly::from_coeffs(std::vector<BigInt> ascending) {
  QPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool QPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (size_t k = 0; k + 1 < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

int QPoly::low_degree() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

const BigInt& QPoly::coeff(int k) const {
  static const BigInt zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(k)];
}

const BigInt& QPoly::lc() const {
  static const BigInt zero(0);
  return c_.empty() ? zero : c_.back();
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
  r.trim();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r.c_[k] -= o.c_[k];
  r.trim();
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

QPoly QPoly::mul_int(const BigInt& c) const {
  if (c == 0) return QPoly();
  QPoly r(*this);
  for (auto& x : r.c_) x *= c;
  return r;
}

QPoly QPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) fail_internal("QPoly::shift requires k >= 0");
  QPoly r;
  r.c_.assign(static_cast<size_t>(k), BigInt(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

BigInt QPoly::content() const {
  BigInt g(0);
  for (const auto& x : c_) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return QPoly();
  BigInt g = content();
  QPoly r(*this);
  for (auto& x : r.c_) x /= g;
  return r;
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail_domain("polynomial division by zero");
  if (a.is_zero()) return QPoly();
  if (b.is_one()) return a;
  QPoly rem(a);
  int db = b.degree();
  std::vector<BigInt> quot(static_cast<size_t>(a.degree() - db) + 1, BigInt(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    BigInt c = rem.lc() / b.lc();
    if (c * b.lc() != rem.lc()) fail_internal("inexact polynomial division");
    quot[static_cast<size_t>(k)] = c;
    rem = rem - b.shift(k).mul_int(c);
  }
  if (!rem.is_zero()) fail_internal("inexact polynomial division (remainder)");
  return QPoly::from_coeffs(std::move(quot));
}

namespace {

// Pseudo-remainder, up to a factor of lc(b)^e; callers normalize to the
// primitive part so the exact factor is irrelevant.
QPoly pseudo_rem(QPoly a, const QPoly& b) {
  int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    int k = a.degree() - db;
    a = a.mul_int(b.lc()) - b.shift(k).mul_int(a.lc());
  }
  return a;
}

}  // namespace

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  auto norm = [](QPoly p) {
    if (!p.is_zero() && p.lc() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return norm(b);
  if (b.is_zero()) return norm(a);

  int ta = a.low_degree(), tb = b.low_degree();
  int t = std::min(ta, tb);
  QPoly pa = QPoly::from_coeffs(std::vector<BigInt>(a.c_.begin() + ta, a.c_.end()));
  QPoly pb = QPoly::from_coeffs(std::vector<BigInt>(b.c_.begin() + tb, b.c_.end()));

  BigInt c = boost::multiprecision::gcd(pa.content(), pb.content());
  pa = pa.primitive_part();
  pb = pb.primitive_part();

  // Primitive PRS; content splitting keeps coefficient growth in check.
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree() > 0) {
    QPoly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = r.is_zero() ? QPoly() : r.primitive_part();
  }
  QPoly g = pb.is_zero() ? pa : QPoly(BigInt(1));
  g = norm(g.mul_int(c).shift(t));
  return g;
}

Rational QPoly::eval(const Rational& q0) const {
  Rational v(0);
  for (size_t k = c_.size(); k-- > 0;) {
    v = v * q0 + Rational(c_[k]);
  }
  return v;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeff(k);
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (k == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail_domain("division by zero in Q(q)");
  canonicalize();
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = QPoly::div_exact(num_, g);
    den_ = QPoly::div_exact(den_, g);
  }
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRat QRat::q_power(int k) {
  if (k >= 0) return QRat(QPoly::q_power(k));
  return QRat(QPoly(1), QPoly::q_power(-k), raw_tag{});
}

QRat QRat::from_rational(const Rational& r) {
  return QRat(QPoly(boost::multiprecision::numerator(r)),
              QPoly(boost::multiprecision::denominator(r)), raw_tag{});
}

QRat QRat::operator-() const { return QRat(-num_, den_, raw_tag{}); }

QRat QRat::operator+(const QRat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return QRat(num_ + o.num_, den_);
  return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return QRat(num_ - o.num_, den_);
  return QRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator*(const QRat& o) const {
  if (is_zero() || o.is_zero()) return QRat();
  // Cross-reduction: inputs are canonical, so the result needs no extra gcd.
  QPoly g1 = QPoly::gcd(num_, o.den_);
  QPoly g2 = QPoly::gcd(o.num_, den_);
  QPoly n = QPoly::div_exact(num_, g1) * QPoly::div_exact(o.num_, g2);
  QPoly d = QPoly::div_exact(den_, g2) * QPoly::div_exact(o.den_, g1);
  if (d.lc() < 0) {
    n = -n;
    d = -d;
  }
  return QRat(std::move(n), std::move(d), raw_tag{});
}

QRat QRat::inv() const {
  if (is_zero()) fail_domain("inverse of zero in Q(q)");
  QPoly n = den_, d = num_;
  if (d.lc() < 0) {
    n = -n;
    d = -d;
  }
  return QRat(std::move(n), std::move(d), raw_tag{});
}

QRat QRat::operator/(const QRat& o) const { return *this * o.inv(); }

Rational QRat::specialize(const Rational& q0) const {
  if (q0 == 0) fail_domain("specialization point q0 = 0 is not allowed");
  Rational dv = den_.eval(q0);
  if (dv == 0)
    fail_pole("pole at q0: denominator " + den_.str() + " vanishes");
  return num_.eval(q0) / dv;
}

std::string QRat::str() const {
  if (den_.is_one()) return num_.str();
  std::string d = den_.is_monomial() && den_.lc() == 1
                      ? (den_.degree() == 1 ? "q" : "q^" + std::to_string(den_.degree()))
                      : "(" + den_.str() + ")";
  if (num_.is_one() && den_.is_monomial() && den_.lc() == 1)
    return "q^-" + std::to_string(den_.degree());
  std::string n = (num_.is_monomial() || num_.is_constant()) && !(num_.lc() < 0)
                      ? num_.str()
                      : "(" + num_.str() + ")";
  return n + "/" + d;
}

QRat qnum(int n) {
  if (n < 0) return -qnum(-n);
  if (n == 0) return QRat();
  // (q^n - q^-n)/(q - q^-1) = (q^(2n) - 1)/(q^(n-1) (q^2 - 1))
  QPoly num = QPoly::q_power(2 * n) - QPoly(1);
  QPoly den = QPoly::q_power(n - 1) * (QPoly::q_power(2) - QPoly(1));
  return QRat(std::move(num), std::move(den));
}

}  // namespace qmx
