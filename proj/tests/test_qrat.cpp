#include <doctest.h>

#include <random>

#include "qmx/expr.hpp"
#include "qmx/qrat.hpp"

using namespace qmx;

namespace {

// Random canonical fraction with small integer coefficients.
QRat random_qrat(std::mt19937& rng) {
  auto random_poly = [&](bool nonzero) {
    std::vector<BigInt> c(1 + rng() % 4);
    for (auto& x : c) x = static_cast<long long>(rng() % 7) - 3;
    QPoly p = QPoly::from_coeffs(std::move(c));
    if (nonzero && p.is_zero()) p = QPoly(1 + static_cast<long long>(rng() % 3));
    return p;
  };
  return QRat(random_poly(false), random_poly(true));
}

}  // namespace

TEST_CASE("field arithmetic on worked literals") {
  QRat x = parse_qrat("(q^2-1)/q");
  CHECK(x.inv() == parse_qrat("q/(q^2-1)"));
  CHECK(parse_qrat("q-1") * parse_qrat("q+1") == parse_qrat("q^2-1"));

  QRat y = parse_qrat("(q^3+2*q)/(q-1)");
  CHECK(y + QRat() == y);
  CHECK(y - y == QRat());
  CHECK((y / y).is_one());
  CHECK(-(-y) == y);
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(QRat(1) / QRat(), Error);
  CHECK_THROWS_AS(QRat().inv(), Error);
  CHECK_THROWS_AS(QRat(QPoly(1), QPoly()), Error);
}

TEST_CASE("canonical form invariants") {
  // den positive leading coefficient, gcd removed, zero stored as 0/1.
  QRat a(QPoly::from_coeffs({BigInt(2), BigInt(2)}), QPoly::from_coeffs({BigInt(-4)}));
  CHECK(a.den().lc() > 0);
  CHECK(a == parse_qrat("-(q+1)/2"));
  QRat z(QPoly(), QPoly::from_coeffs({BigInt(5), BigInt(1)}));
  CHECK(z.is_zero());
  CHECK(z.den().is_one());
}

TEST_CASE("canonicalization is idempotent on random fractions") {
  std::mt19937 rng(42);
  for (int t = 0; t < 200; ++t) {
    QRat a = random_qrat(rng);
    // Rebuilding from the stored parts must not change anything.
    QRat b(a.num(), a.den());
    CHECK(a == b);
    CHECK(QPoly::gcd(a.num(), a.den()).is_one());
  }
}

TEST_CASE("q-numbers") {
  CHECK(qnum(0).is_zero());
  CHECK(qnum(1).is_one());
  CHECK(qnum(2) == parse_qrat("(q^2+1)/q"));
  CHECK(qnum(3) == parse_qrat("(q^4+q^2+1)/q^2"));
  for (int k = 1; k <= 5; ++k) CHECK(qnum(-k) == -qnum(k));
  // qnum(n) at q0 = 1 equals n (the reduced fraction has no pole there).
  for (int k = 0; k <= 6; ++k) CHECK(qnum(k).specialize(1) == Rational(k));
}

TEST_CASE("specialization") {
  CHECK(parse_qrat("(q^2+1)/q").specialize(2) == Rational(5, 2));
  CHECK(parse_qrat("q^-1").specialize(2) == Rational(1, 2));
  CHECK_THROWS_AS(parse_qrat("1/(q-1)").specialize(1), Error);
  CHECK_THROWS_AS(parse_qrat("q").specialize(0), Error);
}

TEST_CASE("specialization is a field homomorphism") {
  std::mt19937 rng(7);
  Rational q0(3, 2);
  for (int t = 0; t < 100; ++t) {
    QRat a = random_qrat(rng);
    QRat b = random_qrat(rng);
    bool pole = false;
    Rational va, vb;
    try {
      va = a.specialize(q0);
      vb = b.specialize(q0);
    } catch (const Error&) {
      pole = true;
    }
    if (pole) continue;
    CHECK((a * b).specialize(q0) == va * vb);
    CHECK((a + b).specialize(q0) == va + vb);
    if (!a.is_zero() && va != 0) CHECK(a.inv().specialize(q0) == Rational(1) / va);
  }
}

TEST_CASE("string round trip") {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    QRat a = random_qrat(rng);
    CHECK(parse_qrat(a.str()) == a);
  }
  CHECK(parse_qrat(QRat::q_power(-2).str()) == QRat::q_power(-2));
}
