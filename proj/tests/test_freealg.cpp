#include <doctest.h>

#include <random>

#include "qmx/oracle.hpp"
#include "qmx/rewrite.hpp"

using namespace qmx;

namespace {

// Two-generator quantum plane x y = q y x with x > y in the letter order.
GenId X() { return gen_t(2, 1); }
GenId Y() { return gen_t(1, 1); }

NCPoly qplane_relation() {
  // x y - q y x, written so the deg-lex-largest word is x y.
  NCPoly r = NCPoly::monomial(Word({X(), Y()}));
  r.add_term(Word({Y(), X()}), -QRat::q_power(1));
  return r;
}

RewriteSystem qplane_rules() { return derive_rules({qplane_relation()}); }

NCPoly random_poly(std::mt19937& rng, const std::vector<GenId>& gens, int maxlen, int terms) {
  NCPoly p;
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = static_cast<int>(rng() % (maxlen + 1));
    for (int k = 0; k < len; ++k) w.g.push_back(gens[rng() % gens.size()]);
    long long c = static_cast<long long>(rng() % 9) - 4;
    p.add_term(w, QRat(c));
  }
  return p;
}

}  // namespace

TEST_CASE("nf applies rules repeatedly") {
  // t2 t1 -> q t1 t2 twice on t2 t1 t1.
  RewriteSystem R = qplane_rules();
  NCPoly p = NCPoly::monomial(Word({X(), Y(), Y()}));
  NCPoly want = NCPoly::monomial(Word({Y(), Y(), X()}), QRat::q_power(2));
  CHECK(normal_form(p, R) == want);
  CHECK(normal_form(NCPoly(), R).is_zero());
  // Already-normal input is a fixed point.
  NCPoly normal = NCPoly::monomial(Word({Y(), X()}));
  CHECK(normal_form(normal, R) == normal);
}

TEST_CASE("nf is a linear projection") {
  RewriteSystem R = qplane_rules();
  std::vector<GenId> gens = {X(), Y()};
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    NCPoly p = random_poly(rng, gens, 4, 3);
    NCPoly r = random_poly(rng, gens, 4, 3);
    QRat a(static_cast<long long>(rng() % 5) - 2), b(static_cast<long long>(rng() % 5) - 2);
    NCPoly lhs = normal_form(p.scale(a) + r.scale(b), R);
    NCPoly rhs = normal_form(p, R).scale(a) + normal_form(r, R).scale(b);
    CHECK(lhs == rhs);
    CHECK(normal_form(normal_form(p, R), R) == normal_form(p, R));
  }
}

TEST_CASE("ideal membership: rules rewrite to zero") {
  RewriteSystem R = qplane_rules();
  for (const Rule& rule : R.rules()) {
    NCPoly diff = NCPoly::monomial(rule.lead) - rule.tail;
    CHECK(normal_form(diff, R).is_zero());
  }
}

TEST_CASE("linearize_degree ground truths") {
  std::vector<GenId> gens = {X(), Y()};
  // Quantum plane at degree 2: one relation in a 4-dimensional word space.
  auto [dim2, basis2] = linearize_degree({qplane_relation()}, gens, 2);
  CHECK(dim2 == 3);
  CHECK(basis2.size() == 3);
  // Free algebra: k^d.
  auto [dimf, basisf] = linearize_degree({}, gens, 3);
  CHECK(dimf == 8);
  // Degree zero: the empty word.
  auto [dim0, basis0] = linearize_degree({qplane_relation()}, gens, 0);
  CHECK(dim0 == 1);
  CHECK(basis0.size() == 1);
  CHECK(basis0[0].empty());
}

TEST_CASE("linearize_degree rejects inhomogeneous relations") {
  NCPoly bad = NCPoly::monomial(Word({X(), Y()})) - NCPoly::monomial(Word({X()}));
  CHECK_THROWS_AS(linearize_degree({bad}, {X(), Y()}, 2), Error);
}

TEST_CASE("derive_rules solves for the largest word") {
  RewriteSystem R = qplane_rules();
  REQUIRE(R.rules().size() == 1);
  CHECK(R.rules()[0].lead == Word({X(), Y()}));
  CHECK(R.rules()[0].tail == NCPoly::monomial(Word({Y(), X()}), QRat::q_power(1)));
}

TEST_CASE("derive_rules rejects non-quadratic input") {
  NCPoly cubic = NCPoly::monomial(Word({X(), Y(), X()}));
  CHECK_THROWS_AS(derive_rules({cubic}), Error);
}

TEST_CASE("confluence report matches oracle dimensions") {
  std::vector<GenId> gens = {X(), Y()};
  std::vector<NCPoly> rels = {qplane_relation()};
  RewriteSystem R = derive_rules(rels);
  ConfluenceReport rep = confluence_report(R, rels, gens, 4);
  REQUIRE(rep.degrees.size() == 5);
  CHECK(rep.all_match);
  for (int d = 0; d <= 4; ++d) {
    CHECK(rep.degrees[d].normal_count == d + 1);
    CHECK(rep.degrees[d].oracle_dim == d + 1);
  }
  // Free algebra matches k^d.
  ConfluenceReport free_rep = confluence_report(RewriteSystem(), {}, gens, 3);
  CHECK(free_rep.all_match);
  CHECK(free_rep.degrees[3].normal_count == 8);
}

TEST_CASE("negative control: dropped relation is flagged at degree 2") {
  std::vector<GenId> gens = {X(), Y()};
  std::vector<NCPoly> rels = {qplane_relation()};
  // Rules derived from nothing, oracle keeps the relation.
  ConfluenceReport rep = confluence_report(RewriteSystem(), rels, gens, 3);
  CHECK_FALSE(rep.all_match);
  CHECK(rep.degrees[2].normal_count == 4);
  CHECK(rep.degrees[2].oracle_dim == 3);
  CHECK_FALSE(rep.degrees[2].match);
}

TEST_CASE("guard trips on an order-incompatible rule set") {
  // A rule whose tail is not below its lead is rejected at construction.
  NCPoly tail = NCPoly::monomial(Word({X(), Y()}));
  CHECK_THROWS_AS(RewriteSystem({Rule{Word({Y(), X()}), tail}}), Error);
}
