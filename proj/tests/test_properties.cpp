#include <doctest.h>

#include "support.hpp"

using namespace chernob;
using oracle::random_polynomial;

namespace {
const RingPtr xy = make_ring({"x", "y"});
const RingPtr xyz = make_ring({"x", "y", "z"});
}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  SeededRng rng(101);
  for (int i = 0; i < 30; ++i) {
    Polynomial a = random_polynomial(xyz, rng, 0, 3, 4, 9);
    Polynomial b = random_polynomial(xyz, rng, 0, 3, 4, 9);
    Polynomial c = random_polynomial(xyz, rng, 0, 3, 4, 9);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("printing then parsing is the identity") {
  SeededRng rng(202);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_polynomial(xyz, rng, 0, 4, 5, 20) * Rational(1, static_cast<long>(rng.uniform(1, 7)));
    CHECK(parse_poly(to_string(p), xyz) == p);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  RingPtr ts = make_ring({"t", "s"});
  SeededRng rng(303);
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> images;
    for (int k = 0; k < 3; ++k) images.push_back(random_polynomial(ts, rng, 0, 2, 2, 5));
    Polynomial a = random_polynomial(xyz, rng, 0, 3, 3, 5);
    Polynomial b = random_polynomial(xyz, rng, 0, 3, 3, 5);
    CHECK(substitute(a + b, images) == substitute(a, images) + substitute(b, images));
    CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
  }
}

TEST_CASE("leading terms are multiplicative") {
  SeededRng rng(404);
  for (int i = 0; i < 30; ++i) {
    Polynomial a = random_polynomial(xyz, rng, 0, 3, 4, 9);
    Polynomial b = random_polynomial(xyz, rng, 0, 3, 4, 9);
    for (const MonomialOrder& ord : {MonomialOrder::global(), MonomialOrder::local()}) {
      Term la = leading_term(a, ord), lb = leading_term(b, ord), lab = leading_term(a * b, ord);
      CHECK(lab.monomial == la.monomial * lb.monomial);
      CHECK(lab.coefficient == la.coefficient * lb.coefficient);
    }
  }
}

TEST_CASE("standard bases verify and keep membership") {
  SeededRng rng(505);
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(xy, rng, 1, 3, 3, 5));
    Ideal ideal(xy, gens);
    for (Locality mode : {Locality::global, Locality::local}) {
      StandardBasis sb = standard_basis(ideal, order_for(mode));
      CHECK(verify_standard_basis(sb));
      for (const auto& g : gens) CHECK(membership(g, sb));
      Polynomial combo = gens[0] * random_polynomial(xy, rng, 0, 2, 2, 5) + gens[1] * random_polynomial(xy, rng, 0, 2, 2, 5);
      CHECK(membership(combo, sb));
    }
  }
}

TEST_CASE("local colength never exceeds global colength") {
  SeededRng rng(606);
  for (int i = 0; i < 20; ++i) {
    Ideal ideal(xy, {random_polynomial(xy, rng, 1, 3, 3, 5), random_polynomial(xy, rng, 1, 3, 3, 5)});
    ExtendedCount loc = colength(ideal, Locality::local);
    ExtendedCount glob = colength(ideal, Locality::global);
    if (glob.is_finite()) {
      REQUIRE(loc.is_finite());
      CHECK(loc.value() <= glob.value());
    }
  }
}

TEST_CASE("saturation is idempotent") {
  SeededRng rng(707);
  Ideal m(xy, {parse_poly("x", xy), parse_poly("y", xy)});
  for (int i = 0; i < 10; ++i) {
    Polynomial line = random_polynomial(xy, rng, 1, 1, 2, 5);
    Ideal ideal(xy, {line * random_polynomial(xy, rng, 1, 2, 2, 5), line * random_polynomial(xy, rng, 1, 2, 2, 5)});
    Ideal once = saturate(ideal, m);
    CHECK(equal_ideals(saturate(once, m), once, Locality::global));
    CHECK(contains(once, ideal, Locality::global));
  }
}

TEST_CASE("determinant is multiplicative on 2x2 matrices") {
  SeededRng rng(808);
  for (int i = 0; i < 10; ++i) {
    PolyMatrix a(xy, 2, 2), b(xy, 2, 2), ab(xy, 2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        a.set(r, c, random_polynomial(xy, rng, 0, 2, 2, 5));
        b.set(r, c, random_polynomial(xy, rng, 0, 2, 2, 5));
      }
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) ab.set(r, c, a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c));
    CHECK(determinant(ab) == determinant(a) * determinant(b));
  }
}
