#include <doctest.h>

#include "chernob/errors.hpp"
#include "support.hpp"

using namespace chernob;
using testing::I;
using testing::P;

namespace {
const RingPtr xy = make_ring({"x", "y"});
const RingPtr xyz = make_ring({"x", "y", "z"});

bool has_leading(const StandardBasis& sb, const Monomial& m) {
  for (const auto& lm : sb.leading_monomials())
    if (lm.divides(m)) return true;
  return false;
}
}  // namespace

TEST_CASE("basis of a linear ideal") {
  StandardBasis sb = standard_basis(I(xy, {"x", "y"}), MonomialOrder::global());
  REQUIRE(sb.basis.size() == 2);
  CHECK(verify_standard_basis(sb));
  CHECK(has_leading(sb, Monomial::variable(2, 0)));
  CHECK(has_leading(sb, Monomial::variable(2, 1)));
}

TEST_CASE("local basis ignores unit factors") {
  StandardBasis sb = standard_basis(I(xy, {"x^2 - x^3"}), MonomialOrder::local());
  REQUIRE(sb.leading_monomials().size() == 1);
  CHECK(sb.leading_monomials()[0] == Monomial::variable(2, 0, 2));
}

TEST_CASE("local verification detects a missing lead") {
  Ideal ideal = I(xy, {"x^2", "x*y + y^3"});
  StandardBasis naive{ideal, MonomialOrder::local(), ideal.generators(), true};
  CHECK_FALSE(verify_standard_basis(naive));
  StandardBasis sb = standard_basis(ideal, MonomialOrder::local());
  CHECK(verify_standard_basis(sb));
  CHECK(has_leading(sb, Monomial::variable(2, 1, 5)));
  CHECK(colength(sb) == ExtendedCount(6));
}

TEST_CASE("Jacobian ideal of the plane cusp") {
  Ideal ideal = I(xy, {"y^2 - x^3", "2y", "-3x^2"});
  StandardBasis sb = standard_basis(ideal, MonomialOrder::global());
  CHECK(verify_standard_basis(sb));
  CHECK(has_leading(sb, Monomial::variable(2, 0, 2)));
  CHECK(has_leading(sb, Monomial::variable(2, 1)));
  CHECK(membership(P(xy, "y^2 - x^3"), sb));
}

TEST_CASE("normal forms") {
  StandardBasis sb = standard_basis(I(xy, {"x^2 - y"}), MonomialOrder::global());
  CHECK(normal_form(P(xy, "x^2*y"), sb) == P(xy, "y^2"));
  CHECK(normal_form(P(xy, "x^2 - y"), sb).is_zero());
  StandardBasis lin = standard_basis(I(xy, {"x", "y"}), MonomialOrder::global());
  CHECK(normal_form(Polynomial::constant(xy, 1), lin) == Polynomial::constant(xy, 1));
}

TEST_CASE("colength examples") {
  CHECK(colength(I(xyz, {"x", "y", "z"}), Locality::local) == ExtendedCount(1));
  RingPtr x = make_ring({"x"});
  CHECK(colength(I(x, {"x^2 - x^3"}), Locality::local) == ExtendedCount(2));
  CHECK(colength(I(x, {"x^2 - x^3"}), Locality::global) == ExtendedCount(3));
  CHECK(colength(I(xy, {"x^2", "y^2"}), Locality::local) == ExtendedCount(4));
  CHECK_FALSE(colength(I(xy, {"x*y"}), Locality::local).is_finite());
  CHECK(colength(I(xy, {"1 + x"}), Locality::local) == ExtendedCount(0));
  CHECK(colength(I(xy, {"x - 1", "y"}), Locality::local) == ExtendedCount(0));
  CHECK(colength(I(xy, {"x - 1", "y"}), Locality::global) == ExtendedCount(1));
}

TEST_CASE("Krull dimension") {
  CHECK(krull_dimension(I(xyz, {"y^2 - x^3"})) == 2);
  CHECK(krull_dimension(I(xyz, {"x", "y", "z"})) == 0);
  CHECK(krull_dimension(Ideal(xyz, {})) == 3);
  CHECK(krull_dimension(I(xyz, {"1"})) == -1);
  // the line x = 1 misses the origin
  CHECK(krull_dimension(I(xyz, {"x - 1", "y"}), Locality::local) == -1);
  CHECK(krull_dimension(I(xyz, {"x - 1", "y"}), Locality::global) == 1);
}

TEST_CASE("quotients and saturation") {
  CHECK(equal_ideals(saturate(I(xy, {"x^2*y"}), I(xy, {"y"})), I(xy, {"x^2"}), Locality::global));
  Ideal some = I(xy, {"x^3 - y^2", "x*y"});
  CHECK(equal_ideals(saturate(some, I(xy, {"1"})), some, Locality::global));
  CHECK(equal_ideals(ideal_quotient(I(xy, {"x^2", "x*y"}), P(xy, "x")), I(xy, {"x", "y"}), Locality::global));
  CHECK(equal_ideals(ideal_quotient(I(xy, {"x*y"}), I(xy, {"x", "y"})), I(xy, {"x*y"}), Locality::global));
}

TEST_CASE("saturation recovers the cusp polar curve") {
  Ideal sat = saturate(I(xyz, {"y^2 - x^3", "z^2*x^2*(2x*y + 3z^3)"}), I(xyz, {"x", "y"}));
  CHECK(membership(P(xyz, "z^2*(2x*y + 3z^3)"), sat, Locality::global));
}

TEST_CASE("intersection") {
  Ideal meet = intersect(I(xy, {"x"}), I(xy, {"y"}));
  CHECK(equal_ideals(meet, I(xy, {"x*y"}), Locality::global));
  // the fresh variable must not collide with a user variable named _t
  RingPtr tricky = make_ring({"_t", "x"});
  CHECK(equal_ideals(intersect(I(tricky, {"_t"}), I(tricky, {"x"})), I(tricky, {"_t*x"}), Locality::global));
}

TEST_CASE("membership") {
  CHECK(membership(P(xy, "y^2 - x^3"), I(xy, {"y^2 - x^3"}), Locality::global));
  CHECK_FALSE(membership(Polynomial::constant(xy, 1), I(xy, {"x", "y"}), Locality::global));
  CHECK(membership(P(xy, "x^3"), I(xy, {"x^2"}), Locality::local));
  // locally 1 - x is a unit, so x is in (x - x^2)
  CHECK(membership(P(xy, "x"), I(xy, {"x - x^2"}), Locality::local));
  CHECK_FALSE(membership(P(xy, "x"), I(xy, {"x - x^2"}), Locality::global));
}

TEST_CASE("unit ideals") {
  CHECK(is_unit_ideal(I(xy, {"1 + x*y"}), Locality::local));
  CHECK_FALSE(is_unit_ideal(I(xy, {"1 + x*y"}), Locality::global));
  CHECK(is_unit_ideal(I(xy, {"x", "1 - x"}), Locality::global));
}

TEST_CASE("pair degree cap") {
  Ideal ideal = I(xyz, {"x^5 + y^4*z", "y^5 + x*z^4", "z^5 + x^4*y"});
  CHECK_THROWS_AS(standard_basis(ideal, MonomialOrder::global(), BasisOptions{2}), CapExceeded);
}

TEST_CASE("elimination order") {
  RingPtr r = make_ring({"t", "x", "y"});
  Ideal graph = I(r, {"x - t^2", "y - t^3"});
  Ideal image = eliminate_leading(graph, 1, xy);
  CHECK(equal_ideals(image, I(xy, {"y^2 - x^3"}), Locality::global));
}
