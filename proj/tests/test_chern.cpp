#include <doctest.h>

#include "chernob/errors.hpp"
#include "support.hpp"

using namespace chernob;
using testing::form;
using testing::I;
using testing::P;

namespace {
const RingPtr xy = make_ring({"x", "y"});
const RingPtr xyz = make_ring({"x", "y", "z"});

VarietyInput plane() { return VarietyInput{xy, {}, 2, std::nullopt, std::nullopt}; }

FormCollection single(const Covector& w, int k) { return FormCollection{{SubCollection{k, {w}}}}; }
}  // namespace

TEST_CASE("singular loci") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  Ideal s = singular_locus_ideal(cusp.variety);
  CHECK(krull_dimension(s, Locality::local) == 1);
  CHECK(membership(P(xyz, "x^2"), s, Locality::local));
  CHECK(membership(P(xyz, "y"), s, Locality::local));
  CHECK_FALSE(membership(P(xyz, "z"), s, Locality::local));

  VarietyInput smooth{xyz, {P(xyz, "x")}, 2, std::nullopt, std::nullopt};
  CHECK(is_unit_ideal(singular_locus_ideal(smooth), Locality::global));
  CHECK(is_unit_ideal(singular_locus_ideal(plane()), Locality::global));
}

TEST_CASE("special loci of the cusp example") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  Ideal p1 = special_locus_ideal(cusp.variety, cusp.collection, 1);
  CHECK(equal_ideals(p1, I(xyz, {"y^2 - x^3", "-3x^7 + 2z^5*y"}), Locality::global));
  Ideal p2 = special_locus_ideal(cusp.variety, cusp.collection, 2);
  CHECK(equal_ideals(p2, I(xyz, {"y^2 - x^3", "-3x^7 + 2z^5*y", "z^2*(2y^3 + 3x^2*z^3)"}), Locality::global));
}

TEST_CASE("special locus of a gradient on the plane") {
  FormCollection c = single(form(xy, {"3x^2", "3y^2"}), 2);
  CHECK(equal_ideals(special_locus_ideal(plane(), c, 1), I(xy, {"3x^2", "3y^2"}), Locality::global));
}

TEST_CASE("geometry of the cusp example") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  GeometryReport g = geometry_checks(cusp.variety, cusp.collection);
  CHECK(g.prefix_dims == std::vector<int>{1, 0});
  CHECK(g.expected_dims == std::vector<int>{1, 0});
  CHECK(g.isolated);
  CHECK(g.singular_locus_dim == 1);
}

TEST_CASE("geometry of a gradient with a generic second form") {
  FormCollection c{{SubCollection{1, {form(xy, {"3x^2", "3y^2"}), form(xy, {"2", "-7"})}},
                    SubCollection{1, {form(xy, {"5", "1"}), form(xy, {"x", "y^2"})}}}};
  GeometryReport g = geometry_checks(plane(), c);
  CHECK(g.prefix_dims.back() <= 0);
  CHECK(g.isolated);
}

TEST_CASE("generic linear forms have empty special locus") {
  FormCollection l = generic_linear_collection(xy, 2, {2}, 4, 10);
  GeometryReport g = geometry_checks(plane(), l);
  CHECK(g.prefix_dims.back() == -1);
  CHECK(g.isolated);
  CHECK(ind_point(plane(), l) == ExtendedCount(0));
}

TEST_CASE("ind of gradients") {
  CHECK(ind_point(plane(), single(form(xy, {"3x^2", "3y^2"}), 2)) == ExtendedCount(4));
  CHECK(ind_point(plane(), single(form(xy, {"2x", "2y"}), 2)) == ExtendedCount(1));
  CHECK_FALSE(ind_point(plane(), single(form(xy, {"x", "0"}), 2)).is_finite());
}

TEST_CASE("generic linear collections") {
  FormCollection a = generic_linear_collection(xy, 2, {2}, 9, 10);
  REQUIRE(a.parts.size() == 1);
  REQUIRE(a.parts[0].forms.size() == 1);
  const Covector& w = a.parts[0].forms[0];
  CHECK((!w[0].is_zero() || !w[1].is_zero()));
  for (const auto& e : w) CHECK(e.is_constant());
  FormCollection b = generic_linear_collection(xy, 2, {2}, 9, 10);
  CHECK(a.parts[0].forms == b.parts[0].forms);
  CHECK_THROWS(generic_linear_collection(xy, 2, {1, 1, 1}, 9, 10));
  CHECK_THROWS(generic_linear_collection(xy, 4, {1}, 9, 10));
}

TEST_CASE("validation") {
  CHECK_THROWS(validate(plane(), single(form(xy, {"x"}), 2)));
  CHECK_THROWS(validate(plane(), single(form(xy, {"x", "y"}), 1)));
  FormCollection wrong_ring = single(form(xyz, {"x", "y", "z"}), 2);
  CHECK_THROWS(validate(plane(), wrong_ring));
}

TEST_CASE("ICIS Chern obstruction of a gradient") {
  ChernReport r = chern_icis(plane(), single(form(xy, {"3x^2", "3y^2"}), 2), ChernOptions{});
  CHECK(r.final_value == 4);
  CHECK(r.method == ChernMethod::icis);
  CHECK(r.seeds.size() == 3);
  REQUIRE(r.terms.size() == 4);
  CHECK(r.terms[0].value == 4);
  for (std::size_t i = 1; i < r.terms.size(); ++i) CHECK(r.terms[i].value == 0);
}

TEST_CASE("ICIS refuses non-isolated input") {
  CHECK_THROWS_AS(chern_icis(plane(), single(form(xy, {"x", "0"}), 2), ChernOptions{}), HypothesisViolation);
}

TEST_CASE("Chern obstruction is seed stable") {
  FormCollection c = single(form(xy, {"3x^2 + y", "x*y"}), 2);
  std::int64_t first = chern_icis(plane(), c, ChernOptions{1, 3, 10, Route::colength}).final_value;
  for (std::uint64_t seed : {5u, 17u, 123u})
    CHECK(chern_icis(plane(), c, ChernOptions{seed, 3, 10, Route::colength}).final_value == first);
}

TEST_CASE("polar curves of the cusp example") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  Ideal g1 = polar_curve_ideal(cusp.variety, cusp.collection.parts[0]);
  Ideal g2 = polar_curve_ideal(cusp.variety, cusp.collection.parts[1]);
  CHECK(membership(P(xyz, "-3x*y^3 + 2z^5"), g1, Locality::global));
  CHECK(membership(P(xyz, "z^2*(2x*y + 3z^3)"), g2, Locality::global));
  CHECK(membership(P(xyz, "y^2 - x^3"), g1, Locality::global));

  FormCollection l = generic_linear_collection(xyz, 2, {1, 1}, 3, 10);
  CHECK(is_unit_ideal(polar_curve_ideal(cusp.variety, l.parts[0]), Locality::local));
}

TEST_CASE("plane intersection multiplicities") {
  RingPtr tz = make_ring({"t", "z"});
  CHECK(imult_plane(P(tz, "z^2*(2t^5 + 3z^3)"), P(tz, "-3t^11 + 2z^5")) == ExtendedCount(47));
  CHECK(imult_plane(P(tz, "t"), P(tz, "z")) == ExtendedCount(1));
  CHECK(imult_plane(P(tz, "z^2 - t^3"), P(tz, "z")) == ExtendedCount(3));
  CHECK_FALSE(imult_plane(P(tz, "t*z"), P(tz, "t^2")).is_finite());
  CHECK_THROWS(imult_plane(P(xyz, "x"), P(xyz, "y")));
}

TEST_CASE("surface pipeline on the cusp example") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  for (Route route : {Route::colength, Route::normalization, Route::both}) {
    ChernReport r = chern_surface(cusp.variety, cusp.collection, ChernOptions{7, 3, 10, route});
    CHECK(r.final_value == 47);
    CHECK(r.method == (route == Route::colength ? ChernMethod::surface_colength : ChernMethod::surface_normalization));
    CHECK_FALSE(r.warnings.empty());
  }
  CHECK(compute_chern(cusp.variety, cusp.collection, ChernOptions{}).final_value == 47);
}

TEST_CASE("normalization route needs a normalization") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  cusp.variety.normalization.reset();
  CHECK_THROWS_AS(chern_surface(cusp.variety, cusp.collection, ChernOptions{1, 3, 10, Route::normalization}),
                  HypothesisViolation);
}

TEST_CASE("wrong normalization is rejected") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  RingPtr ts = cusp.variety.normalization->source;
  cusp.variety.normalization->images = {P(ts, "t^2"), P(ts, "t^2"), P(ts, "s")};
  CHECK_THROWS(chern_surface(cusp.variety, cusp.collection, ChernOptions{1, 3, 10, Route::normalization}));
}

TEST_CASE("generic pairs give zero on the cusp surface") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  for (std::uint64_t seed : {2u, 3u, 4u}) {
    FormCollection l = generic_linear_collection(xyz, 2, {1, 1}, seed, 10);
    CHECK(chern_surface(cusp.variety, l, ChernOptions{seed + 100, 3, 10, Route::both}).final_value == 0);
  }
}

TEST_CASE("ICIS detection") {
  cli::ProblemSpec cusp = testing::cusp_problem();
  CHECK_FALSE(is_icis(cusp.variety));
  CHECK(is_icis(plane()));
  VarietyInput a1{xyz, {P(xyz, "x^2 + y^2 + z^2")}, 2, std::nullopt, std::nullopt};
  CHECK(is_icis(a1));
}

TEST_CASE("dispatcher rejects unsupported shapes") {
  RingPtr r4 = make_ring({"x", "y", "z", "w"});
  VarietyInput x{r4, {P(r4, "x*y - z*w"), P(r4, "x*z"), P(r4, "y*w")}, 1, std::nullopt, std::nullopt};
  FormCollection c = single(form(r4, {"1", "0", "0", "0"}), 1);
  CHECK_THROWS_AS(compute_chern(x, c, ChernOptions{}), HypothesisViolation);
}
