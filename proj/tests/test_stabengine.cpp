#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a3stab/stabengine.hpp"

#include <algorithm>
#include <cmath>

using namespace a3stab;

namespace {
const Interval S1{1, 1}, S2{2, 2}, S3{3, 3}, S12{1, 2}, S23{2, 3}, S123{1, 3};

bool contains(const std::vector<DimVector>& v, const DimVector& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}
}  // namespace

TEST_CASE("place_in_heart") {
  const Slicing a({'A', {1, 1, 1}, {0.5, 0.6, 0.7}});
  const auto p = a.place_in_heart(S12);
  CHECK(p.coords == DimVector(1, 1, 0));
  CHECK(p.shift == 0);

  const Slicing shifted({'A', {1, 1, 1}, {1.5, 2.3, 2.7}});
  REQUIRE(shifted.heart().pvec == Eigen::Vector3i(-1, -2, -2));
  const auto q = shifted.place_in_heart(S1);
  CHECK(q.shift == -1);
  CHECK(q.coords == DimVector(1, 0, 0));

  const Slicing b({'B', {1, 1, 1}, {0.2, 0.4, 0.9}});
  // Hom^0(S2,S12) rules out the unshifted triple
  CHECK(!ext_exceptional(chart('B').objects, {0, 0, 0}));
  REQUIRE(b.heart().pvec == Eigen::Vector3i(0, -1, -1));
  const auto r = b.place_in_heart(S123);
  CHECK(r.coords == DimVector(0, 1, 1));
  CHECK(r.shift == -1);
}

TEST_CASE("subobject supports") {
  const Slicing a({'A', {1, 1, 1}, {0.5, 0.6, 0.7}});
  const auto s12 = a.subobject_supports(DimVector(1, 1, 0));
  CHECK(s12.size() == 1);
  CHECK(contains(s12, DimVector(0, 1, 0)));
  CHECK(a.subobject_supports(DimVector(0, 1, 0)).empty());
  const auto s123 = a.subobject_supports(DimVector(1, 1, 1));
  CHECK(s123.size() == 2);
  CHECK(contains(s123, DimVector(0, 0, 1)));
  CHECK(contains(s123, DimVector(0, 1, 1)));
  CHECK(a.arrows().size() == 2);
}

TEST_CASE("semistability") {
  const Slicing a({'A', {1, 1, 1}, {0.5, 0.6, 0.7}});
  for (int i = 0; i < 3; ++i) {
    const auto d = a.semistable_phase(kIntervals[i]);
    REQUIRE(d);
    CHECK(d->stable);
    CHECK(d->phase == doctest::Approx(0.5 + 0.1 * i));
    CHECK(d->mass == doctest::Approx(1));
  }
  CHECK(!a.semistable_phase(S12));

  const Slicing b({'A', {1, 1, 1}, {0.7, 0.3, 0.9}});
  const auto d = b.semistable_phase(S12);
  REQUIRE(d);
  CHECK(d->phase == doctest::Approx(0.5));
  CHECK(d->mass == doctest::Approx(2 * std::cos(0.2 * M_PI)));
}

TEST_CASE("HN filtrations") {
  const Slicing a({'A', {1, 1, 1}, {0.5, 0.6, 0.7}});
  const auto h = a.hn_filtration({S12, 0});
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0].klass == S2.dimvec());
  CHECK(h.factors[0].phase == doctest::Approx(0.6));
  CHECK(h.factors[0].mass == doctest::Approx(1));
  CHECK(h.factors[1].klass == S1.dimvec());
  CHECK(h.factors[1].phase == doctest::Approx(0.5));
  CHECK(h.mass() == doctest::Approx(2));

  const auto h2 = a.hn_filtration({S12, 2});
  REQUIRE(h2.factors.size() == 2);
  CHECK(h2.factors[0].phase == doctest::Approx(2.6));
  CHECK(h2.factors[1].phase == doctest::Approx(2.5));
  CHECK(h2.factors[0].klass == S2.dimvec());

  const auto h1 = a.hn_filtration({S3, 1});
  CHECK(h1.semistable());
  CHECK(h1.phi_plus() == doctest::Approx(1.7));
  CHECK(h1.factors[0].klass == -S3.dimvec());

  // S123 over S1 S2 S3 at increasing phases: three factors
  const auto h3 = a.hn_filtration({S123, 0});
  CHECK(h3.factors.size() == 3);
}

TEST_CASE("membership and coordinates") {
  // Z = (1, -2, i) sits on the A/B wall but inside chart I
  const StabPoint p{'A', {1, 2, 1}, {0, -1, 0.5}};
  const auto i = membership_and_coords(p, 'I');
  REQUIRE(i);
  CHECK(i->chart == 'I');
  CHECK((i->phi - Eigen::Vector3d(-1, 0, 0.5)).norm() < 1e-6);
  CHECK((i->m - Eigen::Vector3d(1, 1, 1)).norm() < 1e-6);
  CHECK(!membership_and_coords(p, 'A'));
  CHECK(!membership_and_coords(p, 'B'));

  const StabPoint q{'A', {1, 1, 1}, {0.5, 0.6, 0.7}};
  const auto self = membership_and_coords(q, 'A');
  REQUIRE(self);
  CHECK((self->phi - q.phi).norm() < 1e-12);
  CHECK((self->m - q.m).norm() < 1e-12);
  CHECK(!membership_and_coords(q, 'D'));

  const auto all = covering_coords(p);
  REQUIRE(all.size() == 1);
  CHECK(all[0].chart == 'I');
}

TEST_CASE("metric") {
  const StabPoint p{'A', {1, 1, 1}, {0.5, 0.6, 0.7}};
  const StabPoint q{'A', {1, 1, 1}, {0.5, 0.6, 0.8}};
  CHECK(distance(p, p) == 0);
  CHECK(distance(p, q) >= 0.1 - 1e-12);
  CHECK(distance(p, q) == doctest::Approx(distance(q, p)));
  CHECK(distance(shift_point(p, 2), shift_point(q, 2)) == doctest::Approx(distance(p, q)));
  CHECK(distance(p, shift_point(p, 2)) == doctest::Approx(2));
  const Slicing a(p), b(q);
  CHECK(distance_direct_sums(signature(a), signature(b)) == doctest::Approx(distance(signature(a), signature(b))));
  CHECK(same_point(signature(a), signature(a)));
  CHECK(!same_point(signature(a), signature(b)));
}

TEST_CASE("same point seen from two charts") {
  const StabPoint p{'A', {1, 2, 1}, {0, -1, 0.5}};
  const auto i = membership_and_coords(p, 'I');
  REQUIRE(i);
  const StabPoint nudged = nudge_inside(*i, 0);
  CHECK(distance(*i, nudged) == 0);
}
