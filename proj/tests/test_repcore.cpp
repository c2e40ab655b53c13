#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a3stab/repcore.hpp"

using namespace a3stab;

namespace {
const Interval S1{1, 1}, S2{2, 2}, S3{3, 3}, S12{1, 2}, S23{2, 3}, S123{1, 3};
}

TEST_CASE("euler form") {
  CHECK(euler_form(DimVector(1, 0, 0), DimVector(0, 1, 0)) == -1);
  CHECK(euler_form(DimVector(1, 1, 0), DimVector(0, 1, 1)) == -1);
  CHECK(euler_form(DimVector(0, 1, 1), DimVector(1, 1, 0)) == 1);
  CHECK(euler_form(DimVector(1, 1, 1), DimVector(1, 1, 1)) == 1);
}

TEST_CASE("hom_ext on intervals") {
  CHECK(hom_ext(S2, S12) == HomExt{1, 0});
  CHECK(hom_ext(S1, S2) == HomExt{0, 1});
  CHECK(hom_ext(S1, S1) == HomExt{1, 0});
  CHECK(hom_ext(S12, S23) == HomExt{0, 1});
  CHECK(hom_ext(S23, S12) == HomExt{1, 0});
  CHECK(hom_ext(S3, S1) == HomExt{0, 0});
  CHECK(hom_ext(S123, S1) == HomExt{1, 0});
  CHECK(hom_ext(S3, S123) == HomExt{1, 0});
}

TEST_CASE("euler identity on all pairs") {
  for (const auto& m : kIntervals)
    for (const auto& n : kIntervals) {
      const auto he = hom_ext(m, n);
      CHECK(he.hom - he.ext == euler_form(m.dimvec(), n.dimvec()));
      CHECK(he.hom <= 1);
      CHECK(he.ext <= 1);
    }
}

TEST_CASE("derived hom degrees") {
  // Hom^k(X[p], Y[q]) = Hom(X, Y[q - p + k])
  const auto a = derived_hom({S1, -1}, {S2, -2});
  CHECK(a == std::map<int, int>{{2, 1}});
  CHECK(derived_hom({S3, 0}, {S1, 0}).empty());
  CHECK(derived_hom({S123, 0}, {S123, 5}) == std::map<int, int>{{-5, 1}});
  CHECK(derived_hom_dim({S12, 0}, {S23, 0}, 1) == 1);
  CHECK(derived_hom_dim({S12, 0}, {S23, 0}, 0) == 0);
  CHECK(derived_hom_dim({S23, 0}, {S12, 0}, 0) == 1);
  CHECK(derived_hom_dim({S23, 0}, {S12, 0}, 1) == 0);
}

TEST_CASE("identify_class") {
  auto a = identify_class(DimVector(1, 1, 0));
  REQUIRE(a);
  CHECK(a->interval == S12);
  CHECK(!a->odd);
  auto b = identify_class(DimVector(-1, -1, -1));
  REQUIRE(b);
  CHECK(b->interval == S123);
  CHECK(b->odd);
  CHECK(!identify_class(DimVector(1, 0, 1)));
  CHECK(!identify_class(DimVector(0, 0, 0)));
}

TEST_CASE("names and parsing") {
  CHECK(S123.name() == "S123");
  CHECK(parse_interval("S23") == S23);
  CHECK(!parse_interval("S13"));
  CHECK(!parse_interval("X1"));
  CHECK(interval_index(S12) == 3);
  CHECK(DerivedInterval{S12, 1}.klass() == DimVector(-1, -1, 0));
}

TEST_CASE("representations and embeddings") {
  const auto r = representation(S123);
  CHECK(r.dims == std::array<int, 3>{1, 1, 1});
  CHECK(hom_dimension(representation(S3), r) == 1);
  CHECK(embeds(representation(S3), r));
  CHECK(embeds(representation(S23), r));
  CHECK(!embeds(representation(S1), r));
  const auto sum = direct_sum(representation(S1), representation(S23));
  CHECK(sum.dims == std::array<int, 3>{1, 1, 1});
  CHECK(hom_dimension(r, sum) == 1);
}

TEST_CASE("exact rank over rationals") {
  MatrixX<Rational> m(2, 3);
  m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  CHECK(exact_rank(m) == 1);
  CHECK(kernel_basis(m).cols() == 2);
}
