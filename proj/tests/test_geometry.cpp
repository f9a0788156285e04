#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scgd/geometry.hpp"

using namespace scgd;

TEST_CASE("cross and lex order") {
  CHECK(cross<Rational>(Vec2<Rational>(1, 0), Vec2<Rational>(0, 1)) == 1);
  CHECK(cross<double>(Vec2<double>(2, 3), Vec2<double>(4, 6)) == 0);
  CHECK(lex_less<Rational>(PointQ(0, 5), PointQ(1, -5)));
  CHECK(lex_less<Rational>(PointQ(1, 2), PointQ(1, 3)));
  CHECK_FALSE(lex_less<Rational>(PointQ(1, 3), PointQ(1, 3)));
}

TEST_CASE("same_point is exact for rationals and relative for doubles") {
  CHECK(same_point<Rational>(PointQ(Rational(1) / 3, 2), PointQ(Rational(1) / 3, 2)));
  CHECK_FALSE(same_point<Rational>(PointQ(0, 0), PointQ(0, Rational(1, 1000000))));
  CHECK(same_point<double>(PointD(1e8, 1e8), PointD(1e8 + 1e-3, 1e8)));
  CHECK_FALSE(same_point<double>(PointD(0, 0), PointD(1e-6, 0)));
}

TEST_CASE("collinear") {
  CHECK(collinear<Rational>(PointQ(0, 0), PointQ(1, 1), PointQ(2, 2)));
  CHECK_FALSE(collinear<Rational>(PointQ(0, 0), PointQ(1, 1), PointQ(2, 3)));
  // The relative threshold absorbs perturbations far below the point scale.
  CHECK(collinear<double>(PointD(0, 0), PointD(1e8, 1e8), PointD(2e8, 2e8 + 0.01)));
  CHECK_FALSE(collinear<double>(PointD(0, 0), PointD(1, 1), PointD(2, 2.001)));
}

TEST_CASE("simplicity") {
  PointList<Rational> good = {PointQ(0, 0), PointQ(1, 0), PointQ(0, 1), PointQ(2, 3)};
  CHECK(is_simple<Rational>(good));
  PointList<Rational> dup = {PointQ(0, 0), PointQ(1, 0), PointQ(0, 0)};
  CHECK_FALSE(pairwise_distinct<Rational>(dup));
  CHECK_FALSE(is_simple<Rational>(dup));
  PointList<Rational> three = {PointQ(0, 0), PointQ(1, 2), PointQ(2, 4), PointQ(5, 0)};
  CHECK(pairwise_distinct<Rational>(three));
  CHECK_FALSE(is_simple<Rational>(three));
}

TEST_CASE("line_intersect") {
  const auto p = line_intersect<Rational>(PointQ(0, 0), Vec2<Rational>(1, 1),
                                          PointQ(0, 2), Vec2<Rational>(1, -1));
  REQUIRE(p.has_value());
  CHECK(p->x() == 1);
  CHECK(p->y() == 1);
  CHECK_FALSE(line_intersect<Rational>(PointQ(0, 0), Vec2<Rational>(1, 1),
                                       PointQ(0, 2), Vec2<Rational>(2, 2))
                  .has_value());
  CHECK_FALSE(line_intersect<double>(PointD(0, 0), Vec2<double>(1, 1),
                                     PointD(0, 2), Vec2<double>(1, 1 + 1e-13))
                  .has_value());
}

TEST_CASE("affine maps compose and invert") {
  AffineMapQ a;
  a.linear << 2, 0, 0, 3;
  a.translation << 1, -1;
  AffineMapQ b;
  b.linear << 0, -1, 1, 0;
  b.translation << 5, 0;
  const PointQ p(7, 11);
  CHECK(same_point<Rational>(a.after(b)(p), a(b(p))));
  const auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(same_point<Rational>((*inv)(a(p)), p));
  AffineMapQ sing;
  sing.linear << 1, 2, 2, 4;
  sing.translation << 0, 0;
  CHECK_FALSE(sing.inverse().has_value());
  CHECK(same_point<Rational>(AffineMapQ::identity()(p), p));
}

TEST_CASE("homothety from three correspondences") {
  const PointList<Rational> e = {PointQ(0, 0), PointQ(1, 0), PointQ(0, 1)};
  const PointList<Rational> f = {PointQ(5, 5), PointQ(7, 5), PointQ(5, 7)};
  const auto h = find_homothety<Rational>(e, f);
  REQUIRE(h.has_value());
  CHECK(h->ratio == 2);
  CHECK(h->translation.x() == 5);
  CHECK(h->translation.y() == 5);
  CHECK(same_point<Rational>(h->to_affine()(e[2]), f[2]));

  // A rotated image admits no homothety.
  const PointList<Rational> rot = {PointQ(0, 0), PointQ(0, 1), PointQ(-1, 0)};
  CHECK_FALSE(find_homothety<Rational>(e, rot).has_value());

  CHECK_THROWS_AS(find_homothety<Rational>(e, {PointQ(0, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(
      find_homothety<Rational>({PointQ(0, 0), PointQ(0, 0)}, {PointQ(1, 1), PointQ(1, 1)}),
      std::invalid_argument);
}

TEST_CASE("negative ratio homothety") {
  const PointList<Rational> e = {PointQ(1, -1), PointQ(-1, 0)};
  const PointList<Rational> f = {PointQ(-1, 1), PointQ(1, 0)};
  const auto h = find_homothety<Rational>(e, f);
  REQUIRE(h.has_value());
  CHECK(h->ratio == -1);
}

TEST_CASE("embeds searches all anchor images") {
  const PointList<Rational> a = {PointQ(0, 0), PointQ(1, 0), PointQ(1, 1)};
  PointList<Rational> b;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) b.emplace_back(2 * x + 1, 2 * y - 4);
  const auto h = embeds<Rational>(a, b);
  REQUIRE(h.has_value());
  for (const auto& p : a) {
    const PointQ q = (*h)(p);
    bool member = false;
    for (const auto& bp : b) member |= same_point<Rational>(q, bp);
    CHECK(member);
  }

  const PointList<Rational> tri = {PointQ(0, 0), PointQ(1, 0), PointQ(0, 3)};
  CHECK_FALSE(embeds<Rational>(tri, b).has_value());
  CHECK_FALSE(embeds<Rational>(b, a).has_value());  // too many points
  CHECK_THROWS_AS(embeds<Rational>({PointQ(0, 0)}, b), std::invalid_argument);
}

TEST_CASE("embeds works in float mode") {
  const PointList<double> a = {PointD(0, 0), PointD(1, 0), PointD(1, 1)};
  const PointList<double> b = {PointD(10, 10), PointD(8, 10), PointD(8, 8),
                               PointD(3, 7)};
  const auto h = embeds<double>(a, b);
  REQUIRE(h.has_value());
  CHECK(h->ratio == doctest::Approx(-2.0));
}
