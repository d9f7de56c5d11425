#include <doctest.h>

#include "symcubic/projlin.hpp"

using namespace symcubic;

TEST_CASE("frame_solve sends the frame where asked") {
  const Field& f = make_field(7, 1);
  std::array<ProjPoint, 5> src{ProjPoint::make(f, {1, 0, 0, 0}), ProjPoint::make(f, {0, 1, 0, 0}), ProjPoint::make(f, {0, 0, 1, 0}),
                               ProjPoint::make(f, {0, 0, 0, 1}), ProjPoint::make(f, {1, 1, 1, 1})};
  // images under a fixed invertible matrix, computed by hand
  Collineation m = Collineation::make(f, {1, 2, 0, 0, 0, 1, 3, 0, 0, 0, 1, 4, 1, 0, 0, 1});
  std::array<ProjPoint, 5> dst;
  for (int i = 0; i < 5; ++i) {
    std::array<Elt, 4> y{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) y[r] = f.add(y[r], f.mul(m.at(r, c), src[i].x[c]));
    dst[i] = ProjPoint::make(f, y);
  }
  auto g = frame_solve(src, dst);
  REQUIRE(g.has_value());
  for (int i = 0; i < 5; ++i) CHECK(act_on_point(*g, src[i]) == dst[i]);
  CHECK(*g == m);
  CHECK((*g * g->inverse()).is_identity());
}

TEST_CASE("degenerate frame") {
  const Field& f = make_field(5, 1);
  std::array<ProjPoint, 5> bad{ProjPoint::make(f, {1, 0, 0, 0}), ProjPoint::make(f, {0, 1, 0, 0}), ProjPoint::make(f, {1, 1, 0, 0}),
                               ProjPoint::make(f, {0, 0, 0, 1}), ProjPoint::make(f, {1, 1, 1, 1})};
  CHECK_THROWS_AS(frame_solve(bad, bad), Error);
}

TEST_CASE("collineation group operations") {
  const Field& f = make_field(3, 2);
  Collineation p = Collineation::permutation(f, {1, 2, 3, 0});
  CHECK(p.pow(4).is_identity());
  CHECK_FALSE(p.pow(2).is_identity());
  Collineation d = Collineation::diagonal(f, {2, 2, 2, 2});
  CHECK(d.is_identity());
}

TEST_CASE("rational canonical form separates conjugacy classes") {
  const Field& f = make_field(5, 1);
  Matrix a = Collineation::diagonal(f, {1, 1, 2, 3}).matrix();
  Matrix c = Collineation::permutation(f, {1, 0, 2, 3}).matrix();
  CHECK(rcf(a) == rcf(a));
  CHECK_FALSE(rcf(a) == rcf(c));
}
