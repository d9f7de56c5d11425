#include <doctest.h>

#include <set>

#include "symcubic/cubic.hpp"

using namespace symcubic;

namespace {

// every point of P^3(GF(q)) where f and all partials vanish
std::set<std::string> scan_singular(const CubicForm& f) {
  const Field& F = f.field();
  std::set<std::string> out;
  std::uint64_t q = F.size();
  for (std::uint64_t n = 0; n < q * q * q * q; ++n) {
    std::array<Elt, 4> x{};
    std::uint64_t r = n;
    for (auto& v : x) {
      v = F.from_key(r % q);
      r /= q;
    }
    if (x == std::array<Elt, 4>{}) continue;
    ProjPoint p = ProjPoint::make(F, x);
    if (p.x != x) continue;
    auto pv = eval_and_partials(f, p);
    if (pv.value == 0 && pv.partials == std::array<Elt, 4>{}) out.insert(p.str());
  }
  return out;
}

} // namespace

TEST_CASE("rational singular points agree with a full scan") {
  for (const char* s : {"fermat", "clebsch", "s_1_1", "s_1_2"})
    for (int p : {2, 3, 5, 7}) {
      const Field& f = make_field(p, 1);
      CubicForm c = catalog_surface(s, f);
      CAPTURE(s);
      CAPTURE(p);
      SingularityReport r = singular_locus(c, 1);
      if (r.nonreduced) continue;
      std::set<std::string> got;
      for (auto& pt : r.points) got.insert(pt.point.str());
      CHECK(got == scan_singular(c));
    }
}

TEST_CASE("singular locus examples") {
  CHECK(singular_locus(catalog_surface("fermat", make_field(3, 1))).nonreduced);
  auto cl = singular_locus(catalog_surface("clebsch", make_field(5, 1)));
  REQUIRE(cl.points.size() == 1);
  CHECK(cl.points[0].point.str() == "[1:1:1:1]");
  CHECK(is_smooth(catalog_surface("s_1_1", make_field(3, 2))));
  CHECK_FALSE(is_smooth(catalog_surface("s_1_1", make_field(2, 1))));
}

TEST_CASE("parse and collineation action") {
  const Field& f = make_field(5, 1);
  CubicForm a = parse_cubic(f, "x^3 + y^3 + z^3 + t^3");
  CHECK(a == catalog_surface("fermat", f));
  CHECK_THROWS_AS(parse_cubic(f, "x^2 + y"), Error);
  Collineation swap = Collineation::permutation(f, {1, 0, 2, 3});
  CHECK(preserves(a, swap));
  CubicForm b = parse_cubic(f, "x^3 + 2*y^3 + z^3 + t^3");
  CHECK_FALSE(preserves(b, swap));
  auto [img, s] = apply_collineation(b, swap);
  CHECK(img == parse_cubic(f, "2*x^3 + y^3 + z^3 + t^3").normalized().first);
}

TEST_CASE("plane sections") {
  const Field& f9 = make_field(3, 2);
  CubicForm s11 = catalog_surface("s_1_1", f9);
  // z = 0 gives t^3 - x y^2, a cuspidal cubic
  CHECK(classify_plane_section(s11, {0, 0, 1, 0}) == PlaneSectionClass::cuspidal_irreducible);
  const Field& f7 = make_field(7, 1);
  CHECK(classify_plane_section(catalog_surface("fermat", f7), {1, 1, 0, 0}) == PlaneSectionClass::three_lines);
  // x = 0 on the Fermat surface: a smooth plane cubic
  CHECK(classify_plane_section(catalog_surface("fermat", f7), {1, 0, 0, 0}) == PlaneSectionClass::smooth);
}

TEST_CASE("diagonal weights") {
  const Field& f = make_field(7, 1);
  auto w = monomial_weights(Collineation::diagonal(f, {2, 1, 1, 1}));
  std::size_t total = 0;
  for (auto& g : w) total += g.monomials.size();
  CHECK(total == 20);
  CHECK(w.size() == 3);  // 2 has order 3, x-degree mod 3
}
