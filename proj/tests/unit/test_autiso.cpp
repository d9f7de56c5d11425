#include <doctest.h>

#include "symcubic/autiso.hpp"

using namespace symcubic;

TEST_CASE("lifting the identity") {
  LineConfig c = enumerate_lines(catalog_surface("clebsch", make_field(3, 1)));
  auto g = lift_line_permutation(c, WeylElement());
  REQUIRE(g.has_value());
  CHECK(g->is_identity());
}

TEST_CASE("lifting fails for a degree-changing permutation") {
  LineConfig c = enumerate_lines(catalog_surface("s_1_2", make_field(2, 1)));
  const WeylGroup& W = WeylGroup::instance();
  int tried = 0;
  for (auto& w : W.elements()) {
    bool moves = false;
    for (int l = 0; l < kLines; ++l) moves = moves || c.degree(c.marking()[w(c.label_of()[l])]) != c.degree(l);
    if (!moves) continue;
    CHECK_FALSE(lift_line_permutation(c, w).has_value());
    if (++tried == 50) break;
  }
  CHECK(tried == 50);
}

TEST_CASE("Galois image") {
  GaloisImage g = galois_image(enumerate_lines(catalog_surface("s_1_2", make_field(2, 1))));
  CHECK(g.order == 2);
  CHECK(g.class_label == "A1");
  CHECK(galois_image(enumerate_lines(catalog_surface("fermat", make_field(2, 2)))).order == 1);
}

TEST_CASE("Heisenberg group") {
  const Field& f = make_field(3, 2);
  auto hs = heisenberg_generators(f);
  REQUIRE(hs.size() == 27);
  CHECK(hs.front().alpha == 0);
  CHECK(hs.front().c == 0);
  CHECK(hs.front().g.is_identity());
  CHECK_THROWS_AS(heisenberg_generators(make_field(3, 1)), Error);
}

TEST_CASE("automorphisms of small cases") {
  AutReport r = automorphism_group(catalog_surface("clebsch", make_field(3, 1)));
  CHECK(r.order == 120);
  CHECK(r.matched_name == "S5");
  for (auto& g : r.elements) CHECK(preserves(r.surface, g));
  CHECK_THROWS_AS(automorphism_group(catalog_surface("clebsch", make_field(5, 1))), Error);
}

TEST_CASE("reference groups") {
  CHECK(reference_group("S6").fingerprint.order == 720);
  CHECK(reference_group("H3_Z2").fingerprint.order == 54);
  CHECK(reference_group("H3_Z4").fingerprint.order == 108);
  CHECK_THROWS_AS(reference_group("A5"), Error);
}

TEST_CASE("isomorphism search") {
  const Field& f = make_field(2, 1);
  CubicForm a = catalog_surface("clebsch", f), b = catalog_surface("s_1_2", f);
  auto w = isomorphism_test(a, b);
  REQUIRE(w.has_value());
  CHECK(check_witness(b, a, w->g.inverse()).has_value());
  CHECK_FALSE(isomorphism_test(catalog_surface("fermat", f), b).has_value());
  CHECK_THROWS_AS(isomorphism_test(catalog_surface("fermat", make_field(3, 1)), catalog_surface("s_1_1", make_field(3, 1))), Error);
}

TEST_CASE("explicit maps") {
  for (auto& id : paper_map_cases())
    for (auto& r : verify_paper_isomorphism(id)) {
      CAPTURE(r.id);
      CAPTURE(r.field);
      CHECK(r.ok);
    }
  CHECK_THROWS_AS(verify_paper_isomorphism("L99"), Error);
}
