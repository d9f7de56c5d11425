#include <doctest.h>

#include <bit>

#include "symcubic/lines.hpp"

using namespace symcubic;

namespace {

bool on_surface(const CubicForm& f, const Line& l) {
  // a cubic vanishing at 4 points of a line vanishes on it
  const Field& E = *l.f;
  CubicForm fe = f.embedded(E);
  ProjPoint a = l.point(0), b = l.point(1);
  for (Elt s : {Elt{0}, Elt{1}, E.primitive(), E.from_int(-1)}) {
    std::array<Elt, 4> x{};
    for (int i = 0; i < 4; ++i) x[i] = E.add(a.x[i], E.mul(s, b.x[i]));
    if (s == E.from_int(-1) && E.p() == 2) x = b.x;
    if (fe.eval(x) != 0) return false;
  }
  return true;
}

} // namespace

TEST_CASE("propagation from one seed reproduces the Groebner enumeration") {
  struct C {
    const char* s;
    int p, k;
  };
  for (C c : {C{"fermat", 2, 2}, C{"fermat", 7, 1}, C{"s_1_2", 2, 1}, C{"s_1_1", 3, 2}, C{"clebsch", 3, 1}, C{"clebsch", 11, 1}}) {
    CAPTURE(c.s);
    const Field& f = make_field(c.p, c.k);
    CubicForm s = catalog_surface(c.s, f);
    LineConfig cfg = enumerate_lines(s);
    const Field& E = cfg.field();
    auto seed = seed_line(s, E);
    REQUIRE(seed.has_value());
    auto lines = propagate_lines(s, E, {*seed});
    std::sort(lines.begin(), lines.end());
    CHECK(lines == cfg.lines());
    for (auto& l : cfg.lines()) CHECK(on_surface(s, l));
  }
}

TEST_CASE("seeds") {
  CHECK(seed_line(catalog_surface("s_1_2", make_field(2, 1)), make_field(2, 2))->equations() == "x = z = 0");
}

TEST_CASE("configuration invariants") {
  LineConfig c = enumerate_lines(catalog_surface("s_1_2", make_field(5, 1)));
  CHECK(c.splitting_degree() == 2);
  for (int l = 0; l < kLines; ++l) CHECK(std::popcount(c.neighbours(l)) == 10);
  CHECK(c.tritangents().size() == 45);
  for (auto& t : c.tritangents()) {
    CHECK(c.meets(t[0], t[1]));
    CHECK(c.meets(t[1], t[2]));
  }
  int fixed = 0;
  for (int l = 0; l < kLines; ++l) fixed += c.frobenius()[l] == l;
  CHECK(fixed == 15);
  for (int l = 0; l < kLines; ++l) CHECK(c.label_of()[c.marking()[l]] == l);
}

TEST_CASE("lines over small fields") {
  LineConfig f2 = enumerate_lines(catalog_surface("fermat", make_field(2, 1)));
  int fixed = 0;
  for (int l = 0; l < kLines; ++l) fixed += f2.degree(l) == 1;
  CHECK(fixed == 3);
  CHECK_THROWS_AS(enumerate_lines(catalog_surface("fermat", make_field(3, 1))), Error);
}

TEST_CASE("labels") {
  CHECK(label_name(label_e(1)) == "E1");
  CHECK(label_name(label_q(6)) == "Q6");
  CHECK(label_name(label_l(5, 6)) == "L56");
  CHECK(label_l(1, 2) == 12);
}
