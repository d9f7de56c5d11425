#include <doctest.h>

#include "symcubic/gf.hpp"

using namespace symcubic;

TEST_CASE("field axioms by exhaustion") {
  for (auto [p, k] : {std::pair{2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
    const Field& f = make_field(p, k);
    CAPTURE(f.name());
    for (std::uint64_t a = 0; a < f.size(); ++a) {
      Elt x = f.from_key(a);
      CHECK(f.add(x, f.neg(x)) == 0);
      if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.pow(x, f.size()) == x);
      for (std::uint64_t b = 0; b < f.size(); b += 3) {
        Elt y = f.from_key(b);
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.mul(x, f.add(y, 1)) == f.add(f.mul(x, y), x));
        CHECK(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
      }
    }
  }
}

TEST_CASE("primitive element and roots of unity") {
  const Field& f = make_field(3, 2);
  CHECK(f.order_of(f.primitive()) == 8);
  CHECK(nth_root_of_unity(f, 4).has_value());
  CHECK_FALSE(nth_root_of_unity(make_field(3, 1), 4).has_value());
  CHECK(nth_root_of_unity(make_field(2, 2), 3).has_value());
  CHECK_FALSE(nth_root_of_unity(make_field(5, 1), 3).has_value());
  CHECK(nth_root_of_unity(make_field(7, 1), 3)->code() == 2);
}

TEST_CASE("parse and format") {
  CHECK(parse_field("GF(9)").size() == 9);
  CHECK(&parse_field("GF(3^2)") == &parse_field("GF(9)"));
  CHECK_THROWS_AS(parse_field("GF(6)"), Error);
  const Field& f = make_field(2, 2);
  for (std::uint64_t a = 0; a < 4; ++a) CHECK(f.parse(f.format(f.from_key(a))) == f.from_key(a));
}

TEST_CASE("factorization reassembles and roots evaluate to zero") {
  const Field& f = make_field(5, 1);
  Poly a(f, {1, 0, 0, 1});  // t^3 + 1
  Poly prod = Poly::constant(f, 1);
  for (auto& [g, e] : factor(a)) {
    CHECK(is_irreducible(g));
    for (int i = 0; i < e; ++i) prod = prod * g;
  }
  CHECK(prod == monic(a));
  for (auto& r : poly_roots(a)) CHECK(eval(a, r.code()) == 0);
  // brute-force root count
  int n = 0;
  for (Elt x = 0; x < 5; ++x) n += eval(a, x) == 0;
  CHECK(poly_roots(a).size() == static_cast<std::size_t>(n));
}

TEST_CASE("embedding is a ring homomorphism") {
  const Field& a = make_field(2, 2);
  const Field& b = make_field(2, 4);
  const Embedding& e = embedding(a, b);
  for (Elt x = 0; x < 4; ++x)
    for (Elt y = 0; y < 4; ++y) {
      CHECK(e(a.mul(x, y)) == b.mul(e(x), e(y)));
      CHECK(e(a.add(x, y)) == b.add(e(x), e(y)));
      CHECK(e.restrict(e(x)) == x);
    }
  CHECK_FALSE(e.restrict(b.primitive()).has_value());
}
