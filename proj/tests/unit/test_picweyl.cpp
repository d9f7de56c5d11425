#include <doctest.h>

#include "symcubic/picweyl.hpp"

using namespace symcubic;

TEST_CASE("line classes") {
  PicClass K = canonical_class();
  for (int a = 0; a < kLines; ++a) {
    CHECK(pic_dot(label_class(a), label_class(a)) == -1);
    CHECK(pic_dot(label_class(a), K) == -1);
    CHECK(label_of_class(label_class(a)) == a);
    int meets = 0;
    for (int b = 0; b < kLines; ++b) meets += b != a && pic_dot(label_class(a), label_class(b)) == 1;
    CHECK(meets == 10);
  }
}

TEST_CASE("roots") {
  CHECK(root_system().size() == 72);
  for (auto& r : root_system()) {
    CHECK(pic_dot(r, r) == -2);
    CHECK(pic_dot(r, canonical_class()) == 0);
    WeylElement s = WeylElement::reflection(r);
    CHECK(s.order() == 2);
    CHECK(WeylGroup::instance().class_of(s).label == "A1");
  }
}

TEST_CASE("Weyl group") {
  const WeylGroup& W = WeylGroup::instance();
  CHECK(W.size() == 51840);
  std::uint64_t total = 0;
  for (auto& c : W.classes()) total += c.size;
  CHECK(total == 51840);
  CHECK(W.classes().size() == 25);
  const auto& a4 = W.class_named("A4");
  CHECK(a4.order == 5);
  CHECK(a4.charpoly == "Phi1^2*Phi5");
  for (auto& c : W.classes()) CHECK(c.size * c.centralizer_order == 51840);
}

TEST_CASE("characteristic polynomials") {
  CHECK(charpoly_e6(WeylElement()) == IntPoly{1, -6, 15, -20, 15, -6, 1});
  CHECK(cyclotomic_str(cyclotomic(9)) == "Phi9");
}
