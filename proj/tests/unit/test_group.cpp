#include <doctest.h>

#include <algorithm>

#include "symcubic/error.hpp"
#include "symcubic/group.hpp"

using namespace symcubic;

namespace {
Perm cyc(std::vector<std::uint16_t> v) { return v; }
}

TEST_CASE("S5 fingerprint") {
  auto s5 = generate({cyc({1, 0, 2, 3, 4}), cyc({1, 2, 3, 4, 0})}, 5);
  // element orders counted by brute force over all permutations
  std::vector<std::uint16_t> p{0, 1, 2, 3, 4};
  std::map<int, std::uint64_t> hist;
  do hist[perm_order(p)]++;
  while (std::next_permutation(p.begin(), p.end()));
  Fingerprint fp = fingerprint(s5);
  CHECK(fp.order == 120);
  CHECK(fp.element_orders == hist);
  CHECK(fp.element_orders == std::map<int, std::uint64_t>{{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}});
  CHECK(fp.centre == 1);
  CHECK(fp.derived == 60);
  CHECK(fp.abelianization == std::vector<std::uint64_t>{2});
}

TEST_CASE("trivial group") {
  Fingerprint fp = fingerprint({perm_identity(3)});
  CHECK(fp.order == 1);
  CHECK(fp.element_orders == std::map<int, std::uint64_t>{{1, 1}});
  CHECK(fp.centre == 1);
  CHECK(fp.derived == 1);
  CHECK(fp.abelianization.empty());
}

TEST_CASE("fingerprint is invariant under relabelling") {
  auto g = generate({cyc({1, 2, 3, 0, 4, 5}), cyc({0, 1, 2, 3, 5, 4})}, 6);  // Z4 x Z2
  Perm r = cyc({5, 3, 1, 0, 2, 4});
  std::vector<Perm> h;
  for (auto& x : g) h.push_back(perm_mul(perm_mul(r, x), perm_inverse(r)));
  CHECK(fingerprint(g) == fingerprint(h));
  CHECK(fingerprint(g).abelianization == std::vector<std::uint64_t>{2, 4});
}

TEST_CASE("non-closed list") {
  CHECK_THROWS_AS(fingerprint({perm_identity(3), cyc({1, 2, 0})}), Error);
}
