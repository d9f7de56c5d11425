#pragma once
// Finite permutation groups given by element lists: closure, derived
// subgroup, centre and an isomorphism-invariant fingerprint.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symcubic {

using Perm = std::vector<std::uint16_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

Perm perm_identity(std::size_t n);
// (a * b)(i) = a(b(i))
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
int perm_order(const Perm& a);
bool perm_is_identity(const Perm& a);

// All elements of the group generated by gens (sorted).  n is the degree
// used when gens is empty.
std::vector<Perm> generate(const std::vector<Perm>& gens, std::size_t n);
// A few elements generating the same group as the (closed) list.
std::vector<Perm> generating_set(const std::vector<Perm>& elements);
std::vector<Perm> derived_subgroup(const std::vector<Perm>& elements);
std::vector<Perm> centre(const std::vector<Perm>& elements);

struct Fingerprint {
  std::uint64_t order = 0;
  std::map<int, std::uint64_t> element_orders;
  std::uint64_t centre = 0;
  std::uint64_t derived = 0;
  std::vector<std::uint64_t> abelianization;  // elementary divisors, ascending

  bool operator==(const Fingerprint& o) const = default;
  std::string str() const;
};

// Throws NotClosed if the list is not a group.
Fingerprint fingerprint(const std::vector<Perm>& elements);

} // namespace symcubic
