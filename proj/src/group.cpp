#include "symcubic/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "symcubic/error.hpp"

namespace symcubic {

std::size_t PermHash::operator()(const Perm& p) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

int perm_order(const Perm& a) {
  // lcm of cycle lengths
  std::vector<bool> seen(a.size(), false);
  std::uint64_t l = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return static_cast<int>(l);
}

std::vector<Perm> generate(const std::vector<Perm>& gens, std::size_t n) {
  if (!gens.empty()) n = gens.front().size();
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = perm_identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (auto& g : gens) {
      Perm y = perm_mul(g, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> generating_set(const std::vector<Perm>& elements) {
  if (elements.empty()) fail(ErrorKind::NotClosed, "empty element list");
  std::size_t n = elements.front().size();
  // largest orders first keeps the set short
  std::vector<const Perm*> order;
  for (auto& e : elements) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(), [](const Perm* a, const Perm* b) { return perm_order(*a) > perm_order(*b); });
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> h{perm_identity(n)};
  for (auto* e : order) {
    if (h.count(*e)) continue;
    gens.push_back(*e);
    auto all = generate(gens, n);
    h = std::unordered_set<Perm, PermHash>(all.begin(), all.end());
    if (h.size() >= elements.size()) break;
  }
  return gens;
}

std::vector<Perm> derived_subgroup(const std::vector<Perm>& elements) {
  std::size_t n = elements.front().size();
  auto gens = generating_set(elements);
  std::vector<Perm> dgens;
  for (auto& a : gens)
    for (auto& b : gens) {
      Perm c = perm_mul(perm_mul(perm_inverse(a), perm_inverse(b)), perm_mul(a, b));
      if (!perm_is_identity(c)) dgens.push_back(c);
    }
  auto d = generate(dgens, n);
  std::unordered_set<Perm, PermHash> dset(d.begin(), d.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < dgens.size() && !grew; ++i)
      for (auto& g : gens) {
        Perm c = perm_mul(perm_mul(g, dgens[i]), perm_inverse(g));
        if (!dset.count(c)) {
          dgens.push_back(c);
          d = generate(dgens, n);
          dset = std::unordered_set<Perm, PermHash>(d.begin(), d.end());
          grew = true;
          break;
        }
      }
  }
  return d;
}

std::vector<Perm> centre(const std::vector<Perm>& elements) {
  auto gens = generating_set(elements);
  std::vector<Perm> out;
  for (auto& e : elements) {
    bool central = std::all_of(gens.begin(), gens.end(), [&](const Perm& g) { return perm_mul(g, e) == perm_mul(e, g); });
    if (central) out.push_back(e);
  }
  return out;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

Perm perm_pow(const Perm& a, std::uint64_t e) {
  Perm r = perm_identity(a.size()), b = a;
  while (e) {
    if (e & 1) r = perm_mul(r, b);
    b = perm_mul(b, b);
    e >>= 1;
  }
  return r;
}

} // namespace

Fingerprint fingerprint(const std::vector<Perm>& elements) {
  if (elements.empty()) fail(ErrorKind::NotClosed, "empty element list");
  std::vector<Perm> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(ErrorKind::NotClosed, "repeated elements");
  auto closure = generate(generating_set(sorted), sorted.front().size());
  if (closure != sorted)
    fail(ErrorKind::NotClosed, "closure has " + std::to_string(closure.size()) + " elements, list has " + std::to_string(sorted.size()));

  Fingerprint fp;
  fp.order = sorted.size();
  for (auto& e : sorted) ++fp.element_orders[perm_order(e)];
  fp.centre = centre(sorted).size();
  auto d = derived_subgroup(sorted);
  fp.derived = d.size();

  std::unordered_set<Perm, PermHash> dset(d.begin(), d.end());
  std::uint64_t m = fp.order / fp.derived;
  for (std::uint64_t p : prime_factors(m)) {
    // N(p^j) = #{cosets with order dividing p^j}
    std::vector<int> logs{0};
    std::uint64_t pj = 1;
    while (true) {
      pj *= p;
      std::uint64_t count = 0;
      for (auto& x : sorted)
        if (dset.count(perm_pow(x, pj))) ++count;
      count /= fp.derived;
      int lg = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++lg;
      logs.push_back(lg);
      if (logs.back() == logs[logs.size() - 2]) break;
    }
    // parts >= j is logs[j] - logs[j-1]
    for (std::size_t j = 1; j + 1 < logs.size(); ++j) {
      int parts_ge = logs[j] - logs[j - 1];
      int parts_ge_next = logs[j + 1] - logs[j];
      std::uint64_t pw = 1;
      for (std::size_t i = 0; i < j; ++i) pw *= p;
      for (int c = 0; c < parts_ge - parts_ge_next; ++c) fp.abelianization.push_back(pw);
    }
  }
  std::sort(fp.abelianization.begin(), fp.abelianization.end());
  return fp;
}

std::string Fingerprint::str() const {
  std::string s = "order " + std::to_string(order) + ", orders {";
  bool first = true;
  for (auto& [o, c] : element_orders) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  s += "}, centre " + std::to_string(centre) + ", derived " + std::to_string(derived) + ", abelianization ";
  if (abelianization.empty()) return s + "1";
  for (std::size_t i = 0; i < abelianization.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(abelianization[i]);
  return s;
}

} // namespace symcubic
