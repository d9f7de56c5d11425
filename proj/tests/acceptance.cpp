// Acceptance checks 1-9.  One line per criterion; failing sub-checks are
// listed underneath.  Exit status is the number of failed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symcubic/autiso.hpp"
#include "symcubic/picweyl.hpp"

using namespace symcubic;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    ++checks;
    if (!(actual == expected)) failures.push_back(what + ": got " + to_s(actual) + ", expected " + to_s(expected));
  }

private:
  static std::string to_s(const std::string& s) { return s; }
  static std::string to_s(const char* s) { return s; }
  static std::string to_s(bool b) { return b ? "true" : "false"; }
  template <class T>
  static std::string to_s(const T& v) {
    return std::to_string(v);
  }
};

CubicForm surf(const char* name, int p, int k) { return catalog_surface(name, make_field(p, k)); }

std::map<std::string, AutReport>& aut_cache() {
  static std::map<std::string, AutReport> m;
  return m;
}

const AutReport& aut(const char* name, int p, int k) {
  std::string key = std::string(name) + std::to_string(p) + "^" + std::to_string(k);
  auto& m = aut_cache();
  auto it = m.find(key);
  if (it == m.end()) it = m.emplace(key, automorphism_group(surf(name, p, k))).first;
  return it->second;
}

// ------------------------------------------------------------------ 1
void weyl(Criterion& c) {
  const WeylGroup& W = WeylGroup::instance();
  c.equal(W.size(), 51840u, "|W(E6)|");
  struct Row {
    const char* label;
    std::uint64_t size, cent;
  };
  const Row rows[] = {{"A1", 36, 1440}, {"A1^2", 270, 192}, {"A1^3", 540, 96},   {"A1^4", 45, 1152}, {"A2", 240, 216},   {"A2^2", 480, 108},
                      {"A2^3", 80, 648}, {"A4", 5184, 10},  {"D5", 6480, 8},     {"E6(a1)", 5760, 9}, {"A4xA1", 5184, 10}};
  for (auto& r : rows) {
    const ConjugacyClass& k = W.class_named(r.label);
    c.equal(k.size, r.size, std::string(r.label) + " size");
    c.equal(k.centralizer_order, r.cent, std::string(r.label) + " centralizer");
  }
  std::map<int, int> order_count;
  for (auto& w : W.elements()) ++order_count[w.order()];
  c.equal(order_count.count(24), 0u, "elements of order 24");

  auto label = [&](const WeylElement& w) { return classify(w); };
  int e6a2 = 0, o8 = 0, o10 = 0;
  for (auto& w : W.elements()) {
    if (label(w) == "E6(a2)") {
      ++e6a2;
      c.expect(label(w.pow(2)) == "A2^3" && label(w.pow(3)) == "A1^4", "E6(a2) power map");
    }
    if (w.order() == 8) {
      ++o8;
      c.expect(label(w.pow(4)) == "A1^4", "order 8 power map");
    }
    if (w.order() == 10) {
      ++o10;
      c.expect(label(w.pow(5)) == "A1", "order 10 power map");
    }
  }
  c.expect(e6a2 > 0 && o8 > 0 && o10 > 0, "power map classes nonempty");

  WeylElement g = W.element(W.class_named("A4").representative);
  auto cent = W.centralizer(std::span<const WeylElement>(&g, 1));
  c.equal(cent.size(), 10u, "centralizer of A4 element");
  c.expect(std::any_of(cent.begin(), cent.end(), [&](int i) { return W.element(i).order() == 10; }), "centralizer is cyclic");
}

// ------------------------------------------------------------------ 2
void lines(Criterion& c) {
  struct S {
    const char* name;
    int p, k;
  };
  for (S s : {S{"fermat", 2, 2}, S{"fermat", 7, 1}, S{"s_1_2", 2, 1}, S{"s_1_2", 5, 1}, S{"s_1_1", 3, 2}, S{"clebsch", 3, 1}, S{"clebsch", 11, 1}}) {
    std::string id = std::string(s.name) + "/GF(" + std::to_string(make_field(s.p, s.k).size()) + ")";
    LineConfig cfg = enumerate_lines(surf(s.name, s.p, s.k));
    c.equal(cfg.lines().size(), 27u, id + " lines");
    bool regular = true;
    for (int l = 0; l < kLines; ++l) regular = regular && std::popcount(cfg.neighbours(l)) == 10;
    c.expect(regular, id + " degree 10");
    c.equal(cfg.tritangents().size(), 45u, id + " tritangents");
    // intersection table of the blow-up model: Ei.Ej = 0, Ei.Qj = 1 iff i != j,
    // Ei.Ljk = 1 iff i in {j,k}, Qi.Ljk = 1 iff i in {j,k}, Lij.Lkl = 1 iff disjoint
    auto kind = [](int a) { return a < 6 ? 0 : a < 12 ? 1 : 2; };
    auto pair = [](int a) {
      static std::vector<std::pair<int, int>> ps;
      if (ps.empty())
        for (int i = 1; i <= 6; ++i)
          for (int j = i + 1; j <= 6; ++j) ps.emplace_back(i, j);
      return ps[a - 12];
    };
    bool table = true;
    for (int a = 0; a < kLines; ++a)
      for (int b = a + 1; b < kLines; ++b) {
        bool m;
        if (kind(a) == 0 && kind(b) == 0) m = false;
        else if (kind(a) == 1 && kind(b) == 1) m = false;
        else if (kind(a) == 0 && kind(b) == 1) m = a != b - 6;
        else if (kind(b) == 2 && kind(a) < 2) {
          int i = a % 6 + 1;
          auto [j, k] = pair(b);
          m = i == j || i == k;
        } else {
          auto [i, j] = pair(a);
          auto [k, l] = pair(b);
          m = i != k && i != l && j != k && j != l;
        }
        table = table && cfg.meets(cfg.marking()[a], cfg.marking()[b]) == m;
      }
    c.expect(table, id + " marking intersection table");
  }
  LineConfig f2 = enumerate_lines(surf("fermat", 2, 1));
  int fixed = 0;
  for (int l = 0; l < kLines; ++l) fixed += f2.frobenius()[l] == l;
  c.equal(fixed, 3, "fermat/GF(2) Frobenius-fixed lines");
}

// ------------------------------------------------------------------ 3
void galois(Criterion& c) {
  GaloisImage a = galois_image(enumerate_lines(surf("fermat", 2, 2)));
  c.expect(a.generator.is_identity(), "fermat/GF(4) trivial");
  GaloisImage b = galois_image(enumerate_lines(surf("s_1_2", 2, 1)));
  c.equal(b.order, 2, "s_1_2/GF(2) order");
  c.equal(b.class_label, "A1", "s_1_2/GF(2) class");
  // A1: eigenvalue -1 exactly once on the E6 lattice
  c.expect(charpoly_e6(b.generator) == IntPoly{-1, 4, -5, 0, 5, -4, 1}, "s_1_2/GF(2) charpoly (t-1)^5 (t+1)");
  GaloisImage d = galois_image(enumerate_lines(surf("s_1_1", 3, 2)));
  c.expect(d.generator.is_identity(), "s_1_1/GF(9) trivial");
}

// ------------------------------------------------------------------ 4
void automorphisms(Criterion& c) {
  struct S {
    const char* name;
    int p, k;
    std::uint64_t order;
    const char* group;
  };
  for (S s : {S{"fermat", 2, 2, 25920, "PSU4_2"}, S{"s_1_2", 2, 1, 720, "S6"}, S{"s_1_1", 3, 2, 216, "H3_Z8"}, S{"clebsch", 3, 1, 120, "S5"},
              S{"s_1_2", 5, 1, 72, "Z3_2_D4"}, S{"fermat", 7, 1, 648, "Z3_3_S4"}, S{"clebsch", 11, 1, 120, "S5"}}) {
    std::string id = std::string(s.name) + "/GF(" + std::to_string(make_field(s.p, s.k).size()) + ")";
    const AutReport& r = aut(s.name, s.p, s.k);
    c.equal(r.order, s.order, id + " order");
    c.expect(r.fingerprint == reference_group(s.group).fingerprint, id + " fingerprint = " + s.group);
    c.equal(r.matched_name.value_or("none"), std::string(s.group), id + " matched name");
  }
}

// ------------------------------------------------------------------ 5
void singularities(Criterion& c) {
  for (const char* s : {"fermat", "clebsch", "s_1_1", "s_1_2"})
    for (int p : {2, 3, 5, 7}) {
      std::string id = std::string(s) + "/GF(" + std::to_string(p) + ")";
      SingularityReport r = singular_locus(surf(s, p, 1));
      std::string name = s;
      if (name == "fermat" && p == 3) {
        c.expect(r.nonreduced, id + " nonreduced");
      } else if (name == "clebsch" && p == 5) {
        c.expect(std::any_of(r.points.begin(), r.points.end(), [](auto& x) { return x.point.str() == "[1:1:1:1]"; }), id + " singular at [1:1:1:1]");
      } else if (name == "s_1_1" && p == 2) {
        c.expect(std::any_of(r.points.begin(), r.points.end(), [](auto& x) { return x.point.str() == "[0:0:1:1]"; }), id + " singular at [0:0:1:1]");
      } else if (name == "s_1_2" && p == 3) {
        c.expect(!r.smooth(), id + " singular");
      } else {
        c.expect(r.smooth(), id + " smooth");
        c.expect(is_smooth(surf(s, p, 1)), id + " smooth over the closure");
      }
    }
}

// ------------------------------------------------------------------ 6
void isomorphisms(Criterion& c) {
  auto iso = [&](const char* a, const char* b, int p, int k, bool expected) {
    std::string id = std::string(a) + " vs " + b + " over GF(" + std::to_string(make_field(p, k).size()) + ")";
    CubicForm fa = surf(a, p, k), fb = surf(b, p, k);
    auto w = isomorphism_test(fa, fb);
    c.equal(w.has_value(), expected, id);
    if (w) {
      auto [img, s] = apply_collineation(fa, w->g);
      c.expect(img.proportional_to(fb), id + " witness");
      c.expect(&w->g.field() == &fa.field(), id + " witness over the base field");
    }
  };
  iso("clebsch", "s_1_2", 2, 1, true);
  iso("fermat", "s_1_2", 2, 1, false);
  iso("fermat", "s_1_2", 2, 2, true);
  iso("s_1_2", "clebsch", 2, 2, true);
  iso("fermat", "clebsch", 2, 2, true);
  iso("fermat", "s_1_2", 5, 1, false);
  iso("fermat", "s_1_2", 5, 2, true);
  for (const char* other : {"fermat", "clebsch", "s_1_2"}) {
    CubicForm o = surf(other, 3, 2);
    if (!is_smooth(o)) {
      bool threw = false;
      try {
        isomorphism_test(surf("s_1_1", 3, 2), o);
      } catch (const Error& e) {
        threw = e.kind() == ErrorKind::SurfaceSingular;
      }
      c.expect(threw, std::string("s_1_1 vs ") + other + " rejected as singular");
      continue;
    }
    c.expect(!isomorphism_test(surf("s_1_1", 3, 2), o), std::string("s_1_1 vs ") + other + " over GF(9)");
  }
}

// ------------------------------------------------------------------ 7
void paper_maps(Criterion& c) {
  for (const char* id : {"L56", "L53_to_L54_chain", "L32", "L44"})
    for (auto& r : verify_paper_isomorphism(id))
      for (auto& s : r.steps) {
        // independent recheck: source(g^-1 x) proportional to target
        c.expect(s.ok && apply_collineation(s.source, s.g).first.proportional_to(s.target), r.id + " over " + r.field + ": " + s.description);
      }
}

// ------------------------------------------------------------------ 8
void heisenberg(Criterion& c) {
  const Field& f = make_field(3, 2);
  auto hs = heisenberg_generators(f);
  c.equal(hs.size(), 27u, "elements");
  CubicForm s11 = catalog_surface("s_1_1", f);
  bool abelian = true;
  int order3 = 0;
  for (auto& a : hs) {
    c.expect(preserves(s11, a.g), "preserves s_1_1");
    if (!a.g.is_identity()) order3 += a.g.pow(3).is_identity() ? 1 : 0;
    for (auto& b : hs) {
      abelian = abelian && a.g * b.g == b.g * a.g;
      // law: (a1, c1)(a2, c2) = (a1 + a2, a1 a2^3 + c1 + c2)
      Elt al = f.add(a.alpha, b.alpha);
      Elt cc = f.add(f.add(f.mul(a.alpha, f.pow(b.alpha, 3)), a.c), b.c);
      c.expect(a.g * b.g == heisenberg_matrix(f, al, cc), "composition law");
    }
  }
  c.equal(order3, 26, "nonidentity elements of order 3");
  c.expect(!abelian, "nonabelian");
  std::vector<Perm> gens;
  for (auto& a : hs) gens.push_back(point_permutation(a.g));
  gens.push_back(point_permutation(order8_element(f)));
  c.equal(generate(gens, 0).size(), 216u, "with the order 8 element");
}

// ------------------------------------------------------------------ 9
void properties(Criterion& c) {
  struct S {
    const char* name;
    int p, k;
  };
  const std::vector<S> all{{"fermat", 2, 2}, {"s_1_2", 2, 1}, {"s_1_1", 3, 2}, {"clebsch", 3, 1}, {"s_1_2", 5, 1}, {"fermat", 7, 1}, {"clebsch", 11, 1}};
  for (S s : all) {
    std::string id = std::string(s.name) + "/GF(" + std::to_string(make_field(s.p, s.k).size()) + ")";
    const AutReport& r = aut(s.name, s.p, s.k);
    std::set<Collineation> set(r.elements.begin(), r.elements.end());
    // closure: products with a generating set stay inside
    std::vector<Perm> perms;
    for (auto& p : r.line_perms) perms.emplace_back(p.begin(), p.end());
    bool closed = set.size() == r.elements.size();
    for (auto& g : generating_set(perms)) {
      auto i = std::find(perms.begin(), perms.end(), g) - perms.begin();
      for (auto& x : r.elements) closed = closed && set.count(r.elements[static_cast<std::size_t>(i)] * x);
    }
    for (auto& x : r.elements) closed = closed && set.count(x.inverse());
    c.expect(closed, id + " closure");
    LineConfig cfg = enumerate_lines(r.surface);
    bool commute = true;
    for (auto& p : r.line_perms)
      for (int l = 0; l < kLines; ++l) commute = commute && p[cfg.frobenius()[l]] == cfg.frobenius()[p[l]];
    c.expect(commute, id + " Frobenius commutation");
  }
  for (S s : {S{"s_1_2", 5, 1}, S{"s_1_2", 2, 1}, S{"clebsch", 11, 1}}) {
    const AutReport& r = aut(s.name, s.p, s.k);
    for (auto& w : r.weyl_image)
      if (w.order() == 3) c.expect(classify(w) != "A2^3", std::string(s.name) + " order 3 element outside A2^3");
  }
  {
    const AutReport& r = aut("clebsch", 11, 1);
    LineConfig cfg = enumerate_lines(r.surface);
    auto it = std::find_if(r.weyl_image.begin(), r.weyl_image.end(), [](auto& w) { return w.order() == 5; });
    c.expect(it != r.weyl_image.end(), "order 5 automorphism exists");
    if (it != r.weyl_image.end()) {
      const LinePerm& g = r.line_perms[static_cast<std::size_t>(it - r.weyl_image.begin())];
      std::vector<int> fixed;
      for (int l = 0; l < kLines; ++l)
        if (g[l] == l) fixed.push_back(l);
      c.equal(fixed.size(), 2u, "order 5: fixed lines");
      c.expect(fixed.size() == 2 && !cfg.meets(fixed[0], fixed[1]), "order 5: fixed lines skew");
      c.equal(find_skew_quintuples(cfg, g).size(), 3u, "order 5: skew quintuples");
      c.equal(find_stars(cfg, g).size(), 2u, "order 5: star quintuples");
    }
  }
  {
    // weights of diag(z^6, z, z^4, 1): the group of t^3 is weight 1
    const Field& f = make_field(3, 2);
    Elt z = nth_root_of_unity(f, 8)->code();
    auto mono = [](const char* s) {
      int e[4] = {0, 0, 0, 0};
      for (const char* p = s; *p; ++p) ++e[std::string("xyzt").find(*p)];
      return make_mono(e[0], e[1], e[2], e[3]);
    };
    const std::vector<std::vector<const char*>> table{{"ttt", "xxz", "yyx", "zzt"}, {"zzy", "tty"}, {"xxx", "yyt", "xzt"}, {"yyy", "xyz"},
                                                      {"zzz", "xxt", "ttz"},        {"xxy", "yzt"}, {"yyz", "zzx", "ttx"}, {"xyt"}};
    auto groups = monomial_weights(order8_element(f));
    Elt base = 0;
    for (auto& g : groups)
      if (std::count(g.monomials.begin(), g.monomials.end(), mono("ttt"))) base = g.weight;
    for (int k = 0; k < 8; ++k) {
      std::set<Mono> want;
      for (auto* m : table[static_cast<std::size_t>(k)]) want.insert(mono(m));
      Elt w = f.mul(base, f.pow(z, static_cast<std::uint64_t>(k)));
      std::set<Mono> got;
      for (auto& g : groups)
        if (g.weight == w) got.insert(g.monomials.begin(), g.monomials.end());
      c.expect(got == want, "weight z^" + std::to_string(k) + " monomials");
    }
  }
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"Weyl group, class table, power maps, centralizers", weyl},
      {"27 lines, graph, tritangents, marking", lines},
      {"Galois images", galois},
      {"automorphism group orders and fingerprints", automorphisms},
      {"singularity table", singularities},
      {"isomorphism matrix", isomorphisms},
      {"explicit maps", paper_maps},
      {"Heisenberg group", heisenberg},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.failures.empty() && err.empty();
    failed += !ok;
    std::printf("criterion %zu: %s  %s (%d checks, %.2f s)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first, c.checks, secs);
    for (auto& f : c.failures) std::printf("    failed: %s\n", f.c_str());
    if (!err.empty()) std::printf("    error: %s\n", err.c_str());
  }
  return failed;
}
