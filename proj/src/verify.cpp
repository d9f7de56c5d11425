#include "symcubic/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <concepts>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "symcubic/autiso.hpp"
#include "symcubic/picweyl.hpp"

namespace symcubic {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

struct Case {
  const char* surface;
  const char* field;
  std::string str() const { return std::string(surface) + "/" + field; }
};

const std::vector<Case> kLineCases{{"fermat", "GF(4)"}, {"fermat", "GF(7)"},  {"s_1_2", "GF(2)"},   {"s_1_2", "GF(5)"},
                                   {"s_1_1", "GF(9)"},  {"clebsch", "GF(3)"}, {"clebsch", "GF(11)"}};

struct AutCase {
  Case c;
  std::uint64_t order;
  const char* group;
};

const std::vector<AutCase> kTheorem2{{{"fermat", "GF(4)"}, 25920, "PSU4_2"}, {{"s_1_2", "GF(2)"}, 720, "S6"}};
const std::vector<AutCase> kCorollary1{{{"s_1_1", "GF(9)"}, 216, "H3_Z8"},
                                       {{"clebsch", "GF(3)"}, 120, "S5"},
                                       {{"s_1_2", "GF(5)"}, 72, "Z3_2_D4"},
                                       {{"fermat", "GF(7)"}, 648, "Z3_3_S4"},
                                       {{"clebsch", "GF(11)"}, 120, "S5"}};

CubicForm surface(const Case& c) { return catalog_surface(c.surface, parse_field(c.field)); }

class Suite {
public:
  explicit Suite(std::string name) { r_.suite = std::move(name); }
  void check(std::string name, const std::string& expected, const std::string& actual) {
    r_.checks.push_back({std::move(name), expected, actual, expected == actual});
  }
  void check(std::string name, std::uint64_t expected, std::uint64_t actual) {
    check(std::move(name), std::to_string(expected), std::to_string(actual));
  }
  // exact bool only, so string literals pick the overload above
  template <class B>
    requires std::same_as<B, bool>
  void check(std::string name, B ok, const std::string& detail = "") {
    r_.checks.push_back({std::move(name), "true", ok ? "true" : detail.empty() ? "false" : detail, ok});
  }
  SuiteResult& result() { return r_; }

private:
  SuiteResult r_;
};

const AutReport& cached_aut(const Case& c, const VerifyOptions& opt) {
  static std::mutex mu;
  static std::map<std::string, AutReport> cache;
  std::lock_guard lock(mu);
  auto key = c.str();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, automorphism_group(surface(c), opt.max_split, opt.jobs)).first;
  return it->second;
}

// ------------------------------------------------------------ suites

void suite_table2(Suite& s) {
  struct Row {
    const char* label;
    std::uint64_t size, centralizer;
  };
  static const Row rows[] = {{"A1", 36, 1440},  {"A1^2", 270, 192}, {"A1^3", 540, 96},     {"A1^4", 45, 1152},
                             {"A2", 240, 216},  {"A2^2", 480, 108}, {"A2^3", 80, 648},     {"A4", 5184, 10},
                             {"D5", 6480, 8},   {"E6(a1)", 5760, 9}, {"A4xA1", 5184, 10}};
  const WeylGroup& W = WeylGroup::instance();
  for (auto& r : rows) {
    const ConjugacyClass& c = W.class_named(r.label);
    s.check(std::string(r.label) + " size/centralizer", std::to_string(r.size) + "/" + std::to_string(r.centralizer),
            std::to_string(c.size) + "/" + std::to_string(c.centralizer_order));
  }
}

void suite_weyl(Suite& s) {
  const WeylGroup& W = WeylGroup::instance();
  s.check("|W(E6)|", 51840, W.size());
  s.check("roots", 72, root_system().size());
  std::uint64_t order24 = 0;
  for (auto& w : W.elements()) order24 += w.order() == 24;
  s.check("elements of order 24", 0, order24);

  auto idx = [&](const char* l) {
    auto& cs = W.classes();
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (cs[i].label == l) return static_cast<int>(i);
    return -1;
  };
  const int e6a2 = idx("E6(a2)"), a23 = idx("A2^3"), a14 = idx("A1^4"), a1 = idx("A1");
  std::uint64_t n5i = 0, n5ii = 0, n5iii = 0, bad = 0;
  for (int i = 0; i < static_cast<int>(W.size()); ++i) {
    const WeylElement& w = W.element(i);
    auto cls = [&](int e) { return W.class_index(W.index_of(w.pow(e))); };
    if (W.class_index(i) == e6a2) {
      ++n5i;
      bad += cls(2) != a23 || cls(3) != a14;
    }
    if (w.order() == 8) {
      ++n5ii;
      bad += cls(4) != a14;
    }
    if (w.order() == 10) {
      ++n5iii;
      bad += cls(5) != a1;
    }
  }
  s.check("E6(a2) elements: square in A2^3, cube in A1^4", W.class_named("E6(a2)").size, n5i);
  s.check("order 8 elements: fourth power in A1^4", W.class_named("D5").size, n5ii);
  s.check("order 10 elements: fifth power in A1", W.class_named("A4xA1").size, n5iii);
  s.check("power map violations", 0, bad);

  const ConjugacyClass& a4 = W.class_named("A4");
  WeylElement g = W.element(a4.representative);
  auto cent = W.centralizer(std::span<const WeylElement>(&g, 1));
  s.check("centralizer of an A4 element: order", 10, cent.size());
  bool cyclic = std::any_of(cent.begin(), cent.end(), [&](int i) { return W.element(i).order() == 10; });
  s.check("centralizer of an A4 element: cyclic", cyclic);
}

void suite_lines(Suite& s, const VerifyOptions& opt) {
  for (auto& c : kLineCases) {
    LineConfig cfg = enumerate_lines(surface(c), opt.max_split);
    s.check(c.str() + " lines", 27, cfg.lines().size());
    bool regular = true;
    for (int l = 0; l < kLines; ++l) regular = regular && std::popcount(cfg.neighbours(l)) == 10;
    s.check(c.str() + " every line meets 10 others", regular);
    s.check(c.str() + " tritangent planes", 45, cfg.tritangents().size());
    bool table = true;
    for (int a = 0; a < kLines; ++a)
      for (int b = a + 1; b < kLines; ++b) {
        bool expect = pic_dot(label_class(a), label_class(b)) == 1;
        table = table && cfg.meets(cfg.marking()[a], cfg.marking()[b]) == expect;
      }
    s.check(c.str() + " marking matches intersection numbers", table);
  }
  LineConfig f2 = enumerate_lines(catalog_surface("fermat", make_field(2, 1)), opt.max_split);
  std::uint64_t fixed = 0;
  for (int l = 0; l < kLines; ++l) fixed += f2.frobenius()[l] == l;
  s.check("fermat/GF(2) lines over GF(2)", 3, fixed);
}

void suite_galois(Suite& s, const VerifyOptions& opt) {
  struct Row {
    Case c;
    int order;
    const char* label;
  };
  static const Row rows[] = {{{"fermat", "GF(4)"}, 1, "o1:Phi1^6"}, {{"s_1_2", "GF(2)"}, 2, "A1"}, {{"s_1_1", "GF(9)"}, 1, "o1:Phi1^6"}};
  for (auto& r : rows) {
    GaloisImage g = galois_image(enumerate_lines(surface(r.c), opt.max_split));
    s.check(r.c.str() + " Galois image order", static_cast<std::uint64_t>(r.order), static_cast<std::uint64_t>(g.order));
    s.check(r.c.str() + " Galois class", r.label, g.class_label);
  }
}

void suite_aut(Suite& s, const std::vector<AutCase>& cases, const VerifyOptions& opt) {
  for (auto& a : cases) {
    const AutReport& r = cached_aut(a.c, opt);
    s.check(a.c.str() + " |Aut|", a.order, r.order);
    s.check(a.c.str() + " group", a.group, r.matched_name.value_or(r.ambiguous ? "ambiguous" : "none"));
  }
}

void suite_singular(Suite& s) {
  const char* names[] = {"fermat", "clebsch", "s_1_1", "s_1_2"};
  const int primes[] = {2, 3, 5, 7};
  for (const char* n : names)
    for (int p : primes) {
      const Field& f = make_field(static_cast<std::uint64_t>(p), 1);
      SingularityReport r = singular_locus(catalog_surface(n, f));
      std::string actual = r.nonreduced ? "nonreduced" : r.points.empty() ? "smooth" : "singular";
      for (auto& pt : r.points) actual += " " + pt.point.str();
      std::string expected = "smooth";
      if (std::string(n) == "fermat" && p == 3) expected = "nonreduced";
      if (std::string(n) == "clebsch" && p == 5) expected = "singular [1:1:1:1]";
      if (std::string(n) == "s_1_1" && p == 2) expected = "singular [0:0:1:1]";
      if (std::string(n) == "s_1_2" && p == 3) expected = "singular [1:2:2:1]";
      s.check(std::string(n) + "/GF(" + std::to_string(p) + ")", expected, actual);
    }
}

void suite_isomorphism(Suite& s, const VerifyOptions& opt) {
  struct Row {
    const char* a;
    const char* b;
    const char* field;
    bool iso;
  };
  static const Row rows[] = {{"clebsch", "s_1_2", "GF(2)", true}, {"fermat", "s_1_2", "GF(2)", false},
                             {"fermat", "s_1_2", "GF(4)", true},  {"s_1_2", "clebsch", "GF(4)", true},
                             {"fermat", "clebsch", "GF(4)", true}, {"fermat", "s_1_2", "GF(5)", false},
                             {"fermat", "s_1_2", "GF(25)", true}};
  for (auto& r : rows) {
    const Field& f = parse_field(r.field);
    CubicForm a = catalog_surface(r.a, f), b = catalog_surface(r.b, f);
    auto w = isomorphism_test(a, b, opt.max_split);
    std::string name = std::string(r.a) + " vs " + r.b + " over " + r.field;
    s.check(name, r.iso ? "isomorphic" : "not isomorphic", w ? "isomorphic" : "not isomorphic");
    if (w) {
      s.check(name + " witness", check_witness(a, b, w->g).has_value());
      s.check(name + " inverse witness", check_witness(b, a, w->g.inverse()).has_value());
    }
  }
  const Field& f9 = make_field(3, 2);
  CubicForm s11 = catalog_surface("s_1_1", f9);
  for (const char* other : {"fermat", "clebsch", "s_1_2"}) {
    CubicForm o = catalog_surface(other, f9);
    std::string name = std::string("s_1_1 vs ") + other + " over GF(9)";
    if (!is_smooth(o)) {
      s.check(name, "other surface singular", "other surface singular");
      continue;
    }
    s.check(name, "not isomorphic", isomorphism_test(s11, o, opt.max_split) ? "isomorphic" : "not isomorphic");
  }
  auto self = isomorphism_test(s11, s11, opt.max_split);
  s.check("s_1_1/GF(9) reflexive", self.has_value());
}

void suite_paper_maps(Suite& s) {
  for (auto& id : paper_map_cases())
    for (auto& r : verify_paper_isomorphism(id))
      for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const MapStep& st = r.steps[i];
        std::string detail = st.ok ? "scalar " + st.source.field().format(st.scalar) : "source not carried to target";
        s.check(r.id + " over " + r.field + " step " + std::to_string(i + 1) + ": " + st.description, st.ok, detail);
      }
}

void suite_heisenberg(Suite& s) {
  const Field& f = make_field(3, 2);
  auto hs = heisenberg_generators(f);  // throws if the law or invariance fails
  s.check("elements", 27, hs.size());
  s.check("composition law over all pairs", true);
  std::set<Elt> c0;
  std::uint64_t order3 = 0, preserved = 0, identity = 0;
  bool abelian = true;
  CubicForm s11 = catalog_surface("s_1_1", f);
  for (auto& h : hs) {
    if (h.alpha == 0) c0.insert(h.c);
    if (h.g.is_identity()) ++identity;
    else order3 += h.g.pow(3).is_identity();
    preserved += preserves(s11, h.g);
    for (auto& k : hs) abelian = abelian && h.g * k.g == k.g * h.g;
  }
  Elt i = nth_root_of_unity(f, 4)->code();
  s.check("alpha = 0 gives c in {0, i, -i}", c0 == std::set<Elt>{0, i, f.neg(i)});
  s.check("identity only at (0, 0)", 1, identity);
  s.check("nonidentity elements of order 3", 26, order3);
  s.check("nonabelian", !abelian);
  s.check("each preserves s_1_1", 27, preserved);
  Collineation h = order8_element(f);
  s.check("diag(z^6, z, z^4, 1) preserves s_1_1", preserves(s11, h));
  const ReferenceGroup& g = reference_group("H3_Z8");
  s.check("group generated with the order 8 element", 216, g.elements.size());
}

bool is_group(const AutReport& r) {
  std::set<Collineation> set(r.elements.begin(), r.elements.end());
  if (set.size() != r.elements.size()) return false;
  std::vector<Perm> perms;
  for (auto& p : r.line_perms) perms.emplace_back(p.begin(), p.end());
  auto gens = generating_set(perms);
  std::vector<Collineation> cg;
  for (auto& g : gens)
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == g) cg.push_back(r.elements[i]);
  if (!set.count(Collineation::identity(r.elements.front().field()))) return false;
  for (auto& g : cg)
    for (auto& x : r.elements)
      if (!set.count(g * x)) return false;
  for (auto& x : r.elements)
    if (!set.count(x.inverse())) return false;
  return true;
}

void suite_properties(Suite& s, const VerifyOptions& opt) {
  std::vector<AutCase> all = kTheorem2;
  all.insert(all.end(), kCorollary1.begin(), kCorollary1.end());
  for (auto& a : all) {
    const AutReport& r = cached_aut(a.c, opt);
    s.check(a.c.str() + " closed under composition and inverse", is_group(r));
    s.check(a.c.str() + " |Aut| divides 51840", 51840 % r.order == 0);
    bool pres = std::all_of(r.elements.begin(), r.elements.end(), [&](const Collineation& g) { return preserves(r.surface, g); });
    s.check(a.c.str() + " every element preserves the form", pres);
    const WeylElement& fr = r.galois.generator;
    bool comm = std::all_of(r.weyl_image.begin(), r.weyl_image.end(), [&](const WeylElement& w) { return w * fr == fr * w; });
    s.check(a.c.str() + " Weyl image commutes with Galois image", comm);
  }

  // order-3 automorphisms over fields without cube roots of unity
  for (auto& c : {Case{"s_1_2", "GF(2)"}, Case{"s_1_2", "GF(5)"}, Case{"clebsch", "GF(11)"}}) {
    const AutReport& r = cached_aut(c, opt);
    std::uint64_t n3 = 0, bad = 0;
    for (auto& w : r.weyl_image)
      if (w.order() == 3) {
        ++n3;
        bad += classify(w) == "A2^3";
      }
    s.check(c.str() + " order 3 elements in A2^3 (of " + std::to_string(n3) + ")", 0, bad);
  }

  {
    const AutReport& r = cached_aut({"fermat", "GF(7)"}, opt);
    std::uint64_t n = 0, diag = 0;
    for (std::size_t i = 0; i < r.elements.size(); ++i)
      if (classify(r.weyl_image[i]) == "A2^3") {
        ++n;
        diag += r.elements[i].is_diagonal();
      }
    s.check("fermat/GF(7) A2^3 elements are diagonal", n, diag);
    s.check("fermat/GF(7) A2^3 elements present", n > 0);
  }

  {
    // diag(w, 1, 1, 1) on the Fermat surface over GF(4)
    const Field& f = make_field(2, 2);
    LineConfig c = enumerate_lines(catalog_surface("fermat", f), opt.max_split);
    Collineation d = Collineation::diagonal(f, {nth_root_of_unity(f, 3)->code(), 1, 1, 1});
    auto p = induced_line_permutation(c, d);
    s.check("fermat/GF(4) diag(w,1,1,1) permutes the lines", p.has_value());
    if (p) {
      WeylElement w = weyl_of(c, *p);
      s.check("fermat/GF(4) diag(w,1,1,1) class", "A2^3", classify(w));
      auto g = lift_line_permutation(c, w);
      s.check("fermat/GF(4) lift of its Weyl element", d.str(), g ? g->str() : "absent");
    }
  }

  {
    const Case cc{"clebsch", "GF(11)"};
    const AutReport& r = cached_aut(cc, opt);
    LineConfig c = enumerate_lines(surface(cc), opt.max_split);
    auto it = std::find_if(r.weyl_image.begin(), r.weyl_image.end(), [](const WeylElement& w) { return w.order() == 5; });
    s.check("clebsch/GF(11) has an order 5 automorphism", it != r.weyl_image.end());
    if (it != r.weyl_image.end()) {
      const LinePerm& g = r.line_perms[static_cast<std::size_t>(it - r.weyl_image.begin())];
      std::vector<int> fixed;
      for (int l = 0; l < kLines; ++l)
        if (g[l] == l) fixed.push_back(l);
      s.check("order 5: fixed lines", 2, fixed.size());
      s.check("order 5: fixed lines are skew", fixed.size() == 2 && !c.meets(fixed[0], fixed[1]));
      s.check("order 5: invariant skew quintuples", 3, find_skew_quintuples(c, g).size());
      s.check("order 5: invariant star quintuples", 2, find_stars(c, g).size());
    }
  }

  {
    // weights of diag(z^6, z, z^4, 1) on cubic monomials, as powers of z
    const Field& f = make_field(3, 2);
    Elt z = nth_root_of_unity(f, 8)->code();
    auto m = [](int a, int b, int c, int d) { return make_mono(a, b, c, d); };
    std::map<int, std::set<Mono>> expected{
        {0, {m(0, 0, 0, 3), m(2, 0, 1, 0), m(1, 2, 0, 0), m(0, 0, 2, 1)}},
        {1, {m(0, 1, 2, 0), m(0, 1, 0, 2)}},
        {2, {m(3, 0, 0, 0), m(0, 2, 0, 1), m(1, 0, 1, 1)}},
        {3, {m(0, 3, 0, 0), m(1, 1, 1, 0)}},
        {4, {m(0, 0, 3, 0), m(2, 0, 0, 1), m(0, 0, 1, 2)}},
        {5, {m(2, 1, 0, 0), m(0, 1, 1, 1)}},
        {6, {m(0, 2, 1, 0), m(1, 0, 2, 0), m(1, 0, 0, 2)}},
        {7, {m(1, 1, 0, 1)}},
    };
    // the stored matrix is rescaled, so exponents are taken relative to t^3
    std::map<int, std::set<Mono>> raw, actual;
    int shift = 0;
    for (auto& g : monomial_weights(order8_element(f))) {
      int k = 0;
      while (k < 8 && f.pow(z, static_cast<std::uint64_t>(k)) != g.weight) ++k;
      raw[k].insert(g.monomials.begin(), g.monomials.end());
      if (std::count(g.monomials.begin(), g.monomials.end(), m(0, 0, 0, 3))) shift = k;
    }
    for (auto& [k, ms] : raw) actual[(k - shift + 8) % 8] = ms;
    s.check("weights of the order 8 element on cubic monomials", expected == actual);
  }

  {
    std::uint64_t collisions = 0;
    auto& names = reference_names();
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        collisions += reference_group(names[i]).fingerprint == reference_group(names[j]).fingerprint;
    s.check("reference groups pairwise distinguishable", 0, collisions);
    const Fingerprint& psu = reference_group("PSU4_2").fingerprint;
    s.check("PSU4_2 order", 25920, psu.order);
    s.check("PSU4_2 perfect", psu.derived == psu.order);
    s.check("PSU4_2 centre", 1, psu.centre);
    s.check("Z3_2_D4 order", 72, reference_group("Z3_2_D4").fingerprint.order);
  }
}

using Runner = std::function<void(Suite&, const VerifyOptions&)>;

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> r{
      {"table2", [](Suite& s, const VerifyOptions&) { suite_table2(s); }},
      {"weyl", [](Suite& s, const VerifyOptions&) { suite_weyl(s); }},
      {"lines", suite_lines},
      {"galois", suite_galois},
      {"theorem2", [](Suite& s, const VerifyOptions& o) { suite_aut(s, kTheorem2, o); }},
      {"corollary1", [](Suite& s, const VerifyOptions& o) { suite_aut(s, kCorollary1, o); }},
      {"singular", [](Suite& s, const VerifyOptions&) { suite_singular(s); }},
      {"isomorphism", suite_isomorphism},
      {"prop1",
       [](Suite& s, const VerifyOptions& o) {
         suite_singular(s);
         suite_isomorphism(s, o);
       }},
      {"paper-maps", [](Suite& s, const VerifyOptions&) { suite_paper_maps(s); }},
      {"heisenberg", [](Suite& s, const VerifyOptions&) { suite_heisenberg(s); }},
      {"properties", suite_properties},
  };
  return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (auto& [k, v] : runners()) n.push_back(k);
    return n;
  }();
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  for (auto& [k, run] : runners()) {
    if (name == "all" ? k == "prop1" : k != name) continue;
    Suite s(k);
    auto t0 = std::chrono::steady_clock::now();
    run(s, opt);
    s.result().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(s.result()));
  }
  if (out.empty()) fail(ErrorKind::UnknownName, "unknown suite '" + name + "'");
  return out;
}

} // namespace symcubic
