#include "symcubic/report.hpp"

namespace symcubic {

const char* const kVersion = "0.1.0";

Json to_json(const Collineation& g) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json r = Json::array();
    for (int j = 0; j < 4; ++j) r.push_back(g.field().format(g.at(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const Fingerprint& fp) {
  Json hist = Json::object();
  for (auto& [o, c] : fp.element_orders) hist[std::to_string(o)] = c;
  return {{"order", fp.order}, {"element_orders", hist}, {"centre", fp.centre}, {"derived", fp.derived}, {"abelianization", fp.abelianization}};
}

Json to_json(const GaloisImage& g) {
  std::vector<std::string> names;
  for (int l = 0; l < kLines; ++l) names.push_back(label_name(g.generator(l)));
  return {{"order", g.order}, {"class", g.class_label}, {"generator", names}};
}

Json field_info(const Field& f) {
  auto root = [&](std::uint64_t n) -> Json {
    if (n % f.p() == 0) return nullptr;
    auto r = nth_root_of_unity(f, n);
    return r ? Json(r->str()) : Json(nullptr);
  };
  Json mod = Json::array();
  for (auto c : f.modulus()) mod.push_back(c);
  return {{"field", f.name()},
          {"p", f.p()},
          {"k", f.k()},
          {"q", f.size()},
          {"modulus", mod},
          {"primitive", f.format(f.primitive())},
          {"cube_root_of_unity", root(3)},
          {"fourth_root_of_unity", root(4)},
          {"eighth_root_of_unity", root(8)}};
}

Json singular_report(const CubicForm& f, int depth) {
  SingularityReport r = singular_locus(f, depth);
  Json pts = Json::array();
  for (auto& p : r.points) pts.push_back({{"point", p.point.str()}, {"degree", p.degree}});
  return {{"surface", f.str()},
          {"field", f.field().name()},
          {"smooth", r.smooth()},
          {"nonreduced", r.nonreduced},
          {"points", pts},
          {"search_bound", r.search_bound}};
}

Json lines_report(const LineConfig& c) {
  Json lines = Json::array();
  for (int l = 0; l < kLines; ++l) {
    lines.push_back({{"label", label_name(c.label_of()[l])},
                     {"equations", c.line(l).equations()},
                     {"degree", c.degree(l)},
                     {"frobenius", label_name(c.label_of()[c.frobenius()[l]])}});
  }
  int rational = 0;
  for (int l = 0; l < kLines; ++l) rational += c.degree(l) == 1;
  return {{"surface", c.surface().str()},
          {"field", c.base().name()},
          {"splitting_field", c.field().name()},
          {"splitting_degree", c.splitting_degree()},
          {"lines_over_base", rational},
          {"tritangent_planes", c.tritangents().size()},
          {"lines", lines}};
}

Json galois_report(const LineConfig& c) {
  Json j = to_json(galois_image(c));
  j["splitting_degree"] = c.splitting_degree();
  return j;
}

Json aut_report(const AutReport& r) {
  Json els = Json::array();
  for (std::size_t i = 0; i < r.elements.size(); ++i)
    els.push_back({{"matrix", to_json(r.elements[i])}, {"order", r.weyl_image[i].order()}, {"class", classify(r.weyl_image[i])}});
  Json classes = Json::object();
  std::map<std::string, int> counts;
  for (auto& w : r.weyl_image) ++counts[classify(w)];
  for (auto& [k, v] : counts) classes[k] = v;
  return {{"surface", r.surface.str()},
          {"field", r.surface.field().name()},
          {"splitting_degree", r.splitting_degree},
          {"galois", to_json(r.galois)},
          {"order", r.order},
          {"candidates", r.candidates},
          {"matched_name", r.matched_name ? Json(*r.matched_name) : Json(nullptr)},
          {"ambiguous", r.ambiguous},
          {"fingerprint", to_json(r.fingerprint)},
          {"weyl_classes", classes},
          {"elements", els}};
}

Json weyl_table() {
  const WeylGroup& W = WeylGroup::instance();
  Json rows = Json::array();
  for (auto& c : W.classes())
    rows.push_back({{"label", c.label},
                    {"order", c.order},
                    {"size", c.size},
                    {"centralizer_order", c.centralizer_order},
                    {"charpoly", c.charpoly},
                    {"fixed_lines", c.fixed_lines}});
  return {{"group_order", W.size()}, {"classes", rows}};
}

Json isom_report(const std::optional<IsoWitness>& w, int splitting1, int splitting2) {
  Json j = {{"isomorphic", w.has_value()}, {"splitting_degrees", {splitting1, splitting2}}};
  if (w) {
    j["source"] = w->source.str();
    j["target"] = w->target.str();
    j["witness"] = to_json(w->g);
    j["scalar"] = w->source.field().format(w->scalar);
  }
  return j;
}

Json verify_report(const std::vector<SuiteResult>& suites) {
  Json out = Json::array();
  bool all = true;
  for (auto& s : suites) {
    Json checks = Json::array();
    for (auto& c : s.checks) checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
    out.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"checks", checks}});
    all = all && s.passed();
  }
  return {{"passed", all}, {"suites", out}};
}

} // namespace symcubic
