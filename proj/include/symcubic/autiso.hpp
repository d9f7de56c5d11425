#pragma once
// Automorphism groups of cubic surfaces over GF(q) as collineations, the
// Galois image, reference groups, isomorphism search and the explicit maps
// between the named surfaces.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcubic/cubic.hpp"
#include "symcubic/group.hpp"
#include "symcubic/lines.hpp"
#include "symcubic/picweyl.hpp"

namespace symcubic {

struct GaloisImage {
  WeylElement generator;
  int order = 1;
  std::string class_label;
};

GaloisImage galois_image(const LineConfig& c);

// Line permutation induced by a collineation over the base field, or
// nullopt if g does not map the 27 lines to themselves.
std::optional<LinePerm> induced_line_permutation(const LineConfig& c, const Collineation& g);

// The collineation over the base field realising w (a permutation of
// labels), if one exists.
std::optional<Collineation> lift_line_permutation(const LineConfig& c, const WeylElement& w);

struct AutReport {
  CubicForm surface;
  int splitting_degree = 1;
  GaloisImage galois;
  std::vector<Collineation> elements;  // sorted
  std::vector<LinePerm> line_perms;  // line_perms[i] induced by elements[i]
  std::vector<WeylElement> weyl_image;
  std::uint64_t order = 0;
  std::uint64_t candidates = 0;  // Weyl elements that passed the pre-filter
  Fingerprint fingerprint;
  std::optional<std::string> matched_name;
  bool ambiguous = false;
};

AutReport automorphism_group(const CubicForm& f, int max_split = kDefaultMaxSplit, int jobs = 1);

struct ReferenceGroup {
  std::string name;
  std::string description;
  std::vector<Perm> elements;
  Fingerprint fingerprint;
};

const std::vector<std::string>& reference_names();
// Built on first use and cached.
const ReferenceGroup& reference_group(const std::string& name);
// Names of reference groups with this fingerprint.
std::vector<std::string> match_reference(const Fingerprint& fp);

// Permutation of the points of P^3(GF(q)) (in canonical order).
Perm point_permutation(const Collineation& g);

struct HeisenbergElement {
  Elt alpha;
  Elt c;
  Collineation g;
};

// The 27 solutions (alpha, c), alpha^9 = alpha, c^3 + c = alpha^4, sorted.
std::vector<HeisenbergElement> heisenberg_generators(const Field& f);
Collineation heisenberg_matrix(const Field& f, Elt alpha, Elt c);
// diag(z^6, z, z^4, 1), z the smallest primitive 8th root of unity.
Collineation order8_element(const Field& f);

struct IsoWitness {
  CubicForm source;
  CubicForm target;
  Collineation g;  // source composed with g^-1 = scalar * target
  Elt scalar;
};

std::optional<IsoWitness> isomorphism_test(const CubicForm& f1, const CubicForm& f2, int max_split = kDefaultMaxSplit);
// Checks that g carries source to target up to a scalar.
std::optional<IsoWitness> check_witness(const CubicForm& source, const CubicForm& target, const Collineation& g);

struct MapStep {
  std::string description;
  CubicForm source;
  CubicForm target;
  Collineation g;
  bool ok = false;
  Elt scalar = 0;
};

struct PaperMapResult {
  std::string id;
  std::string field;
  std::vector<MapStep> steps;
  bool ok = false;
};

const std::vector<std::string>& paper_map_cases();
// One result per field the case is checked over.
std::vector<PaperMapResult> verify_paper_isomorphism(const std::string& id);

} // namespace symcubic
