#pragma once
// Cubic forms in x, y, z, t: catalog, parsing, collineation action,
// singular locus, diagonal weights and plane sections.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcubic/mpoly.hpp"
#include "symcubic/projlin.hpp"

namespace symcubic {

constexpr int kCubicMonomials = 20;
// x^3, x^2y, x^2z, x^2t, xy^2, ..., t^3 (descending lex).
const std::array<Mono, kCubicMonomials>& cubic_monomials();
int cubic_monomial_index(Mono m);

class CubicForm {
public:
  using Coeffs = std::array<Elt, kCubicMonomials>;

  CubicForm() = default;
  CubicForm(const Field& f, const Coeffs& c) : f_(&f), c_(c) {}
  // Throws InvalidArgument unless p is a homogeneous cubic.
  static CubicForm from_mpoly(const MPoly& p);

  const Field& field() const { return *f_; }
  const Coeffs& coeffs() const { return c_; }
  Elt coeff(Mono m) const { return c_[cubic_monomial_index(m)]; }
  bool is_zero() const;
  MPoly to_mpoly() const;
  MPoly partial(int v) const { return to_mpoly().derivative(v); }
  // First nonzero coefficient scaled to 1; the removed scalar is returned.
  std::pair<CubicForm, Elt> normalized() const;
  bool proportional_to(const CubicForm& o) const;
  CubicForm embedded(const Field& target) const;
  Elt eval(std::span<const Elt> pt) const;
  bool operator==(const CubicForm& o) const { return f_ == o.f_ && c_ == o.c_; }
  std::string str() const { return to_mpoly().str(); }

private:
  const Field* f_ = nullptr;
  Coeffs c_{};
};

CubicForm catalog_surface(std::string_view name, const Field& f);
const std::vector<std::string>& catalog_names();
// Form syntax of MPoly, with catalog names usable as subexpressions.
CubicForm parse_cubic(const Field& f, std::string_view text);

struct PointValues {
  Elt value;
  std::array<Elt, 4> partials;
};
// The point may live in an extension of the form's field.
PointValues eval_and_partials(const CubicForm& f, const ProjPoint& x);

// f(Mx) for an arbitrary 4x4 matrix (row-major), all in f's field.
CubicForm compose(const CubicForm& f, const std::array<Elt, 16>& m);
// f composed with g^-1, normalized, and the normalization scalar.
std::pair<CubicForm, Elt> apply_collineation(const CubicForm& f, const Collineation& g);
// g maps the surface f = 0 to itself.
bool preserves(const CubicForm& f, const Collineation& g);

struct SingularPoint {
  int degree;  // residue degree over the base field
  ProjPoint point;  // smallest point of its Frobenius orbit
};

struct SingularityReport {
  bool nonreduced = false;
  std::vector<SingularPoint> points;
  int search_bound = 0;
  bool smooth() const { return !nonreduced && points.empty(); }
};

constexpr int kDefaultSingularDepth = 6;
SingularityReport singular_locus(const CubicForm& f, int depth = kDefaultSingularDepth);
// Smooth over the algebraic closure (no degree cap involved).
bool is_smooth(const CubicForm& f);

// Linear form l (first nonzero coefficient 1) with l^2 | p, p homogeneous
// of degree 3 in variables 0..nvars-1.
std::optional<std::array<Elt, 4>> repeated_linear_factor(const MPoly& p, int nvars);

struct WeightGroup {
  Elt weight;
  std::vector<Mono> monomials;
};
// Scalar by which the substitution x_i -> d_i x_i multiplies each monomial.
std::vector<WeightGroup> monomial_weights(const Collineation& g);

enum class PlaneSectionClass {
  smooth,
  nodal_irreducible,
  cuspidal_irreducible,
  conic_plus_line,
  three_lines,
  line_with_double_line,
  triple_line,
  other_reducible,
};
const char* to_string(PlaneSectionClass c);
PlaneSectionClass classify_plane_section(const CubicForm& f, const std::array<Elt, 4>& plane);

} // namespace symcubic
