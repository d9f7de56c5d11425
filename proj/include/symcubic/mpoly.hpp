#pragma once
// Sparse polynomials in the four variables x, y, z, t.

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "symcubic/gf.hpp"

namespace symcubic {

// Exponent vector packed one byte per variable, x in the top byte, so that
// integer order on Mono is lexicographic order with x > y > z > t.
using Mono = std::uint32_t;

constexpr Mono make_mono(int ex, int ey, int ez, int et) {
  return (Mono(ex) << 24) | (Mono(ey) << 16) | (Mono(ez) << 8) | Mono(et);
}
constexpr int mono_exp(Mono m, int var) { return static_cast<int>((m >> (8 * (3 - var))) & 0xff); }
constexpr int mono_degree(Mono m) { return mono_exp(m, 0) + mono_exp(m, 1) + mono_exp(m, 2) + mono_exp(m, 3); }
constexpr Mono mono_var(int var) { return Mono(1) << (8 * (3 - var)); }
bool mono_divides(Mono a, Mono b);
Mono mono_lcm(Mono a, Mono b);
std::string mono_str(Mono m);

class MPoly {
public:
  using Terms = std::map<Mono, Elt, std::greater<Mono>>;

  MPoly() = default;
  explicit MPoly(const Field& f) : f_(&f) {}
  static MPoly constant(const Field& f, Elt c);
  static MPoly var(const Field& f, int v);
  static MPoly term(const Field& f, Mono m, Elt c);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  int total_degree() const;
  int degree_in(int v) const;
  bool is_homogeneous(int d) const;
  // Smallest variable index occurring, or 4 for constants.
  int leading_var() const;
  Mono lead_mono() const { return terms_.begin()->first; }
  Elt lead_coeff() const { return terms_.begin()->second; }
  Elt coeff(Mono m) const;

  void add_term(Mono m, Elt c);
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scaled(Elt s) const;
  MPoly shifted(Mono m, Elt c) const;  // multiply by c * m
  MPoly pow(unsigned e) const;
  MPoly monic() const;
  MPoly derivative(int v) const;
  MPoly substitute(int v, const MPoly& value) const;
  Elt eval(std::span<const Elt> pt) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  std::string str() const;

private:
  const Field* f_ = nullptr;
  Terms terms_;
};

// Value at a point whose coordinates live in an extension (via emb).
Elt eval_embedded(const MPoly& p, const Embedding& emb, std::span<const Elt> pt);

// Expression parser: + - * ^, parentheses, integers, x y z t, and g for the
// field generator.  Unknown identifiers go to resolve (may return nullopt).
using NameResolver = std::function<std::optional<MPoly>(std::string_view)>;
MPoly parse_polynomial(const Field& f, std::string_view text, const NameResolver& resolve = {});

} // namespace symcubic
