#pragma once
// Finite fields GF(p^k) and univariate polynomials over them.
//
// Elements are packed coefficient vectors: code = sum c_i p^i with c_0 the
// constant term.  Canonical ordering (used for every "smallest" choice)
// compares c_0 first, then c_1, ...; Field::key() maps a code to an integer
// whose natural order is that canonical order.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcubic/error.hpp"

namespace symcubic {

using Elt = std::uint64_t;

class Field {
public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t size() const { return q_; }
  // k+1 coefficients, low degree first, monic.  For k = 1 this is t.
  std::span<const std::uint64_t> modulus() const { return modulus_; }
  std::string name() const;

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt gen() const { return k_ > 1 ? p_ : 0; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;
  Elt frobenius(Elt a) const { return pow(a, p_); }
  // a^(p^r)
  Elt frobenius(Elt a, int r) const;

  Elt from_int(std::int64_t v) const;
  Elt from_coeffs(std::span<const std::uint64_t> c) const;
  std::vector<std::uint64_t> coeffs(Elt a) const;

  std::uint64_t key(Elt a) const;
  Elt from_key(std::uint64_t key) const;
  bool less(Elt a, Elt b) const { return key(a) < key(b); }

  // Smallest primitive element in canonical order.
  Elt primitive() const { return primitive_; }
  std::uint64_t order_of(Elt a) const;
  // Prime factors of q - 1.
  std::span<const std::uint64_t> unit_group_primes() const { return unit_primes_; }

  std::string format(Elt a) const;
  Elt parse(std::string_view text) const;

  bool has_tables() const { return !exp_.empty(); }

private:
  friend const Field& make_field(std::uint64_t p, int k);
  Field(std::uint64_t p, int k, std::vector<std::uint64_t> modulus);
  void build_tables();
  Elt mul_slow(Elt a, Elt b) const;
  Elt add_digits(Elt a, Elt b) const;

  std::uint64_t p_;
  int k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> unit_primes_;
  Elt primitive_ = 1;
  // Log tables for small extension fields.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::int64_t> zech_;
};

// Canonical, interned descriptor.  The returned reference lives for the
// lifetime of the process, so raw pointers to fields are always valid.
const Field& make_field(std::uint64_t p, int k);
// Parses "GF(9)" or "GF(3^2)".
const Field& parse_field(std::string_view text);
bool is_prime(std::uint64_t n);

class FieldElement {
public:
  FieldElement() = default;
  FieldElement(const Field& f, Elt v) : f_(&f), v_(v) {}
  static FieldElement from_int(const Field& f, std::int64_t v) { return {f, f.from_int(v)}; }

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  Elt code() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {*f_, f_->neg(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {*f_, f_->pow(v_, e)}; }
  FieldElement inv() const { return {*f_, f_->inv(v_)}; }
  FieldElement frobenius() const { return {*f_, f_->frobenius(v_)}; }
  FieldElement frobenius(int r) const { return {*f_, f_->frobenius(v_, r)}; }
  bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator<(const FieldElement& o) const;
  std::string str() const { return f_->format(v_); }

private:
  void check(const FieldElement& o) const;
  const Field* f_ = nullptr;
  Elt v_ = 0;
};

// Ring embedding GF(p^d) -> GF(p^m), d | m, sending the generator to the
// smallest root of the source modulus in the target.
class Embedding {
public:
  const Field& from() const { return *from_; }
  const Field& to() const { return *to_; }
  Elt operator()(Elt x) const;
  // Inverse on the image; nullopt if y is not in the image.
  std::optional<Elt> restrict(Elt y) const;

private:
  friend const Embedding& embedding(const Field& from, const Field& to);
  Embedding(const Field& from, const Field& to);
  const Field* from_;
  const Field* to_;
  std::vector<Elt> powers_;  // images of 1, g, ..., g^(d-1)
};

const Embedding& embedding(const Field& from, const Field& to);
FieldElement embed(const FieldElement& x, const Field& target);

// Primitive n-th root of unity, smallest in canonical order.
std::optional<FieldElement> nth_root_of_unity(const Field& f, std::uint64_t n);

// Univariate polynomial, coefficients low degree first, no trailing zeros.
struct Poly {
  const Field* f = nullptr;
  std::vector<Elt> c;

  Poly() = default;
  explicit Poly(const Field& field) : f(&field) {}
  Poly(const Field& field, std::vector<Elt> coeffs);
  static Poly constant(const Field& field, Elt v);
  static Poly x(const Field& field);  // the indeterminate

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Elt lead() const { return c.empty() ? 0 : c.back(); }
  Elt coeff(int i) const { return i < static_cast<int>(c.size()) ? c[i] : 0; }
  void trim();
  bool operator==(const Poly& o) const { return c == o.c; }
  std::string str(char var = 't') const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elt s);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(Poly a, Poly b);
Poly derivative(const Poly& a);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
Elt eval(const Poly& a, Elt x);
bool is_irreducible(const Poly& a);
// Monic irreducible factorization, factors sorted by (degree, canonical
// coefficient order), with multiplicities.
std::vector<std::pair<Poly, int>> factor(const Poly& a);
// Canonical comparison of monic polynomials: degree, then coefficients
// low degree first in canonical element order.
bool poly_less(const Poly& a, const Poly& b);

// All roots in the coefficient field, with multiplicity, in canonical order.
std::vector<FieldElement> poly_roots(const Poly& f);
// Distinct roots, canonical order (internal workhorse; any field size).
std::vector<Elt> distinct_roots(const Poly& f);

} // namespace symcubic
