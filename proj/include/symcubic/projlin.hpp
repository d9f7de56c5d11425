#pragma once
// Points and collineations of P^3, frames, rational canonical forms.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symcubic/linalg.hpp"

namespace symcubic {

struct ProjPoint {
  const Field* f = nullptr;
  std::array<Elt, 4> x{};

  // Scales so that the first nonzero coordinate is 1.
  static ProjPoint make(const Field& field, std::array<Elt, 4> coords);
  bool operator==(const ProjPoint& o) const { return f == o.f && x == o.x; }
  bool operator<(const ProjPoint& o) const;
  std::string str() const;
};

class Collineation {
public:
  Collineation() = default;
  // Normalizes; throws InvalidArgument for a singular matrix.
  static Collineation make(const Field& f, const std::array<Elt, 16>& m);
  static Collineation from_matrix(const Matrix& m);
  static Collineation identity(const Field& f);
  static Collineation diagonal(const Field& f, std::array<Elt, 4> d);
  // Coordinate permutation sending e_i to e_perm[i].
  static Collineation permutation(const Field& f, std::array<int, 4> perm);

  const Field& field() const { return *f_; }
  const std::array<Elt, 16>& entries() const { return m_; }
  Elt at(int i, int j) const { return m_[4 * i + j]; }
  Matrix matrix() const;
  Collineation operator*(const Collineation& o) const;  // composition, o first
  Collineation inverse() const;
  Collineation pow(unsigned e) const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool operator==(const Collineation& o) const { return f_ == o.f_ && m_ == o.m_; }
  bool operator<(const Collineation& o) const;
  std::string str() const;

private:
  const Field* f_ = nullptr;
  std::array<Elt, 16> m_{};
};

struct CollineationHash {
  std::size_t operator()(const Collineation& c) const;
};

ProjPoint act_on_point(const Collineation& g, const ProjPoint& p);

// Unique collineation with src[i] -> dst[i]; nullopt if dst is not a frame.
// Throws DegenerateFrame if src is not a frame.
std::optional<Collineation> frame_solve(std::span<const ProjPoint, 5> src, std::span<const ProjPoint, 5> dst);

struct RcfBlock {
  Poly poly;  // monic irreducible
  int exponent;
  bool operator==(const RcfBlock& o) const { return poly == o.poly && exponent == o.exponent; }
};
// Elementary divisors of tI - A, sorted by (degree, coefficients, exponent).
using RationalCanonicalForm = std::vector<RcfBlock>;

RationalCanonicalForm rcf(const Matrix& a);
std::string rcf_str(const RationalCanonicalForm& r);

// C with C A C^-1 = lambda B for order-3 elements, lambda fixed by the cube
// and determinant scalars of A and B.  nullopt if not conjugate.
std::optional<Collineation> pgl_conjugate_order3(const Collineation& a, const Collineation& b);

} // namespace symcubic
