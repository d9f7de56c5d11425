#pragma once
// Picard lattice Z^7 = <h, e1..e6>, the E6 root system and W(E6) acting on
// the 27 line labels, with conjugacy classes and Carter-style names.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "symcubic/group.hpp"
#include "symcubic/lines.hpp"

namespace symcubic {

using PicClass = std::array<int, 7>;  // (a; b1..b6) = a h + sum b_i e_i

int pic_dot(const PicClass& a, const PicClass& b);
PicClass canonical_class();  // K = -3h + sum e_i
PicClass label_class(int label);
int label_of_class(const PicClass& c);  // -1 if not a line class
PicClass pic_class_of_line(const LineConfig& c, int line);
// The 72 classes with K.a = 0 and a.a = -2.
const std::vector<PicClass>& root_system();
// e1-e2, ..., e5-e6, h-e1-e2-e3
const std::array<PicClass, 6>& simple_roots();

class WeylElement {
public:
  WeylElement();
  // p[label] = image label; must come from a lattice isometry.
  explicit WeylElement(const LinePerm& p) : perm_(p) {}
  static WeylElement reflection(const PicClass& root);

  const LinePerm& perm() const { return perm_; }
  int operator()(int label) const { return perm_[static_cast<std::size_t>(label)]; }
  WeylElement operator*(const WeylElement& o) const;  // o first
  WeylElement inverse() const;
  WeylElement pow(int e) const;
  int order() const;
  bool is_identity() const;
  int fixed_lines() const;
  // Column j is the image of the j-th basis vector (h, e1, ..., e6).
  std::array<std::array<int, 7>, 7> matrix() const;
  PicClass apply(const PicClass& c) const;
  // Images of E1..E6 and L12 (they determine the element), 5 bits each.
  std::uint64_t key() const;
  Perm as_perm() const { return Perm(perm_.begin(), perm_.end()); }
  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator<(const WeylElement& o) const { return perm_ < o.perm_; }

private:
  LinePerm perm_;
};

// Integer polynomial, lowest degree first.
using IntPoly = std::vector<std::int64_t>;
// Characteristic polynomial on the E6 lattice K^perp (degree 6).
IntPoly charpoly_e6(const WeylElement& w);
IntPoly cyclotomic(int m);
// "Phi1^2*Phi5" style product of cyclotomic factors.
std::string cyclotomic_str(const IntPoly& p);

struct ConjugacyClass {
  std::string label;
  int order;
  std::uint64_t size;
  std::uint64_t centralizer_order;
  std::string charpoly;
  int fixed_lines;
  int representative;  // element index
};

class WeylGroup {
public:
  static const WeylGroup& instance();

  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<WeylElement>& generators() const { return gens_; }
  int index_of(const WeylElement& w) const;  // -1 if w is not in the group
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_index(int element) const { return class_of_[static_cast<std::size_t>(element)]; }
  const ConjugacyClass& class_of(const WeylElement& w) const;
  const ConjugacyClass& class_named(const std::string& label) const;
  // Indices of elements commuting with every given element.
  std::vector<int> centralizer(std::span<const WeylElement> gens) const;

private:
  WeylGroup();
  std::vector<WeylElement> gens_;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

// Class label of w (Carter name for the named classes, otherwise
// "o<order>:<charpoly>" with a fixed-line suffix when needed).
const std::string& classify(const WeylElement& w);

// Label permutation m^-1 * g * m of a line permutation g under a marking.
WeylElement weyl_of(const LineConfig& c, const LinePerm& g);

} // namespace symcubic
