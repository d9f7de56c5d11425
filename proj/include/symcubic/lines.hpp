#pragma once
// The 27 lines of a smooth cubic surface: enumeration over the splitting
// field, intersection graph, tritangent planes, Frobenius and marking.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcubic/cubic.hpp"
#include "symcubic/solve.hpp"

namespace symcubic {

constexpr int kLines = 27;
using LinePerm = std::array<std::uint8_t, kLines>;

struct Line {
  const Field* f = nullptr;
  std::array<Elt, 8> rref{};  // row-reduced 2x4 spanning matrix, row-major
  std::array<Elt, 6> plucker{};  // p01 p02 p03 p12 p13 p23, first nonzero 1

  static Line through(const ProjPoint& a, const ProjPoint& b);
  ProjPoint point(int row) const;
  bool contains(const ProjPoint& x) const;
  bool meets(const Line& o) const;
  bool operator==(const Line& o) const { return f == o.f && rref == o.rref; }
  bool operator<(const Line& o) const;
  // e.g. "x+y = z+t = 0" style pair of equations
  std::string equations() const;
  std::string str() const;
};

// Labels: 0..5 = E1..E6, 6..11 = Q1..Q6, 12..26 = L12, L13, ..., L56.
std::string label_name(int label);
int label_e(int i);  // i in 1..6
int label_q(int i);
int label_l(int i, int j);

class LineConfig {
public:
  const CubicForm& surface() const { return surface_; }
  const Field& base() const { return surface_.field(); }
  const Field& field() const { return *ext_; }
  int splitting_degree() const { return n_; }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(int i) const { return lines_[static_cast<std::size_t>(i)]; }
  // Degree over the base field of the smallest field containing the line.
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  bool meets(int a, int b) const { return (adj_[static_cast<std::size_t>(a)] >> b) & 1u; }
  std::uint32_t neighbours(int a) const { return adj_[static_cast<std::size_t>(a)]; }
  const std::vector<std::array<int, 3>>& tritangents() const { return tritangents_; }
  const LinePerm& frobenius() const { return frob_; }
  // marking()[label] = line index; label_of()[line] = label
  const LinePerm& marking() const { return marking_; }
  const LinePerm& label_of() const { return label_of_; }
  ProjPoint intersection(int a, int b) const;
  bool preserves_adjacency(const LinePerm& g) const;

private:
  friend LineConfig make_config(const CubicForm& f, const Field& ext, int n, std::vector<Line> lines);
  CubicForm surface_;
  const Field* ext_ = nullptr;
  int n_ = 0;
  std::vector<Line> lines_;
  std::vector<int> degrees_;
  std::array<std::uint32_t, kLines> adj_{};
  std::vector<std::array<int, 3>> tritangents_;
  LinePerm frob_{};
  LinePerm marking_{};
  LinePerm label_of_{};
};

// Assembles graph, tritangents, Frobenius and marking from 27 lines over ext.
LineConfig make_config(const CubicForm& f, const Field& ext, int n, std::vector<Line> lines);

// Scan of the surface points over ext in canonical order; at each point the
// lines through it are read off the tangent section.  First line found.
std::optional<Line> seed_line(const CubicForm& f, const Field& ext);

// Closure under "residual conic of a plane through a known line splits".
std::vector<Line> propagate_lines(const CubicForm& f, const Field& ext, const std::vector<Line>& seeds);

// All lines of the surface defined over ext, solved chart by chart on the
// Grassmannian (Groebner basis over the base field, roots over ext).
class LineSolver {
public:
  explicit LineSolver(const CubicForm& f);
  std::vector<Line> lines_over(const Field& ext) const;

private:
  struct Chart {
    int i, j;  // pivot columns
    std::vector<std::pair<int, int>> unknowns;  // (row, column)
    AffineSolver solver;
  };
  CubicForm f_;
  std::vector<Chart> charts_;
};

constexpr int kDefaultMaxSplit = 12;
// Minimal n <= max_split with all 27 lines over GF(q^n).
LineConfig enumerate_lines(const CubicForm& f, int max_split = kDefaultMaxSplit);

// g-invariant 5-sets inducing a 5-cycle ("star") in the intersection graph.
std::vector<std::array<int, 5>> find_stars(const LineConfig& c, const LinePerm& g);
// g-invariant 5-sets of pairwise skew lines.
std::vector<std::array<int, 5>> find_skew_quintuples(const LineConfig& c, const LinePerm& g);

} // namespace symcubic
