#include "symcubic/lines.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "symcubic/solve.hpp"

namespace symcubic {

namespace {

std::array<Elt, 6> plucker_of(const Field& f, std::span<const Elt> u, std::span<const Elt> v) {
  static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::array<Elt, 6> p{};
  for (int n = 0; n < 6; ++n) {
    int i = pairs[n][0], j = pairs[n][1];
    p[n] = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
  }
  int lead = 0;
  while (lead < 6 && p[lead] == 0) ++lead;
  if (lead == 6) fail(ErrorKind::InvalidArgument, "points do not span a line");
  Elt inv = f.inv(p[lead]);
  for (auto& x : p) x = f.mul(x, inv);
  return p;
}

Line line_from_rows(const Field& f, std::span<const Elt> u, std::span<const Elt> v) {
  Matrix m(f, 2, 4);
  for (int c = 0; c < 4; ++c) {
    m.at(0, c) = u[c];
    m.at(1, c) = v[c];
  }
  if (rref(m) != 2) fail(ErrorKind::InvalidArgument, "points do not span a line");
  Line l;
  l.f = &f;
  std::copy(m.a.begin(), m.a.end(), l.rref.begin());
  l.plucker = plucker_of(f, std::span<const Elt>(l.rref.data(), 4), std::span<const Elt>(l.rref.data() + 4, 4));
  return l;
}

std::string linear_form_str(const Field& f, std::span<const Elt> c) {
  MPoly p(f);
  for (int v = 0; v < 4; ++v) p = p + MPoly::var(f, v).scaled(c[v]);
  return p.str();
}

// Roots (a:b) of a binary form sum c[e] a^e b^(deg-e); (1:0) first, then
// (x:1) in canonical order.  nullopt when the form vanishes identically.
std::optional<std::vector<std::array<Elt, 2>>> binary_roots(const Field& f, const std::vector<Elt>& c) {
  if (std::all_of(c.begin(), c.end(), [](Elt v) { return v == 0; })) return std::nullopt;
  std::vector<std::array<Elt, 2>> out;
  if (c.back() == 0) out.push_back({1, 0});
  Poly g(f, c);
  if (g.deg() >= 1)
    for (Elt r : distinct_roots(g)) out.push_back({r, 1});
  return out;
}

Elt binary_eval(const Field& f, const std::vector<Elt>& c, const std::array<Elt, 2>& ab) {
  Elt s = 0;
  int deg = static_cast<int>(c.size()) - 1;
  for (int e = 0; e <= deg; ++e)
    if (c[e]) s = f.add(s, f.mul(c[e], f.mul(f.pow(ab[0], e), f.pow(ab[1], deg - e))));
  return s;
}

std::array<Elt, 4> combine(const Field& f, std::initializer_list<std::pair<Elt, const Elt*>> terms) {
  std::array<Elt, 4> r{};
  for (auto& [s, v] : terms)
    for (int i = 0; i < 4; ++i) r[i] = f.add(r[i], f.mul(s, v[i]));
  return r;
}

// Two standard basis vectors completing the given independent vectors.
std::vector<int> complete_basis(const Field& f, const std::vector<std::array<Elt, 4>>& vs, int dim) {
  int need = dim - static_cast<int>(vs.size());
  std::vector<int> best;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(pick.size()) == need) {
      Matrix m(f, dim, dim);
      int r = 0;
      for (auto& v : vs) {
        for (int c = 0; c < dim; ++c) m.at(r, c) = v[c];
        ++r;
      }
      for (int e : pick) m.at(r++, e) = 1;
      if (rank(m) == dim) {
        best = pick;
        return true;
      }
      return false;
    }
    for (int e = start; e < dim; ++e) {
      pick.push_back(e);
      if (self(self, e + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) fail(ErrorKind::InvalidArgument, "vectors are dependent");
  return best;
}

// Orbit size of a line's canonical entries under x -> x^q.
int line_degree(const Line& l, int base_k) {
  const Field& E = *l.f;
  std::array<Elt, 8> cur = l.rref;
  int n = 0;
  do {
    for (auto& x : cur) x = E.frobenius(x, base_k);
    ++n;
  } while (cur != l.rref);
  return n;
}

std::array<int, 7> pic_class(int label) {
  std::array<int, 7> c{};
  if (label < 6) {
    c[1 + label] = 1;
  } else if (label < 12) {
    int i = label - 6;
    c[0] = 2;
    for (int j = 0; j < 6; ++j)
      if (j != i) c[1 + j] = -1;
  } else {
    int n = label - 12;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (n-- == 0) {
          c[0] = 1;
          c[1 + i] = -1;
          c[1 + j] = -1;
        }
  }
  return c;
}

int pic_dot(const std::array<int, 7>& a, const std::array<int, 7>& b) {
  int s = a[0] * b[0];
  for (int i = 1; i < 7; ++i) s -= a[i] * b[i];
  return s;
}

} // namespace

// ------------------------------------------------------------------- Line

Line Line::through(const ProjPoint& a, const ProjPoint& b) {
  if (a.f != b.f) fail(ErrorKind::FieldMismatch, "points over different fields");
  return line_from_rows(*a.f, a.x, b.x);
}

ProjPoint Line::point(int row) const {
  std::array<Elt, 4> c{};
  std::copy_n(rref.begin() + 4 * row, 4, c.begin());
  return ProjPoint::make(*f, c);
}

bool Line::contains(const ProjPoint& x) const {
  Matrix m(*f, 3, 4);
  for (int c = 0; c < 4; ++c) {
    m.at(0, c) = rref[c];
    m.at(1, c) = rref[4 + c];
    m.at(2, c) = x.x[c];
  }
  return rank(m) == 2;
}

bool Line::meets(const Line& o) const {
  const Field& F = *f;
  const auto& p = plucker;
  const auto& q = o.plucker;
  Elt s = F.mul(p[0], q[5]);
  s = F.sub(s, F.mul(p[1], q[4]));
  s = F.add(s, F.mul(p[2], q[3]));
  s = F.add(s, F.mul(p[3], q[2]));
  s = F.sub(s, F.mul(p[4], q[1]));
  s = F.add(s, F.mul(p[5], q[0]));
  return s == 0;
}

bool Line::operator<(const Line& o) const {
  for (int i = 0; i < 6; ++i)
    if (plucker[i] != o.plucker[i]) return f->key(plucker[i]) < f->key(o.plucker[i]);
  return false;
}

std::string Line::equations() const {
  Matrix m(*f, 2, 4);
  std::copy(rref.begin(), rref.end(), m.a.begin());
  auto k = kernel(m);
  Matrix eq(*f, 2, 4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) eq.at(r, c) = k[r][c];
  symcubic::rref(eq);
  return linear_form_str(*f, std::span<const Elt>(eq.a.data(), 4)) + " = " +
         linear_form_str(*f, std::span<const Elt>(eq.a.data() + 4, 4)) + " = 0";
}

std::string Line::str() const {
  std::string s = "(";
  for (int i = 0; i < 6; ++i) {
    if (i) s += ", ";
    s += f->format(plucker[i]);
  }
  return s + ")";
}

// ----------------------------------------------------------------- labels

std::string label_name(int label) {
  if (label < 0 || label >= kLines) fail(ErrorKind::InvalidArgument, "label out of range");
  if (label < 6) return "E" + std::to_string(label + 1);
  if (label < 12) return "Q" + std::to_string(label - 5);
  int n = label - 12;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if (n-- == 0) return "L" + std::to_string(i) + std::to_string(j);
  return {};
}

int label_e(int i) { return i - 1; }
int label_q(int i) { return 5 + i; }
int label_l(int i, int j) {
  if (i > j) std::swap(i, j);
  int n = 12;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      if (a == i && b == j) return n;
      ++n;
    }
  fail(ErrorKind::InvalidArgument, "bad L index pair");
}

// ------------------------------------------------------------ LineConfig

ProjPoint LineConfig::intersection(int a, int b) const {
  const Line& l1 = line(a);
  const Line& l2 = line(b);
  const Field& E = *ext_;
  Matrix m(E, 4, 4);
  for (int r = 0; r < 4; ++r) {
    m.at(r, 0) = l1.rref[r];
    m.at(r, 1) = l1.rref[4 + r];
    m.at(r, 2) = l2.rref[r];
    m.at(r, 3) = l2.rref[4 + r];
  }
  auto k = kernel(m);
  if (k.size() != 1) fail(ErrorKind::InvalidArgument, "lines do not meet in a point");
  return ProjPoint::make(E, combine(E, {{k[0][0], l1.rref.data()}, {k[0][1], l1.rref.data() + 4}}));
}

bool LineConfig::preserves_adjacency(const LinePerm& g) const {
  std::uint32_t seen = 0;
  for (int a = 0; a < kLines; ++a) seen |= 1u << g[a];
  if (seen != (1u << kLines) - 1) return false;
  for (int a = 0; a < kLines; ++a)
    for (int b = a + 1; b < kLines; ++b)
      if (meets(a, b) != meets(g[a], g[b])) return false;
  return true;
}

LineConfig make_config(const CubicForm& f, const Field& ext, int n, std::vector<Line> lines) {
  if (lines.size() != kLines)
    fail(ErrorKind::ConfigIncomplete, "expected 27 lines, have " + std::to_string(lines.size()));
  std::sort(lines.begin(), lines.end());
  LineConfig c;
  c.surface_ = f;
  c.ext_ = &ext;
  c.n_ = n;
  c.lines_ = std::move(lines);
  for (auto& l : c.lines_) c.degrees_.push_back(line_degree(l, f.field().k()));

  for (int a = 0; a < kLines; ++a)
    for (int b = a + 1; b < kLines; ++b)
      if (c.lines_[a].meets(c.lines_[b])) {
        c.adj_[a] |= 1u << b;
        c.adj_[b] |= 1u << a;
      }
  for (int a = 0; a < kLines; ++a)
    if (std::popcount(c.adj_[a]) != 10)
      fail(ErrorKind::ConfigIncomplete, "line " + std::to_string(a) + " meets " + std::to_string(std::popcount(c.adj_[a])) + " lines");

  for (int a = 0; a < kLines; ++a)
    for (int b = a + 1; b < kLines; ++b) {
      if (!c.meets(a, b)) continue;
      for (int d = b + 1; d < kLines; ++d) {
        if (!c.meets(a, d) || !c.meets(b, d)) continue;
        Matrix m(ext, 6, 4);
        int r = 0;
        for (int x : {a, b, d})
          for (int row = 0; row < 2; ++row, ++r)
            for (int col = 0; col < 4; ++col) m.at(r, col) = c.lines_[x].rref[4 * row + col];
        if (rank(m) == 3) c.tritangents_.push_back({a, b, d});
      }
    }
  if (c.tritangents_.size() != 45)
    fail(ErrorKind::ConfigIncomplete, "found " + std::to_string(c.tritangents_.size()) + " tritangent planes");

  for (int a = 0; a < kLines; ++a) {
    Line img = c.lines_[a];
    for (auto& x : img.rref) x = ext.frobenius(x, f.field().k());
    for (auto& x : img.plucker) x = ext.frobenius(x, f.field().k());
    auto it = std::find(c.lines_.begin(), c.lines_.end(), img);
    if (it == c.lines_.end()) fail(ErrorKind::ConfigIncomplete, "line set not Frobenius-stable");
    c.frob_[a] = static_cast<std::uint8_t>(it - c.lines_.begin());
  }

  // lexicographically first six pairwise skew lines
  std::vector<int> sixer;
  auto rec = [&](auto&& self, int start) -> bool {
    if (sixer.size() == 6) return true;
    for (int a = start; a < kLines; ++a) {
      bool ok = std::none_of(sixer.begin(), sixer.end(), [&](int b) { return c.meets(a, b); });
      if (!ok) continue;
      sixer.push_back(a);
      if (self(self, a + 1)) return true;
      sixer.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) fail(ErrorKind::MarkingInconsistent, "no six pairwise skew lines");
  auto unique = [&](auto pred, const std::string& what) {
    int found = -1;
    for (int a = 0; a < kLines; ++a)
      if (pred(a)) {
        if (found >= 0) fail(ErrorKind::MarkingInconsistent, what + " is not unique");
        found = a;
      }
    if (found < 0) fail(ErrorKind::MarkingInconsistent, what + " not found");
    return found;
  };
  for (int i = 0; i < 6; ++i) c.marking_[label_e(i + 1)] = static_cast<std::uint8_t>(sixer[i]);
  for (int i = 0; i < 6; ++i) {
    c.marking_[label_q(i + 1)] = static_cast<std::uint8_t>(unique(
        [&](int a) {
          for (int j = 0; j < 6; ++j)
            if (c.meets(a, sixer[j]) != (j != i)) return false;
          return true;
        },
        "Q" + std::to_string(i + 1)));
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      int ei = c.marking_[label_e(i)], ej = c.marking_[label_e(j)];
      int qi = c.marking_[label_q(i)], qj = c.marking_[label_q(j)];
      c.marking_[label_l(i, j)] = static_cast<std::uint8_t>(unique(
          [&](int a) { return c.meets(a, ei) && c.meets(a, ej) && c.meets(a, qi) && c.meets(a, qj); },
          label_name(label_l(i, j))));
    }
  std::uint32_t used = 0;
  for (int l = 0; l < kLines; ++l) {
    used |= 1u << c.marking_[l];
    c.label_of_[c.marking_[l]] = static_cast<std::uint8_t>(l);
  }
  if (used != (1u << kLines) - 1) fail(ErrorKind::MarkingInconsistent, "labels are not a bijection");
  for (int x = 0; x < kLines; ++x)
    for (int y = 0; y < kLines; ++y) {
      if (x == y) continue;
      int expected = pic_dot(pic_class(x), pic_class(y));
      if (expected != (c.meets(c.marking_[x], c.marking_[y]) ? 1 : 0))
        fail(ErrorKind::MarkingInconsistent, label_name(x) + " . " + label_name(y) + " disagrees with the graph");
    }
  return c;
}

// ---------------------------------------------------------------- seeding

namespace {

// Lines of the surface through P (a point of S over E).
std::vector<Line> lines_through(const CubicForm& fe, const ProjPoint& P) {
  const Field& E = fe.field();
  PointValues pv = eval_and_partials(fe, P);
  Matrix grad(E, 1, 4);
  for (int i = 0; i < 4; ++i) grad.at(0, i) = pv.partials[i];
  if (rank(grad) == 0) fail(ErrorKind::SurfaceSingular, "singular point " + P.str());
  auto t = kernel(grad);
  std::array<Elt, 4> v1{}, v2{};
  bool found = false;
  for (std::size_t i = 0; i < t.size() && !found; ++i)
    for (std::size_t j = i + 1; j < t.size() && !found; ++j) {
      Matrix m(E, 3, 4);
      for (int c = 0; c < 4; ++c) {
        m.at(0, c) = P.x[c];
        m.at(1, c) = t[i][c];
        m.at(2, c) = t[j][c];
      }
      if (rank(m) == 3) {
        std::copy_n(t[i].begin(), 4, v1.begin());
        std::copy_n(t[j].begin(), 4, v2.begin());
        found = true;
      }
    }
  std::array<Elt, 16> m{};
  for (int r = 0; r < 4; ++r) {
    m[4 * r + 0] = P.x[r];
    m[4 * r + 1] = v1[r];
    m[4 * r + 2] = v2[r];
  }
  CubicForm c = compose(fe, m);
  // c = u * Q2(a, b) + Q3(a, b) with (u, a, b) = variables 0, 1, 2
  std::vector<Elt> q2(3), q3(4);
  for (int e = 0; e <= 2; ++e) q2[e] = c.coeff(make_mono(1, e, 2 - e, 0));
  for (int e = 0; e <= 3; ++e) q3[e] = c.coeff(make_mono(0, e, 3 - e, 0));
  std::vector<std::array<Elt, 2>> dirs;
  auto r2 = binary_roots(E, q2);
  auto r3 = binary_roots(E, q3);
  if (!r3) fail(ErrorKind::InvalidArgument, "tangent section contains a plane");
  if (!r2) {
    dirs = *r3;
  } else {
    for (auto& d : *r2)
      if (binary_eval(E, q3, d) == 0) dirs.push_back(d);
  }
  std::vector<Line> out;
  for (auto& d : dirs) {
    auto w = combine(E, {{d[0], v1.data()}, {d[1], v2.data()}});
    out.push_back(line_from_rows(E, P.x, w));
  }
  return out;
}

} // namespace

std::optional<Line> seed_line(const CubicForm& f, const Field& ext) {
  CubicForm fe = f.embedded(ext);
  MPoly p = fe.to_mpoly();
  const std::uint64_t Q = ext.size();
  // Points in canonical order: [0:0:0:1], [0:0:1:*], [0:1:*:*], [1:*:*:*].
  for (int lead = 3; lead >= 0; --lead) {
    int nfree = 3 - lead;
    std::uint64_t count = 1;
    for (int i = 0; i + 1 < nfree; ++i) count *= Q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::array<Elt, 4> x{};
      x[lead] = 1;
      std::uint64_t rest = idx;
      for (int v = 2; v > lead; --v) {
        x[v] = ext.from_key(rest % Q);
        rest /= Q;
      }
      std::vector<Elt> lasts;
      if (lead == 3) {
        if (fe.eval(x) == 0) lasts.push_back(1);
      } else {
        MPoly u = p;
        for (int v = 0; v < 3; ++v) u = u.substitute(v, MPoly::constant(ext, x[v]));
        std::vector<Elt> coeffs(4, 0);
        for (auto& [m, c] : u.terms()) coeffs[mono_exp(m, 3)] = c;
        Poly pu(ext, coeffs);
        if (pu.is_zero()) {
          for (std::uint64_t k = 0; k < Q; ++k) lasts.push_back(ext.from_key(k));
        } else {
          lasts = distinct_roots(pu);
        }
      }
      for (Elt last : lasts) {
        if (lead != 3) x[3] = last;
        auto ls = lines_through(fe, ProjPoint::make(ext, x));
        if (!ls.empty()) return ls.front();
      }
    }
  }
  return std::nullopt;
}

std::vector<Line> propagate_lines(const CubicForm& f, const Field& ext, const std::vector<Line>& seeds) {
  CubicForm fe = f.embedded(ext);
  std::set<Line> found(seeds.begin(), seeds.end());
  std::deque<Line> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Line l = queue.front();
    queue.pop_front();
    const Elt* u = l.rref.data();
    const Elt* v = l.rref.data() + 4;
    std::array<Elt, 4> uu{}, vv{};
    std::copy_n(u, 4, uu.begin());
    std::copy_n(v, 4, vv.begin());
    auto comp = complete_basis(ext, {uu, vv}, 4);
    std::array<Elt, 4> ea{}, eb{};
    ea[comp[0]] = 1;
    eb[comp[1]] = 1;
    for (std::uint64_t k = 0; k <= ext.size(); ++k) {
      std::array<Elt, 4> w = k < ext.size() ? combine(ext, {{1, ea.data()}, {ext.from_key(k), eb.data()}}) : eb;
      std::array<Elt, 16> m{};
      for (int r = 0; r < 4; ++r) {
        m[4 * r + 0] = u[r];
        m[4 * r + 1] = v[r];
        m[4 * r + 2] = w[r];
      }
      CubicForm c = compose(fe, m);
      // c = r * K(s, t, r), K a conic in variables 0..2
      MPoly K(ext), cp = c.to_mpoly();
      for (auto& [mono, coef] : cp.terms())
        if (mono_exp(mono, 2) > 0) K.add_term(mono - mono_var(2), coef);
      if (K.is_zero()) fail(ErrorKind::InvalidArgument, "plane inside the surface");
      Matrix polar(ext, 3, 3);
      for (int i = 0; i < 3; ++i) {
        MPoly d = K.derivative(i);
        for (int j = 0; j < 3; ++j) polar.at(i, j) = d.coeff(mono_var(j));
      }
      auto ker = kernel(polar);
      if (ker.size() != 1) continue;  // smooth (odd char) or double line
      std::array<Elt, 4> sp{ker[0][0], ker[0][1], ker[0][2], 0};
      if (K.eval(sp) != 0) continue;  // smooth conic in characteristic 2
      auto cb = complete_basis(ext, {sp}, 3);
      std::array<Elt, 4> b1{}, b2{}, b12{};
      b1[cb[0]] = 1;
      b2[cb[1]] = 1;
      b12[cb[0]] = 1;
      b12[cb[1]] = 1;
      Elt k1 = K.eval(b1), k2 = K.eval(b2);
      Elt mixed = ext.sub(ext.sub(K.eval(b12), k1), k2);
      // K(a b1 + b b2) = k1 a^2 + mixed a b + k2 b^2
      auto roots = binary_roots(ext, {k2, mixed, k1});
      if (!roots) continue;
      auto to_space = [&](const std::array<Elt, 4>& pl) {
        return combine(ext, {{pl[0], u}, {pl[1], v}, {pl[2], w.data()}});
      };
      auto P = to_space(sp);
      for (auto& ab : *roots) {
        auto q = combine(ext, {{ab[0], b1.data()}, {ab[1], b2.data()}});
        Line nl = line_from_rows(ext, P, to_space(q));
        if (found.insert(nl).second) queue.push_back(nl);
      }
    }
  }
  return {found.begin(), found.end()};
}

// ------------------------------------------------------------ LineSolver

LineSolver::LineSolver(const CubicForm& f) : f_(f) {
  const Field& F = f.field();
  MPoly fp = f.to_mpoly();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<std::pair<int, int>> unknowns;
      std::array<MPoly, 4> A, B;
      for (int c = 0; c < 4; ++c) {
        A[c] = MPoly(F);
        B[c] = MPoly(F);
      }
      A[i] = MPoly::constant(F, 1);
      B[j] = MPoly::constant(F, 1);
      for (int c = i + 1; c < 4; ++c)
        if (c != j) {
          A[c] = MPoly::var(F, static_cast<int>(unknowns.size()));
          unknowns.emplace_back(0, c);
        }
      for (int c = j + 1; c < 4; ++c) {
        B[c] = MPoly::var(F, static_cast<int>(unknowns.size()));
        unknowns.emplace_back(1, c);
      }
      // f(s A + t B) = sum_e eq[e] s^e t^(3-e)
      std::array<MPoly, 4> eq;
      for (auto& e : eq) e = MPoly(F);
      for (auto& [mono, coef] : fp.terms()) {
        std::vector<MPoly> prod{MPoly::constant(F, coef)};
        for (int var = 0; var < 4; ++var)
          for (int k = 0; k < mono_exp(mono, var); ++k) {
            std::vector<MPoly> next(prod.size() + 1, MPoly(F));
            for (std::size_t e = 0; e < prod.size(); ++e) {
              next[e + 1] = next[e + 1] + prod[e] * A[var];
              next[e] = next[e] + prod[e] * B[var];
            }
            prod = std::move(next);
          }
        for (std::size_t e = 0; e < prod.size(); ++e) eq[e] = eq[e] + prod[e];
      }
      int nv = static_cast<int>(unknowns.size());
      charts_.push_back({i, j, std::move(unknowns), AffineSolver(F, {eq.begin(), eq.end()}, nv)});
    }
}

std::vector<Line> LineSolver::lines_over(const Field& ext) const {
  std::vector<Line> out;
  for (auto& ch : charts_) {
    std::uint64_t budget = std::uint64_t(1) << 20;
    for (auto& sol : ch.solver.zeros(ext, budget)) {
      std::array<Elt, 4> r0{}, r1{};
      r0[ch.i] = 1;
      r1[ch.j] = 1;
      for (std::size_t n = 0; n < ch.unknowns.size(); ++n) {
        auto [row, col] = ch.unknowns[n];
        (row == 0 ? r0 : r1)[col] = sol[n];
      }
      out.push_back(line_from_rows(ext, r0, r1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LineConfig enumerate_lines(const CubicForm& f, int max_split) {
  if (max_split < 1 || max_split > 12) fail(ErrorKind::InvalidArgument, "max split must be in [1, 12]");
  if (!is_smooth(f)) fail(ErrorKind::SurfaceSingular, "surface is singular");
  const Field& F = f.field();
  LineSolver solver(f);
  for (int d : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12}) {
    if (d > max_split) break;
    int kd = F.k() * d;
    long double size = 1;
    for (int i = 0; i < kd; ++i) size *= static_cast<long double>(F.p());
    if (kd > 12 || size > static_cast<long double>(std::uint64_t(1) << 40))
      fail(ErrorKind::SplittingDegreeExceeded, "GF(" + std::to_string(F.p()) + "^" + std::to_string(kd) + ") out of range");
    const Field& E = make_field(F.p(), kd);
    auto ls = solver.lines_over(E);
    if (ls.size() == kLines) return make_config(f, E, d, std::move(ls));
    if (ls.size() > kLines) fail(ErrorKind::ConfigIncomplete, "more than 27 lines found");
  }
  fail(ErrorKind::SplittingDegreeExceeded, "27 lines not reached by degree " + std::to_string(max_split));
}

// ------------------------------------------------------------ quintuples

namespace {

template <class Pred>
std::vector<std::array<int, 5>> invariant_quintuples(const LineConfig& c, const LinePerm& g, Pred pred) {
  if (!c.preserves_adjacency(g)) fail(ErrorKind::NotAnAutomorphismOfGraph, "permutation does not preserve the intersection graph");
  std::vector<std::array<int, 5>> out;
  std::array<int, 5> s{};
  for (s[0] = 0; s[0] < kLines; ++s[0])
    for (s[1] = s[0] + 1; s[1] < kLines; ++s[1])
      for (s[2] = s[1] + 1; s[2] < kLines; ++s[2])
        for (s[3] = s[2] + 1; s[3] < kLines; ++s[3])
          for (s[4] = s[3] + 1; s[4] < kLines; ++s[4]) {
            std::uint32_t mask = 0;
            for (int x : s) mask |= 1u << x;
            if (!pred(mask)) continue;
            std::uint32_t img = 0;
            for (int x : s) img |= 1u << g[x];
            if (img == mask) out.push_back(s);
          }
  return out;
}

} // namespace

std::vector<std::array<int, 5>> find_stars(const LineConfig& c, const LinePerm& g) {
  return invariant_quintuples(c, g, [&](std::uint32_t mask) {
    for (std::uint32_t m = mask; m; m &= m - 1)
      if (std::popcount(c.neighbours(std::countr_zero(m)) & mask) != 2) return false;
    return true;
  });
}

std::vector<std::array<int, 5>> find_skew_quintuples(const LineConfig& c, const LinePerm& g) {
  return invariant_quintuples(c, g, [&](std::uint32_t mask) {
    for (std::uint32_t m = mask; m; m &= m - 1)
      if (c.neighbours(std::countr_zero(m)) & mask) return false;
    return true;
  });
}

} // namespace symcubic
