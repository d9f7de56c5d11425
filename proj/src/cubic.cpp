#include "symcubic/cubic.hpp"

#include <algorithm>

#include "symcubic/solve.hpp"

namespace symcubic {

namespace {

struct MonoTables {
  std::array<Mono, 20> cubic{};
  std::array<Mono, 10> quad{};
  int idx3[4][4][4];  // by exponents of x, y, z
  int idx2[3][3][3];
  MonoTables() {
    int n = 0;
    for (int a = 3; a >= 0; --a)
      for (int b = 3 - a; b >= 0; --b)
        for (int c = 3 - a - b; c >= 0; --c) {
          cubic[n] = make_mono(a, b, c, 3 - a - b - c);
          idx3[a][b][c] = n++;
        }
    n = 0;
    for (int a = 2; a >= 0; --a)
      for (int b = 2 - a; b >= 0; --b)
        for (int c = 2 - a - b; c >= 0; --c) {
          quad[n] = make_mono(a, b, c, 2 - a - b - c);
          idx2[a][b][c] = n++;
        }
  }
};

const MonoTables& tables() {
  static const MonoTables t;
  return t;
}

} // namespace

const std::array<Mono, kCubicMonomials>& cubic_monomials() { return tables().cubic; }

int cubic_monomial_index(Mono m) {
  if (mono_degree(m) != 3) fail(ErrorKind::InvalidArgument, "not a cubic monomial: " + mono_str(m));
  return tables().idx3[mono_exp(m, 0)][mono_exp(m, 1)][mono_exp(m, 2)];
}

CubicForm CubicForm::from_mpoly(const MPoly& p) {
  if (!p.field_ptr()) fail(ErrorKind::InvalidArgument, "polynomial without a field");
  if (!p.is_homogeneous(3)) fail(ErrorKind::InvalidArgument, "not a homogeneous cubic: " + p.str());
  Coeffs c{};
  for (auto& [m, v] : p.terms()) c[cubic_monomial_index(m)] = v;
  return CubicForm(p.field(), c);
}

bool CubicForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Elt v) { return v == 0; });
}

MPoly CubicForm::to_mpoly() const {
  MPoly p(*f_);
  auto& mons = cubic_monomials();
  for (int i = 0; i < kCubicMonomials; ++i) p.add_term(mons[i], c_[i]);
  return p;
}

std::pair<CubicForm, Elt> CubicForm::normalized() const {
  int i = 0;
  while (i < kCubicMonomials && c_[i] == 0) ++i;
  if (i == kCubicMonomials) fail(ErrorKind::ZeroPolynomial, "zero cubic form");
  Elt s = c_[i];
  Elt inv = f_->inv(s);
  Coeffs c{};
  for (int j = 0; j < kCubicMonomials; ++j) c[j] = f_->mul(c_[j], inv);
  return {CubicForm(*f_, c), s};
}

bool CubicForm::proportional_to(const CubicForm& o) const {
  if (f_ != o.f_) fail(ErrorKind::FieldMismatch, "forms over different fields");
  int i = 0;
  while (i < kCubicMonomials && c_[i] == 0) ++i;
  if (i == kCubicMonomials) return false;
  Elt r = f_->div(o.c_[i], c_[i]);
  if (r == 0) return false;
  for (int j = 0; j < kCubicMonomials; ++j)
    if (o.c_[j] != f_->mul(r, c_[j])) return false;
  return true;
}

CubicForm CubicForm::embedded(const Field& target) const {
  if (&target == f_) return *this;
  const Embedding& e = embedding(*f_, target);
  Coeffs c{};
  for (int j = 0; j < kCubicMonomials; ++j) c[j] = e(c_[j]);
  return CubicForm(target, c);
}

Elt CubicForm::eval(std::span<const Elt> pt) const {
  const Field& f = *f_;
  Elt sq[4][4];
  for (int v = 0; v < 4; ++v) {
    sq[v][0] = 1;
    for (int e = 1; e < 4; ++e) sq[v][e] = f.mul(sq[v][e - 1], pt[v]);
  }
  Elt s = 0;
  auto& mons = cubic_monomials();
  for (int j = 0; j < kCubicMonomials; ++j) {
    if (!c_[j]) continue;
    Mono m = mons[j];
    Elt t = c_[j];
    for (int v = 0; v < 4 && t; ++v) {
      int e = mono_exp(m, v);
      if (e) t = f.mul(t, sq[v][e]);
    }
    s = f.add(s, t);
  }
  return s;
}

// ---------------------------------------------------------------- catalog

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"fermat", "clebsch", "s_1_1", "s_1_2"};
  return names;
}

CubicForm catalog_surface(std::string_view name, const Field& f) {
  MPoly x = MPoly::var(f, 0), y = MPoly::var(f, 1), z = MPoly::var(f, 2), t = MPoly::var(f, 3);
  if (name == "fermat") return CubicForm::from_mpoly(x.pow(3) + y.pow(3) + z.pow(3) + t.pow(3));
  if (name == "clebsch") {
    // e3 of (x, y, z, t, w) with w = -(x+y+z+t)
    MPoly e1 = x + y + z + t;
    MPoly e2 = x * y + x * z + x * t + y * z + y * t + z * t;
    MPoly e3 = x * y * z + x * y * t + x * z * t + y * z * t;
    return CubicForm::from_mpoly(e3 - e1 * e2);
  }
  if (name == "s_1_1") return CubicForm::from_mpoly(t.pow(3) + t * z.pow(2) - x * y.pow(2) + x.pow(2) * z);
  if (name == "s_1_2") return CubicForm::from_mpoly(x.pow(2) * t + y.pow(2) * z + z.pow(2) * y + t.pow(2) * x);
  fail(ErrorKind::UnknownName, "no catalog surface named '" + std::string(name) + "'");
}

CubicForm parse_cubic(const Field& f, std::string_view text) {
  NameResolver resolve = [&f](std::string_view name) -> std::optional<MPoly> {
    for (auto& n : catalog_names())
      if (n == name) return catalog_surface(name, f).to_mpoly();
    return std::nullopt;
  };
  MPoly p = parse_polynomial(f, text, resolve);
  if (p.is_zero()) fail(ErrorKind::ParseError, "form is identically zero");
  if (!p.is_homogeneous(3)) fail(ErrorKind::ParseError, "not a homogeneous cubic: '" + std::string(text) + "'");
  return CubicForm::from_mpoly(p);
}

PointValues eval_and_partials(const CubicForm& f, const ProjPoint& x) {
  CubicForm g = f.embedded(*x.f);
  MPoly p = g.to_mpoly();
  PointValues r{};
  r.value = g.eval(x.x);
  for (int v = 0; v < 4; ++v) r.partials[v] = p.derivative(v).eval(x.x);
  return r;
}

// ------------------------------------------------------------- composition

CubicForm compose(const CubicForm& form, const std::array<Elt, 16>& m) {
  const Field& f = form.field();
  const auto& tb = tables();
  // Q[i][j] = L_i L_j as a quadric, L_i = row i of m.
  std::array<Elt, 10> q[4][4];
  bool have[4][4] = {};
  auto quad = [&](int i, int j) -> const std::array<Elt, 10>& {
    if (i > j) std::swap(i, j);
    if (!have[i][j]) {
      std::array<Elt, 10> r{};
      for (int a = 0; a < 4; ++a) {
        Elt la = m[4 * i + a];
        if (!la) continue;
        for (int b = 0; b < 4; ++b) {
          Elt lb = m[4 * j + b];
          if (!lb) continue;
          int e[4] = {0, 0, 0, 0};
          ++e[a];
          ++e[b];
          int k = tb.idx2[e[0]][e[1]][e[2]];
          r[k] = f.add(r[k], f.mul(la, lb));
        }
      }
      q[i][j] = r;
      have[i][j] = true;
    }
    return q[i][j];
  };
  CubicForm::Coeffs out{};
  const auto& c = form.coeffs();
  for (int n = 0; n < kCubicMonomials; ++n) {
    if (!c[n]) continue;
    Mono mono = tb.cubic[n];
    int vars[3], nv = 0;
    for (int v = 0; v < 4; ++v)
      for (int e = 0; e < mono_exp(mono, v); ++e) vars[nv++] = v;
    const auto& qq = quad(vars[0], vars[1]);
    int k = vars[2];
    for (int qi = 0; qi < 10; ++qi) {
      Elt qv = qq[qi];
      if (!qv) continue;
      qv = f.mul(qv, c[n]);
      Mono qm = tb.quad[qi];
      for (int b = 0; b < 4; ++b) {
        Elt lb = m[4 * k + b];
        if (!lb) continue;
        Mono cm = qm + mono_var(b);
        int idx = tb.idx3[mono_exp(cm, 0)][mono_exp(cm, 1)][mono_exp(cm, 2)];
        out[idx] = f.add(out[idx], f.mul(qv, lb));
      }
    }
  }
  return CubicForm(f, out);
}

std::pair<CubicForm, Elt> apply_collineation(const CubicForm& f, const Collineation& g) {
  if (&f.field() != &g.field()) fail(ErrorKind::FieldMismatch, "form and collineation over different fields");
  return compose(f, g.inverse().entries()).normalized();
}

bool preserves(const CubicForm& f, const Collineation& g) {
  if (&f.field() != &g.field()) fail(ErrorKind::FieldMismatch, "form and collineation over different fields");
  return f.proportional_to(compose(f, g.entries()));
}

// ---------------------------------------------------------- singularities

namespace {

bool mpoly_proportional(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  Mono m = a.lead_mono();
  Elt bc = b.coeff(m);
  if (!bc) return false;
  return a.scaled(bc) == b.scaled(a.lead_coeff());
}

// Frobenius orbit of a normalized point under x -> x^q; size and minimum.
std::pair<int, std::vector<Elt>> frobenius_orbit(const Field& E, int k, const std::vector<Elt>& pt) {
  std::vector<Elt> cur = pt, best = pt;
  int size = 0;
  do {
    for (auto& v : cur) v = E.frobenius(v, k);
    ++size;
    bool less = false;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] != best[i]) {
        less = E.key(cur[i]) < E.key(best[i]);
        break;
      }
    if (less) best = cur;
  } while (cur != pt);
  return {size, best};
}

bool extension_possible(const Field& f, int d) {
  int kd = f.k() * d;
  if (kd > 12) return false;
  long double q = 1;
  for (int i = 0; i < kd; ++i) q *= static_cast<long double>(f.p());
  return q <= static_cast<long double>(std::uint64_t(1) << 40);
}

const Field& extension(const Field& f, int d) {
  if (!extension_possible(f, d))
    fail(ErrorKind::SearchTooLarge, "extension of degree " + std::to_string(d) + " of " + f.name() + " is out of range");
  return make_field(f.p(), f.k() * d);
}

constexpr std::uint64_t kEnumerationBudget = std::uint64_t(1) << 24;

// Points of the zero set whose Frobenius orbit over f has size exactly d.
std::vector<std::vector<Elt>> points_of_degree(const ZeroSolver& solver, const Field& f, int d, std::uint64_t& budget) {
  const Field& E = extension(f, d);
  std::vector<std::vector<Elt>> out;
  for (auto& pt : solver.zeros(E, budget)) {
    auto [size, rep] = frobenius_orbit(E, f.k(), pt);
    if (size == d && rep == pt) out.push_back(pt);
  }
  std::sort(out.begin(), out.end(), [&](auto& a, auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return E.key(a[i]) < E.key(b[i]);
    return false;
  });
  return out;
}

std::vector<MPoly> jacobian_system(const MPoly& p, int nvars) {
  std::vector<MPoly> eqs{p};
  for (int v = 0; v < nvars; ++v) eqs.push_back(p.derivative(v));
  return eqs;
}

} // namespace

std::optional<std::array<Elt, 4>> repeated_linear_factor(const MPoly& p, int nvars) {
  const Field& f = p.field();
  if (p.is_zero()) return std::nullopt;
  for (int i = 0; i < nvars; ++i) {
    // candidate values of c_j from the binary restriction to span(e_i, e_j)
    std::vector<std::vector<Elt>> cand(4);
    bool possible = true;
    for (int j = i + 1; j < nvars && possible; ++j) {
      std::vector<Elt> g(4, 0);  // g[a] = coefficient of x_i^a x_j^(3-a)
      for (auto& [m, c] : p.terms()) {
        bool other = false;
        for (int v = 0; v < 4; ++v)
          if (v != i && v != j && mono_exp(m, v)) other = true;
        if (!other) g[mono_exp(m, i)] = f.add(g[mono_exp(m, i)], c);
      }
      // u(c) = g(-c, 1), w(c) = (d/dx_i g)(-c, 1)
      std::vector<Elt> u(4, 0), w(3, 0);
      for (int a = 0; a <= 3; ++a) {
        Elt sign = (a % 2) ? f.neg(1) : 1;
        u[a] = f.mul(g[a], sign);
        if (a >= 1) {
          Elt s2 = ((a - 1) % 2) ? f.neg(1) : 1;
          w[a - 1] = f.mul(f.mul(g[a], f.from_int(a)), s2);
        }
      }
      Poly pu(f, u), pw(f, w);
      if (pu.is_zero() && pw.is_zero()) {
        for (std::uint64_t key = 0; key < f.size(); ++key) cand[j].push_back(f.from_key(key));
        continue;
      }
      Poly h = pu.is_zero() ? monic(pw) : pw.is_zero() ? monic(pu) : gcd(pu, pw);
      if (h.deg() < 1) {
        possible = false;
        break;
      }
      cand[j] = distinct_roots(h);
    }
    if (!possible) continue;

    std::array<Elt, 4> c{};
    c[i] = 1;
    auto divisible_on = [&](int upto, bool full) {
      MPoly q = p;
      if (!full)
        for (int v = 0; v < 4; ++v)
          if (v < i || v > upto) q = q.substitute(v, MPoly(f));
      MPoly val(f);
      for (int l = i + 1; l <= upto; ++l) val = val + MPoly::var(f, l).scaled(f.neg(c[l]));
      if (!q.substitute(i, val).is_zero()) return false;
      return q.derivative(i).substitute(i, val).is_zero();
    };
    std::optional<std::array<Elt, 4>> found;
    auto dfs = [&](auto&& self, int j) -> void {
      if (found) return;
      if (j == nvars) {
        if (divisible_on(nvars - 1, true)) found = c;
        return;
      }
      for (Elt v : cand[j]) {
        c[j] = v;
        if (j > i + 1 && !divisible_on(j, false)) continue;
        self(self, j + 1);
        if (found) return;
      }
      c[j] = 0;
    };
    dfs(dfs, i + 1);
    if (found) return found;
  }
  return std::nullopt;
}

SingularityReport singular_locus(const CubicForm& form, int depth) {
  if (depth < 1 || depth > 12) fail(ErrorKind::InvalidArgument, "depth must be in [1, 12]");
  if (form.is_zero()) fail(ErrorKind::ZeroPolynomial, "zero cubic form");
  SingularityReport rep;
  rep.search_bound = depth;
  MPoly p = form.to_mpoly();
  bool all_zero = true;
  for (int v = 0; v < 4; ++v)
    if (!p.derivative(v).is_zero()) all_zero = false;
  if (all_zero || repeated_linear_factor(p, 4)) {
    rep.nonreduced = true;
    return rep;
  }
  ZeroSolver solver(jacobian_system(p, 4), 4);
  if (solver.empty()) return rep;
  const Field& f = form.field();
  std::uint64_t budget = kEnumerationBudget;
  for (int d = 1; d <= depth; ++d) {
    const Field& E = extension(f, d);
    for (auto& pt : points_of_degree(solver, f, d, budget))
      rep.points.push_back({d, ProjPoint::make(E, {pt[0], pt[1], pt[2], pt[3]})});
  }
  return rep;
}

bool is_smooth(const CubicForm& form) {
  MPoly p = form.to_mpoly();
  return ZeroSolver(jacobian_system(p, 4), 4).empty();
}

// ----------------------------------------------------------------- weights

std::vector<WeightGroup> monomial_weights(const Collineation& g) {
  if (!g.is_diagonal()) fail(ErrorKind::NotDiagonal, "monomial weights need a diagonal collineation");
  const Field& f = g.field();
  std::vector<WeightGroup> groups;
  for (Mono m : cubic_monomials()) {
    Elt w = 1;
    for (int v = 0; v < 4; ++v) w = f.mul(w, f.pow(g.at(v, v), mono_exp(m, v)));
    auto it = std::find_if(groups.begin(), groups.end(), [&](auto& gr) { return gr.weight == w; });
    if (it == groups.end())
      groups.push_back({w, {m}});
    else
      it->monomials.push_back(m);
  }
  std::sort(groups.begin(), groups.end(), [&](auto& a, auto& b) { return f.less(a.weight, b.weight); });
  return groups;
}

// ---------------------------------------------------------- plane sections

const char* to_string(PlaneSectionClass c) {
  switch (c) {
    case PlaneSectionClass::smooth: return "smooth";
    case PlaneSectionClass::nodal_irreducible: return "nodal_irreducible";
    case PlaneSectionClass::cuspidal_irreducible: return "cuspidal_irreducible";
    case PlaneSectionClass::conic_plus_line: return "conic_plus_line";
    case PlaneSectionClass::three_lines: return "three_lines";
    case PlaneSectionClass::line_with_double_line: return "line_with_double_line";
    case PlaneSectionClass::triple_line: return "triple_line";
    case PlaneSectionClass::other_reducible: return "other_reducible";
  }
  return "unknown";
}

PlaneSectionClass classify_plane_section(const CubicForm& form, const std::array<Elt, 4>& plane) {
  const Field& f = form.field();
  Matrix row(f, 1, 4);
  for (int i = 0; i < 4; ++i) row.at(0, i) = plane[i];
  if (rank(row) == 0) fail(ErrorKind::InvalidArgument, "zero linear form");
  auto basis = kernel(row);
  std::array<Elt, 16> m{};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i) m[4 * i + j] = basis[j][i];
  CubicForm restricted = compose(form, m);
  if (restricted.is_zero()) fail(ErrorKind::PlaneInsideSurface, "the plane lies on the surface");
  MPoly c = restricted.to_mpoly();

  if (auto l = repeated_linear_factor(c, 3)) {
    MPoly lin(f);
    for (int v = 0; v < 3; ++v) lin = lin + MPoly::var(f, v).scaled((*l)[v]);
    return mpoly_proportional(lin.pow(3), c) ? PlaneSectionClass::triple_line : PlaneSectionClass::line_with_double_line;
  }

  ZeroSolver solver(jacobian_system(c, 3), 3);
  if (solver.empty()) return PlaneSectionClass::smooth;
  std::uint64_t budget = kEnumerationBudget;
  int count = 0;
  std::vector<Elt> rational;
  for (int d = 1; d <= 3; ++d) {
    auto pts = points_of_degree(solver, f, d, budget);
    count += d * static_cast<int>(pts.size());
    if (d == 1 && !pts.empty()) rational = pts.front();
  }
  if (count == 2) return PlaneSectionClass::conic_plus_line;
  if (count == 3) return PlaneSectionClass::three_lines;
  if (count != 1) return PlaneSectionClass::other_reducible;

  // Move the singular point to [0:0:1] and read off the tangent cone.
  int lead = 0;
  while (rational[lead] == 0) ++lead;
  std::array<Elt, 16> t{};
  int col = 0;
  for (int v = 0; v < 3; ++v) {
    if (v == lead) continue;
    t[4 * v + col] = 1;
    ++col;
  }
  for (int v = 0; v < 3; ++v) t[4 * v + 2] = rational[v];
  CubicForm moved = compose(restricted, t);
  Elt a = moved.coeff(make_mono(2, 0, 1, 0));
  Elt b = moved.coeff(make_mono(1, 1, 1, 0));
  Elt cc = moved.coeff(make_mono(0, 2, 1, 0));
  if (!a && !b && !cc) return PlaneSectionClass::three_lines;
  Elt disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(a, cc)));
  if (disc != 0) return PlaneSectionClass::nodal_irreducible;
  // double tangent line through the point, direction (u0 : v0)
  Elt u0, v0;
  if (a == 0) {
    u0 = 1;
    v0 = 0;
  } else {
    auto roots = distinct_roots(Poly(f, {cc, b, a}));
    u0 = roots.front();
    v0 = 1;
  }
  std::array<Elt, 4> pt{u0, v0, 0, 0};
  return moved.eval(pt) == 0 ? PlaneSectionClass::conic_plus_line : PlaneSectionClass::cuspidal_irreducible;
}

} // namespace symcubic
