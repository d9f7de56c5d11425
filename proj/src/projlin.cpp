#include "symcubic/projlin.hpp"

#include <algorithm>
#include <random>

namespace symcubic {

ProjPoint ProjPoint::make(const Field& field, std::array<Elt, 4> c) {
  int i = 0;
  while (i < 4 && c[i] == 0) ++i;
  if (i == 4) fail(ErrorKind::InvalidArgument, "zero vector is not a projective point");
  if (c[i] != 1) {
    Elt inv = field.inv(c[i]);
    for (auto& v : c) v = field.mul(v, inv);
  }
  return {&field, c};
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  for (int i = 0; i < 4; ++i)
    if (x[i] != o.x[i]) return f->key(x[i]) < f->key(o.x[i]);
  return false;
}

std::string ProjPoint::str() const {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ":";
    s += f->format(x[i]);
  }
  return s + "]";
}

// ----------------------------------------------------------- Collineation

Collineation Collineation::make(const Field& f, const std::array<Elt, 16>& m) {
  Matrix mat(f, 4, 4);
  std::copy(m.begin(), m.end(), mat.a.begin());
  if (det(mat) == 0) fail(ErrorKind::InvalidArgument, "singular matrix is not a collineation");
  Collineation c;
  c.f_ = &f;
  c.m_ = m;
  int i = 0;
  while (c.m_[i] == 0) ++i;
  if (c.m_[i] != 1) {
    Elt inv = f.inv(c.m_[i]);
    for (auto& v : c.m_) v = f.mul(v, inv);
  }
  return c;
}

Collineation Collineation::from_matrix(const Matrix& m) {
  if (m.rows != 4 || m.cols != 4) fail(ErrorKind::InvalidArgument, "collineation needs a 4x4 matrix");
  std::array<Elt, 16> a{};
  std::copy(m.a.begin(), m.a.end(), a.begin());
  return make(*m.f, a);
}

Collineation Collineation::identity(const Field& f) {
  std::array<Elt, 16> a{};
  for (int i = 0; i < 4; ++i) a[5 * i] = 1;
  return make(f, a);
}

Collineation Collineation::diagonal(const Field& f, std::array<Elt, 4> d) {
  std::array<Elt, 16> a{};
  for (int i = 0; i < 4; ++i) a[5 * i] = d[i];
  return make(f, a);
}

Collineation Collineation::permutation(const Field& f, std::array<int, 4> perm) {
  std::array<Elt, 16> a{};
  for (int i = 0; i < 4; ++i) a[4 * perm[i] + i] = 1;
  return make(f, a);
}

Matrix Collineation::matrix() const {
  Matrix m(*f_, 4, 4);
  std::copy(m_.begin(), m_.end(), m.a.begin());
  return m;
}

Collineation Collineation::operator*(const Collineation& o) const {
  if (f_ != o.f_) fail(ErrorKind::FieldMismatch, "collineations over different fields");
  const Field& f = *f_;
  std::array<Elt, 16> r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      Elt c = m_[4 * i + k];
      if (!c) continue;
      for (int j = 0; j < 4; ++j) r[4 * i + j] = f.add(r[4 * i + j], f.mul(c, o.m_[4 * k + j]));
    }
  Collineation out;
  out.f_ = f_;
  out.m_ = r;
  int i = 0;
  while (out.m_[i] == 0) ++i;
  if (out.m_[i] != 1) {
    Elt inv = f.inv(out.m_[i]);
    for (auto& v : out.m_) v = f.mul(v, inv);
  }
  return out;
}

Collineation Collineation::inverse() const {
  auto inv = symcubic::inverse(matrix());
  return from_matrix(*inv);
}

Collineation Collineation::pow(unsigned e) const {
  Collineation r = identity(*f_);
  Collineation b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Collineation::is_identity() const { return *this == identity(*f_); }

bool Collineation::is_diagonal() const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && m_[4 * i + j]) return false;
  return true;
}

bool Collineation::operator<(const Collineation& o) const {
  for (int i = 0; i < 16; ++i)
    if (m_[i] != o.m_[i]) return f_->key(m_[i]) < f_->key(o.m_[i]);
  return false;
}

std::string Collineation::str() const {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < 4; ++j) {
      if (j) s += ", ";
      s += f_->format(m_[4 * i + j]);
    }
    s += "]";
  }
  return s + "]";
}

std::size_t CollineationHash::operator()(const Collineation& c) const {
  std::size_t h = 1469598103934665603ULL;
  for (Elt v : c.entries()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ProjPoint act_on_point(const Collineation& g, const ProjPoint& p) {
  if (&g.field() != p.f) fail(ErrorKind::FieldMismatch, "point and collineation over different fields");
  const Field& f = g.field();
  std::array<Elt, 4> y{};
  for (int i = 0; i < 4; ++i) {
    Elt s = 0;
    for (int j = 0; j < 4; ++j) s = f.add(s, f.mul(g.at(i, j), p.x[j]));
    y[i] = s;
  }
  return ProjPoint::make(f, y);
}

namespace {

// Matrix sending e_i to lambda_i p_i and (1,1,1,1) to p_5; nullopt if the
// points are not a frame.
std::optional<Matrix> frame_matrix(std::span<const ProjPoint, 5> pts) {
  const Field& f = *pts[0].f;
  Matrix m(f, 4, 4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) m.at(i, j) = pts[j].x[i];
  auto lam = solve(m, pts[4].x);
  if (!lam) return std::nullopt;
  if (rank(m) < 4) return std::nullopt;
  for (Elt l : *lam)
    if (l == 0) return std::nullopt;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) m.at(i, j) = f.mul(m.at(i, j), (*lam)[j]);
  return m;
}

} // namespace

std::optional<Collineation> frame_solve(std::span<const ProjPoint, 5> src, std::span<const ProjPoint, 5> dst) {
  const Field* f = src[0].f;
  for (int i = 0; i < 5; ++i)
    if (src[i].f != f || dst[i].f != f) fail(ErrorKind::FieldMismatch, "frame points over different fields");
  auto ms = frame_matrix(src);
  if (!ms) fail(ErrorKind::DegenerateFrame, "source points are not in general position");
  auto md = frame_matrix(dst);
  if (!md) return std::nullopt;
  return Collineation::from_matrix(*md * *inverse(*ms));
}

// ------------------------------------------------------------------- rcf

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

void row_axpy(PolyMatrix& m, int dst, int src, const Poly& q) {
  for (std::size_t j = 0; j < m.size(); ++j) m[dst][j] = m[dst][j] - q * m[src][j];
}

void col_axpy(PolyMatrix& m, int dst, int src, const Poly& q) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] = m[i][dst] - q * m[i][src];
}

// Invariant factors of a square polynomial matrix, via Smith normal form.
std::vector<Poly> invariant_factors(PolyMatrix m) {
  int n = static_cast<int>(m.size());
  for (int k = 0; k < n; ++k) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (!m[i][j].is_zero() && (bi < 0 || m[i][j].deg() < m[bi][bj].deg())) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;
      std::swap(m[k], m[bi]);
      for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][bj]);
      bool clean = true;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero()) continue;
        auto [q, r] = divmod(m[i][k], m[k][k]);
        row_axpy(m, i, k, q);
        if (!r.is_zero()) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (m[k][j].is_zero()) continue;
        auto [q, r] = divmod(m[k][j], m[k][k]);
        col_axpy(m, j, k, q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = k + 1; i < n && bad < 0; ++i)
        for (int j = k + 1; j < n; ++j)
          if (!(m[i][j] % m[k][k]).is_zero()) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = 0; j < n; ++j) m[k][j] = m[k][j] + m[bad][j];
    }
  }
  std::vector<Poly> out;
  for (int k = 0; k < n; ++k) out.push_back(monic(m[k][k]));
  return out;
}

} // namespace

RationalCanonicalForm rcf(const Matrix& a) {
  if (a.rows != a.cols) fail(ErrorKind::InvalidArgument, "rcf of non-square matrix");
  const Field& f = *a.f;
  int n = a.rows;
  PolyMatrix m(n, std::vector<Poly>(n, Poly(f)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt c = f.neg(a.at(i, j));
      m[i][j] = i == j ? Poly(f, {c, 1}) : Poly(f, {c});
    }
  RationalCanonicalForm out;
  for (auto& d : invariant_factors(std::move(m))) {
    if (d.deg() < 1) continue;
    for (auto& [p, e] : factor(d)) out.push_back({p, e});
  }
  std::sort(out.begin(), out.end(), [](const RcfBlock& x, const RcfBlock& y) {
    if (!(x.poly == y.poly)) return poly_less(x.poly, y.poly);
    return x.exponent < y.exponent;
  });
  return out;
}

std::string rcf_str(const RationalCanonicalForm& r) {
  std::string s;
  for (auto& b : r) {
    if (!s.empty()) s += " ";
    s += "(" + b.poly.str() + ")";
    if (b.exponent > 1) s += "^" + std::to_string(b.exponent);
  }
  return s;
}

namespace {

// Scalar s with M^3 = s I, or nullopt.
std::optional<Elt> cube_scalar(const Matrix& m) {
  Matrix c = m * m * m;
  Elt s = c.at(0, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (c.at(i, j) != (i == j ? s : 0)) return std::nullopt;
  return s;
}

} // namespace

std::optional<Collineation> pgl_conjugate_order3(const Collineation& a, const Collineation& b) {
  if (&a.field() != &b.field()) fail(ErrorKind::FieldMismatch, "collineations over different fields");
  const Field& f = a.field();
  if (f.p() == 3) fail(ErrorKind::InvalidArgument, "characteristic 3 is excluded");
  Matrix A = a.matrix(), B = b.matrix();
  auto s = cube_scalar(A);
  auto t = cube_scalar(B);
  if (!s) fail(ErrorKind::WrongOrder, "first argument does not have order 3");
  if (!t) fail(ErrorKind::WrongOrder, "second argument does not have order 3");
  Elt lambda = f.div(f.mul(*t, det(A)), f.mul(*s, det(B)));
  Matrix LB = scale(B, lambda);
  if (!(rcf(A) == rcf(LB))) return std::nullopt;

  // Linear conditions C A - LB C = 0 on the 16 entries of C.
  Matrix sys(f, 16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int row = 4 * i + j;
      for (int k = 0; k < 4; ++k) {
        // (C A)_{ij} = sum_k C_{ik} A_{kj}
        sys.at(row, 4 * i + k) = f.add(sys.at(row, 4 * i + k), A.at(k, j));
        // (LB C)_{ij} = sum_k LB_{ik} C_{kj}
        sys.at(row, 4 * k + j) = f.sub(sys.at(row, 4 * k + j), LB.at(i, k));
      }
    }
  auto basis = kernel(sys);
  int r = static_cast<int>(basis.size());
  auto try_combo = [&](const std::vector<Elt>& coef) -> std::optional<Collineation> {
    std::array<Elt, 16> c{};
    for (int b = 0; b < r; ++b) {
      if (!coef[b]) continue;
      for (int e = 0; e < 16; ++e) c[e] = f.add(c[e], f.mul(coef[b], basis[b][e]));
    }
    Matrix m(f, 4, 4);
    std::copy(c.begin(), c.end(), m.a.begin());
    if (det(m) == 0) return std::nullopt;
    return Collineation::make(f, c);
  };
  std::uint64_t total = 1;
  bool small = true;
  for (int i = 0; i < r && small; ++i) {
    if (total > 4096 / f.size()) small = false;
    total *= f.size();
  }
  if (small) {
    std::vector<Elt> coef(r);
    for (std::uint64_t n = 1; n < total; ++n) {
      std::uint64_t v = n;
      for (int i = 0; i < r; ++i) {
        coef[i] = f.from_key(v % f.size());
        v /= f.size();
      }
      if (auto c = try_combo(coef)) return c;
    }
  } else {
    std::mt19937_64 rng(0x0c0ffee);
    std::vector<Elt> coef(r);
    for (int attempt = 0; attempt < 20000; ++attempt) {
      for (auto& v : coef) v = f.from_key(rng() % f.size());
      if (auto c = try_combo(coef)) return c;
    }
  }
  fail(ErrorKind::InvalidArgument, "no invertible intertwiner found despite equal invariants");
}

} // namespace symcubic
