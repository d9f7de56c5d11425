#include "symcubic/linalg.hpp"

namespace symcubic {

Matrix Matrix::identity(const Field& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) fail(ErrorKind::InvalidArgument, "matrix shape mismatch");
  if (x.f != y.f) fail(ErrorKind::FieldMismatch, "matrix product over different fields");
  const Field& f = *x.f;
  Matrix r(f, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Elt c = x.at(i, k);
      if (!c) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(c, y.at(k, j)));
    }
  return r;
}

Matrix scale(const Matrix& m, Elt s) {
  Matrix r = m;
  for (auto& v : r.a) v = m.f->mul(v, s);
  return r;
}

int rref(Matrix& m, std::vector<int>* pivots) {
  const Field& f = *m.f;
  int row = 0;
  if (pivots) pivots->clear();
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Elt inv = f.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      Elt c = m.at(i, col);
      if (!c) continue;
      for (int j = col; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return row;
}

int rank(Matrix m) { return rref(m); }

std::vector<std::vector<Elt>> kernel(const Matrix& m0) {
  Matrix m = m0;
  std::vector<int> piv;
  int r = rref(m, &piv);
  const Field& f = *m.f;
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Elt>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<Elt> v(m.cols, 0);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[piv[i]] = f.neg(m.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) fail(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  int n = m.rows;
  Matrix aug(*m.f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv;
  int r = rref(aug, &piv);
  if (r < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(*m.f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Elt det(Matrix m) {
  if (m.rows != m.cols) fail(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const Field& f = *m.f;
  int n = m.rows;
  Elt d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = f.neg(d);
    }
    Elt p = m.at(col, col);
    d = f.mul(d, p);
    Elt inv = f.inv(p);
    for (int i = col + 1; i < n; ++i) {
      Elt c = f.mul(m.at(i, col), inv);
      if (!c) continue;
      for (int j = col; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(col, j)));
    }
  }
  return d;
}

std::optional<std::vector<Elt>> solve(const Matrix& m, std::span<const Elt> b) {
  Matrix aug(*m.f, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> piv;
  int r = rref(aug, &piv);
  if (r > 0 && piv[r - 1] == m.cols) return std::nullopt;
  std::vector<Elt> x(m.cols, 0);
  for (int i = 0; i < r; ++i) x[piv[i]] = aug.at(i, m.cols);
  return x;
}

} // namespace symcubic
