#pragma once
// Dense matrices over a finite field.

#include <optional>
#include <span>
#include <vector>

#include "symcubic/gf.hpp"

namespace symcubic {

struct Matrix {
  const Field* f = nullptr;
  int rows = 0;
  int cols = 0;
  std::vector<Elt> a;  // row-major

  Matrix() = default;
  Matrix(const Field& field, int r, int c) : f(&field), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static Matrix identity(const Field& field, int n);

  Elt& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Elt at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix scale(const Matrix& m, Elt s);
// In-place reduced row echelon form; returns the rank.
int rref(Matrix& m, std::vector<int>* pivots = nullptr);
int rank(Matrix m);
// Basis of the right null space.
std::vector<std::vector<Elt>> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Elt det(Matrix m);
std::optional<std::vector<Elt>> solve(const Matrix& m, std::span<const Elt> b);

} // namespace symcubic
