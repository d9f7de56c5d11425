#pragma once
// Common zeros of homogeneous polynomial systems over finite extensions.

#include <cstdint>
#include <vector>

#include "symcubic/mpoly.hpp"

namespace symcubic {

// Reduced Groebner basis in lex order x > y > z > t.  Returns {1} for the
// unit ideal.
std::vector<MPoly> groebner_lex(const std::vector<MPoly>& gens);

// Projective zeros of homogeneous polynomials in the variables 0..nvars-1.
// Each affine chart x_c = 1, x_i = 0 (i < c) is solved by back substitution
// through its lex basis; a variable left unconstrained is enumerated, which
// draws on the caller's budget.
class ZeroSolver {
public:
  ZeroSolver(const std::vector<MPoly>& eqs, int nvars);

  // True when the system has no zeros over the algebraic closure.
  bool empty() const;
  // Normalized points (first nonzero coordinate 1) over ext, in scan order.
  std::vector<std::vector<Elt>> zeros(const Field& ext, std::uint64_t& budget) const;

private:
  struct Chart {
    int lead;  // coordinate fixed to 1
    std::vector<MPoly> basis;
  };
  const Field* base_;
  int nvars_;
  std::vector<Chart> charts_;
};

// Zeros of an affine system in the variables 0..nvars-1 (same back
// substitution as a single chart of ZeroSolver).
class AffineSolver {
public:
  AffineSolver(const Field& f, const std::vector<MPoly>& eqs, int nvars);

  bool inconsistent() const;
  std::vector<std::vector<Elt>> zeros(const Field& ext, std::uint64_t& budget) const;

private:
  const Field* base_;
  int nvars_;
  std::vector<MPoly> basis_;
};

} // namespace symcubic
