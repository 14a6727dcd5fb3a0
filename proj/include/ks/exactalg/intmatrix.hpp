#pragma once

#include <vector>

#include "ks/exactalg/polynomial.hpp"
#include "ks/numeric.hpp"

namespace ks::exactalg {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols)
      : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
  static IntMatrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  /// Exact determinant, fraction-free (Bareiss) elimination.
  Int determinant() const;

 private:
  int r_, c_;
  std::vector<Int> a_;
};

/// Companion-style matrix of Q: A[i][i+1] = q_d for the first d-1 rows,
/// last row A[d-1][j] = -q_j. Encodes q_d * a^j = sum_k A[j][k] a^(k-1).
IntMatrix companion_matrix(const IntPolynomial& Q);

/// Sylvester resultant of two integer polynomials (ascending coefficients,
/// rows of the first argument on top).
Int resultant(const std::vector<Int>& p, const std::vector<Int>& g);

/// x^q - 1 as an ascending coefficient vector.
std::vector<Int> cyclotomic_like(int q);

struct SmithResult {
  IntMatrix U, S, V;  // U*M*V = S, U and V unimodular, s_i | s_{i+1}, s_i >= 0
};
SmithResult smith_normal_form(const IntMatrix& M);

}  // namespace ks::exactalg
