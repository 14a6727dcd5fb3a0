#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "ks/numeric.hpp"

namespace ks::repr {

/// Exact generalized permutation matrix: every entry is either zero or a
/// unit phase e^{2 pi i r} with rational angle r. Closed under products and
/// adjoints, so group-element images can be compared exactly.
class PhaseMatrix {
 public:
  explicit PhaseMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static PhaseMatrix identity(int n);
  static PhaseMatrix diagonal(const std::vector<Rat>& angles);

  int dim() const { return n_; }
  const std::optional<Rat>& entry(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }
  void set(int i, int j, Rat angle);
  void clear(int i, int j);

  PhaseMatrix operator*(const PhaseMatrix& o) const;
  PhaseMatrix adjoint() const;
  PhaseMatrix pow(long k) const;
  bool operator==(const PhaseMatrix& o) const;

  bool is_generalized_permutation() const;  // exactly one entry per row and column
  Eigen::MatrixXcd dense() const;
  std::complex<double> trace() const;

  /// Largest absolute entry-wise difference (0 exactly when equal).
  double max_abs_diff(const PhaseMatrix& o) const;

 private:
  int n_;
  std::vector<std::optional<Rat>> a_;
};

/// ||M* M - I|| for a dense matrix (operator norm).
double unitarity_deviation(const Eigen::MatrixXcd& m);

/// ||u* rho u - rho_shift|| for dense matrices (operator norm).
double dense_covariance_deviation(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& rho_shift,
                                  const Eigen::MatrixXcd& u);

double operator_norm(const Eigen::MatrixXcd& m);

}  // namespace ks::repr
