#include "ks/repr/phase_matrix.hpp"

#include <stdexcept>

#include "ks/errors.hpp"

namespace ks::repr {

PhaseMatrix PhaseMatrix::identity(int n) {
  PhaseMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rat(0));
  return m;
}

PhaseMatrix PhaseMatrix::diagonal(const std::vector<Rat>& angles) {
  PhaseMatrix m(static_cast<int>(angles.size()));
  for (int i = 0; i < m.n_; ++i) m.set(i, i, angles[static_cast<size_t>(i)]);
  return m;
}

void PhaseMatrix::set(int i, int j, Rat angle) {
  a_[static_cast<size_t>(i) * n_ + j] = mod1(angle);
}

void PhaseMatrix::clear(int i, int j) { a_[static_cast<size_t>(i) * n_ + j].reset(); }

PhaseMatrix PhaseMatrix::operator*(const PhaseMatrix& o) const {
  if (n_ != o.n_) throw ValidationError("phase matrix dimension mismatch");
  PhaseMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const auto& aik = entry(i, k);
      if (!aik) continue;
      for (int j = 0; j < n_; ++j) {
        const auto& bkj = o.entry(k, j);
        if (!bkj) continue;
        if (out.entry(i, j))
          throw std::logic_error("phase matrix product is not a generalized permutation");
        out.set(i, j, *aik + *bkj);
      }
    }
  return out;
}

PhaseMatrix PhaseMatrix::adjoint() const {
  PhaseMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (entry(i, j)) out.set(j, i, -*entry(i, j));
  return out;
}

PhaseMatrix PhaseMatrix::pow(long k) const {
  PhaseMatrix base = (k >= 0) ? *this : adjoint();
  long e = (k >= 0) ? k : -k;
  PhaseMatrix acc = identity(n_);
  for (long i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

bool PhaseMatrix::operator==(const PhaseMatrix& o) const {
  if (n_ != o.n_) return false;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].has_value() != o.a_[i].has_value()) return false;
    if (a_[i] && *a_[i] != *o.a_[i]) return false;
  }
  return true;
}

bool PhaseMatrix::is_generalized_permutation() const {
  for (int i = 0; i < n_; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < n_; ++j) {
      if (entry(i, j)) ++row;
      if (entry(j, i)) ++col;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

Eigen::MatrixXcd PhaseMatrix::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (entry(i, j)) m(i, j) = unit_phase(*entry(i, j));
  return m;
}

std::complex<double> PhaseMatrix::trace() const {
  std::complex<double> t = 0.0;
  for (int i = 0; i < n_; ++i)
    if (entry(i, i)) t += unit_phase(*entry(i, i));
  return t;
}

double PhaseMatrix::max_abs_diff(const PhaseMatrix& o) const {
  if (*this == o) return 0.0;
  Eigen::MatrixXcd d = dense() - o.dense();
  return d.cwiseAbs().maxCoeff();
}

double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double unitarity_deviation(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd d = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return operator_norm(d);
}

double dense_covariance_deviation(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& rho_shift,
                                  const Eigen::MatrixXcd& u) {
  return operator_norm(u.adjoint() * rho * u - rho_shift);
}

}  // namespace ks::repr
