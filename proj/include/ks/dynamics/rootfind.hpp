#pragma once

#include <complex>
#include <vector>

#include "ks/exactalg/polynomial.hpp"

namespace ks::dynamics {

struct RootEstimate {
  std::complex<double> value;
  double modulus;
  double error_radius;  // a disk around value certified to contain a root
};

struct RootFindResult {
  std::vector<RootEstimate> roots;
  int iterations = 0;
  double max_residual = 0.0;
  bool disks_disjoint = true;
};

/// Simultaneous root iteration (Aberth-Ehrlich) with Weierstrass error disks.
/// Roots straddling the unit circle within their error disk trigger extra
/// refinement rounds.
RootFindResult find_roots(const exactalg::IntPolynomial& Q, double tol = 1e-12,
                          int max_iter = 800);

}  // namespace ks::dynamics
