#pragma once

#include <vector>

#include "ks/dynamics/rootfind.hpp"
#include "ks/exactalg/parameter.hpp"

namespace ks::dynamics {

/// Topological entropy log|q_d| + sum_{|r|>1} log|r|, with root error bounds;
/// +infinity in the transcendental case.
struct EntropyReport {
  double value = 0.0;
  bool transcendental = false;
  double qd_term = 0.0;
  std::vector<RootEstimate> roots;
  double error_bound = 0.0;
};

EntropyReport entropy(const exactalg::ParamPtr& param, double tol = 1e-12);
EntropyReport entropy(const exactalg::IntPolynomial& Q, double tol = 1e-12);

}  // namespace ks::dynamics
