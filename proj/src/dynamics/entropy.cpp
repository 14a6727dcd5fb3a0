#include "ks/dynamics/entropy.hpp"

#include <cmath>
#include <limits>

#include "ks/errors.hpp"

namespace ks::dynamics {

EntropyReport entropy(const exactalg::IntPolynomial& Q, double tol) {
  if (!(tol > 0)) throw ValidationError("tolerance must be positive");
  EntropyReport rep;
  rep.qd_term = log_int(Q.leading());
  auto roots = find_roots(Q, tol);
  rep.roots = roots.roots;
  double h = rep.qd_term;
  double err = 0.0;
  for (const auto& r : rep.roots) {
    if (r.modulus > 1.0) {
      h += std::log(r.modulus);
      // |d log|z|| <= radius / (|z| - radius) on the certified disk
      double margin = r.modulus - r.error_radius;
      err += (margin > 0) ? r.error_radius / margin : 1.0;
    } else {
      // a root whose disk still straddles the circle contributes its worst case
      if (r.modulus + r.error_radius > 1.0)
        err += std::log(r.modulus + r.error_radius) - std::log(std::max(r.modulus, 1e-300));
    }
  }
  rep.value = h;
  rep.error_bound = err;
  return rep;
}

EntropyReport entropy(const exactalg::ParamPtr& param, double tol) {
  if (!param) throw ValidationError("null parameter");
  if (!param->is_algebraic()) {
    EntropyReport rep;
    rep.transcendental = true;
    rep.value = std::numeric_limits<double>::infinity();
    return rep;
  }
  return entropy(param->poly(), tol);
}

}  // namespace ks::dynamics
