#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ks/exactalg/polynomial.hpp"

namespace ks::exactalg {

/// Physical inputs: a = exp(-omega0/kappa).
struct DeformationParams {
  double kappa;
  double omega0;
};

struct ParamsToA {
  double a;
  std::optional<IntPolynomial> rational_candidate;  // l*x - m when a is recognized as m/l
};

/// Evaluates a = exp(-omega0/kappa); recognizes small rationals to 1e-12.
ParamsToA params_to_a(const DeformationParams& p);

class Param;
using ParamPtr = std::shared_ptr<const Param>;

/// The deformation parameter: either algebraic (with its defining primitive
/// integer polynomial) or transcendental (purely formal, no numeric value).
class Param {
 public:
  static ParamPtr algebraic(IntPolynomial Q);
  static ParamPtr transcendental();

  bool is_algebraic() const { return poly_.has_value(); }
  const IntPolynomial& poly() const;
  int degree() const { return poly_ ? poly_->degree() : 0; }
  std::string display() const;

  bool same_context(const Param& o) const;

 private:
  Param() = default;
  std::optional<IntPolynomial> poly_;
};

}  // namespace ks::exactalg
