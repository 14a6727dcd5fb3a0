#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ks/errors.hpp"
#include "ks/numeric.hpp"

namespace ks::exactalg {

/// Primitive integer polynomial q_0 + q_1 x + ... + q_d x^d defining a
/// parameter a as its positive real root.
///
/// normalize() enforces the admissibility constraints: gcd of coefficients 1,
/// q_d > 0, q_0 != 0, irreducibility over Q (certified for d <= 4, flagged
/// unverified beyond), and existence of a positive real root != 1.
class IntPolynomial {
 public:
  static IntPolynomial normalize(const std::vector<Int>& raw);
  static IntPolynomial normalize(const std::vector<long>& raw);

  const std::vector<Int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& leading() const { return c_.back(); }
  const Int& constant() const { return c_.front(); }
  bool irreducibility_verified() const { return irr_verified_; }

  /// Reversed-coefficient polynomial (defines the parameter 1/a).
  IntPolynomial reciprocal() const;

  Rat evaluate(const Rat& x) const;
  std::complex<double> evaluate(const std::complex<double>& z) const;

  /// Human-readable form, e.g. "x^2-x-1".
  std::string display() const;

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

 private:
  IntPolynomial() = default;
  std::vector<Int> c_;
  bool irr_verified_ = true;
};

/// Number of distinct real roots in (0, +infinity), exact Sturm-chain count.
int count_positive_real_roots(const std::vector<Int>& coeffs);

}  // namespace ks::exactalg
