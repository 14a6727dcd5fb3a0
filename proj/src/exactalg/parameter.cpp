#include "ks/exactalg/parameter.hpp"

#include <cmath>

#include "ks/errors.hpp"

namespace ks::exactalg {

ParamsToA params_to_a(const DeformationParams& p) {
  if (!(p.kappa > 0) || !std::isfinite(p.kappa) || !std::isfinite(p.omega0))
    throw ValidationError("invalid-parameter: kappa must be positive and finite");
  const double a = std::exp(-p.omega0 / p.kappa);
  if (!(a > 0) || !std::isfinite(a))
    throw ValidationError("invalid-parameter: a = exp(-omega0/kappa) out of range");

  // continued-fraction recognition of a small rational m/l
  const double tol = 1e-12;
  long long p0 = 1, p1 = static_cast<long long>(std::floor(a));
  long long q0 = 0, q1 = 1;
  double x = a;
  std::optional<std::pair<long long, long long>> found;
  for (int it = 0; it < 40; ++it) {
    if (std::abs(a - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
      found = {p1, q1};
      break;
    }
    double frac = x - std::floor(x);
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    long long digit = static_cast<long long>(std::floor(x));
    long long p2 = digit * p1 + p0, q2 = digit * q1 + q0;
    if (q2 > 1000000 || q2 <= 0) break;
    p0 = p1;
    p1 = p2;
    q0 = q1;
    q1 = q2;
  }

  ParamsToA out{a, std::nullopt};
  if (found) {
    auto [m, l] = *found;
    if (m == l) throw ValidationError("a=1 excluded");
    out.rational_candidate = IntPolynomial::normalize(std::vector<long>{-m, l});
    return out;
  }
  if (a == 1.0) throw ValidationError("a=1 excluded");
  return out;
}

ParamPtr Param::algebraic(IntPolynomial Q) {
  auto p = std::shared_ptr<Param>(new Param());
  p->poly_ = std::move(Q);
  return p;
}

ParamPtr Param::transcendental() { return std::shared_ptr<Param>(new Param()); }

const IntPolynomial& Param::poly() const {
  if (!poly_) throw ValidationError("transcendental parameter carries no polynomial");
  return *poly_;
}

std::string Param::display() const {
  return poly_ ? poly_->display() : std::string("transcendental");
}

bool Param::same_context(const Param& o) const {
  if (this == &o) return true;
  if (is_algebraic() != o.is_algebraic()) return false;
  if (!is_algebraic()) return true;
  return *poly_ == *o.poly_;
}

}  // namespace ks::exactalg
