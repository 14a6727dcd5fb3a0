#include "ks/dynamics/rootfind.hpp"

#include <algorithm>
#include <cmath>

#include "ks/errors.hpp"

namespace ks::dynamics {

namespace {

using C = std::complex<long double>;

C horner(const std::vector<long double>& c, const C& z) {
  C acc = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

RootFindResult find_roots(const exactalg::IntPolynomial& Q, double tol, int max_iter) {
  const int d = Q.degree();
  std::vector<long double> monic(static_cast<size_t>(d) + 1);
  const long double lead = static_cast<long double>(Q.leading().get_d());
  for (int j = 0; j <= d; ++j)
    monic[static_cast<size_t>(j)] =
        static_cast<long double>(Q.coeffs()[static_cast<size_t>(j)].get_d()) / lead;
  std::vector<long double> deriv(static_cast<size_t>(d));
  for (int j = 1; j <= d; ++j) deriv[static_cast<size_t>(j - 1)] = j * monic[static_cast<size_t>(j)];

  // Cauchy-bound circle of initial guesses, irrational angle step
  long double radius = 0.0L;
  for (int j = 0; j < d; ++j) radius = std::max(radius, std::abs(monic[static_cast<size_t>(j)]));
  radius = 1.0L + radius;
  std::vector<C> z(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    long double th = 2.0L * static_cast<long double>(M_PI) *
                         (0.26894L + static_cast<long double>(i) / d) +
                     0.09L * i;
    z[static_cast<size_t>(i)] = radius * C(std::cos(th), std::sin(th));
  }

  RootFindResult out;
  const long double eps = static_cast<long double>(tol);
  int it = 0;
  for (int round = 0; round < 3; ++round) {
    for (; it < max_iter; ++it) {
      long double worst = 0.0L;
      for (int i = 0; i < d; ++i) {
        C zi = z[static_cast<size_t>(i)];
        C p = horner(monic, zi);
        C dp = horner(deriv, zi);
        C newton = (dp == C(0.0L)) ? C(0.0L) : p / dp;
        C sum = 0.0L;
        for (int j = 0; j < d; ++j)
          if (j != i) sum += C(1.0L) / (zi - z[static_cast<size_t>(j)]);
        C denom = C(1.0L) - newton * sum;
        C step = (denom == C(0.0L)) ? newton : newton / denom;
        z[static_cast<size_t>(i)] = zi - step;
        worst = std::max(worst, std::abs(step));
      }
      if (worst < eps * 0.5L) break;
    }

    // Weierstrass corrections give certified disks (union contains all roots)
    bool near_circle = false;
    out.max_residual = 0.0;
    out.roots.assign(static_cast<size_t>(d), {});
    for (int i = 0; i < d; ++i) {
      C zi = z[static_cast<size_t>(i)];
      C denom = 1.0L;
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= zi - z[static_cast<size_t>(j)];
      long double w = (denom == C(0.0L)) ? 1.0L : std::abs(horner(monic, zi) / denom);
      double rad = static_cast<double>(d * w);
      auto& r = out.roots[static_cast<size_t>(i)];
      r.value = {static_cast<double>(zi.real()), static_cast<double>(zi.imag())};
      r.modulus = std::abs(r.value);
      r.error_radius = rad;
      out.max_residual = std::max(out.max_residual, static_cast<double>(std::abs(horner(monic, zi))));
      if (std::abs(r.modulus - 1.0) <= rad && rad > 1e-17) near_circle = true;
    }
    if (!near_circle) break;
  }
  out.iterations = it;

  for (size_t i = 0; i < out.roots.size() && out.disks_disjoint; ++i)
    for (size_t j = i + 1; j < out.roots.size(); ++j)
      if (std::abs(out.roots[i].value - out.roots[j].value) <=
          out.roots[i].error_radius + out.roots[j].error_radius) {
        out.disks_disjoint = false;
        break;
      }

  if (out.max_residual > tol)
    throw ValidationError("root finder did not converge: residual " +
                          std::to_string(out.max_residual) + " after " +
                          std::to_string(out.iterations) + " iterations");
  return out;
}

}  // namespace ks::dynamics
