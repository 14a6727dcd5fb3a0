#pragma once

#include <vector>

#include "ks/dynamics/character.hpp"
#include "ks/exactalg/intmatrix.hpp"
#include "ks/exactalg/polynomial.hpp"

namespace ks::dynamics {

/// Number of characters fixed by the q-th power of the dual automorphism
/// (period dividing q): |Res(Q, x^q - 1)|. Always >= 1.
Int fixed_count(const exactalg::IntPolynomial& Q, int q);

/// Number of characters of exact period q: Moebius inversion over divisors.
Int least_period_count(const exactalg::IntPolynomial& Q, int q);

int moebius(int n);

inline constexpr long kEnumerationGuard = 1000000;

/// All characters with period dividing q, via the q x q circulant system
/// C theta = 0 (mod Z^q) solved by Smith normal form. Returns exactly
/// fixed_count(Q, q) characters, each satisfying the recursion exactly.
std::vector<Character> enumerate_characters(const exactalg::IntPolynomial& Q, int q,
                                            long guard = kEnumerationGuard);

/// The circulant matrix whose n-th row holds the coefficients of
/// Q(x) * x^n reduced mod (x^q - 1).
exactalg::IntMatrix circulant_system(const exactalg::IntPolynomial& Q, int q);

struct GrowthRow {
  int q;
  Int c;
  double log_c_over_q;
};

/// Convergence table of log(c_q)/q toward the entropy.
std::vector<GrowthRow> entropy_growth_check(const exactalg::IntPolynomial& Q, int qmax);

}  // namespace ks::dynamics
