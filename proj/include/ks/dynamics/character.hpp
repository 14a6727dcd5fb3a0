#pragma once

#include <vector>

#include "ks/exactalg/polynomial.hpp"
#include "ks/numeric.hpp"

namespace ks::dynamics {

/// A q-periodic character of B_a, stored as the torus angles
/// theta_n = arg chi(a^n) / 2pi for n = 0..q-1 (indices mod q).
struct Character {
  int q = 1;
  std::vector<Rat> angles;  // each in [0,1)
  int least_period = 1;

  bool is_least() const { return least_period == q; }
};

/// Builds a character from raw angles: reduces mod 1 and finds the least period.
Character make_character(std::vector<Rat> angles);

/// Exact check of the defining recursion sum_j q_j theta_{(n+j) mod q} = 0 (mod 1).
bool satisfies_recursion(const exactalg::IntPolynomial& Q, const Character& chi);

/// The dual-automorphism action: theta_n -> theta_{n+1}.
Character shift_character(const Character& chi);

bool operator==(const Character& a, const Character& b);

}  // namespace ks::dynamics
