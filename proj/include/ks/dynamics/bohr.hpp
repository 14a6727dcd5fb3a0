#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ks/exactalg/polynomial.hpp"
#include "ks/numeric.hpp"

namespace ks::dynamics {

/// Torus points z_k = q_d^{-k} A^k phi (angles mod 1, exact rational
/// arithmetic) for k in [kmin, kmax]. Satisfies q_d z_{k+1} = A z_k exactly.
std::map<long, std::vector<Rat>> bohr_embed(const exactalg::IntPolynomial& Q,
                                            const std::vector<Rat>& phi, long kmin, long kmax);

/// Smallest period p <= qmax with z_{k+p} = z_k across the window, if any.
/// nullopt is the window's aperiodicity witness.
std::optional<int> bohr_window_period(const std::map<long, std::vector<Rat>>& orbit, int qmax);

}  // namespace ks::dynamics
