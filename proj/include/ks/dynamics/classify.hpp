#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ks/dynamics/entropy.hpp"
#include "ks/exactalg/parameter.hpp"

namespace ks::dynamics {

/// Invariant-based comparison of two parameters. Distinguished means the
/// algebras cannot be isomorphic; the converse direction is not computed.
struct ClassificationVerdict {
  enum class Outcome { Distinguished, IndistinguishableUpTo };
  Outcome outcome = Outcome::IndistinguishableUpTo;
  std::optional<int> witness_q;   // first q with c_q(a) != c_q(a')
  bool entropy_gap = false;
  std::optional<int> up_to;       // qmax checked; nullopt = unconditional
  bool reciprocal_pair = false;
  std::vector<std::string> notes;

  bool distinguished() const { return outcome == Outcome::Distinguished; }
};

ClassificationVerdict classify(const exactalg::ParamPtr& a, const exactalg::ParamPtr& b,
                               int qmax, double tol);

/// K-theory of U_{m/l}: K0 = Z, K1 = Z + Z_{|l-m|} (torsion order 1 is trivial).
struct KGroups {
  long m = 0, l = 0;
  long torsion = 0;
  std::string k0_display;
  std::string k1_display;
};

KGroups k_groups(long m, long l);

}  // namespace ks::dynamics
