#include "ks/dynamics/classify.hpp"

#include <cmath>
#include <numeric>

#include "ks/dynamics/invariants.hpp"
#include "ks/errors.hpp"

namespace ks::dynamics {

ClassificationVerdict classify(const exactalg::ParamPtr& a, const exactalg::ParamPtr& b,
                               int qmax, double tol) {
  if (!a || !b) throw ValidationError("null parameter");
  ClassificationVerdict v;

  if (!a->is_algebraic() && !b->is_algebraic()) {
    v.outcome = ClassificationVerdict::Outcome::IndistinguishableUpTo;
    v.up_to = std::nullopt;
    v.notes.push_back("both transcendental: the algebras are isomorphic");
    return v;
  }
  if (a->is_algebraic() != b->is_algebraic()) {
    v.outcome = ClassificationVerdict::Outcome::Distinguished;
    v.entropy_gap = true;
    v.notes.push_back("one parameter algebraic (finite entropy), one transcendental (infinite)");
    return v;
  }

  const auto& QA = a->poly();
  const auto& QB = b->poly();
  if (QA.reciprocal() == QB || QA == QB) {
    v.reciprocal_pair = true;
    v.notes.push_back(QA == QB ? "identical polynomials"
                               : "reciprocal pair: expected isomorphic (a' = 1/a)");
  }
  for (int q = 1; q <= qmax; ++q) {
    if (fixed_count(QA, q) != fixed_count(QB, q)) {
      v.outcome = ClassificationVerdict::Outcome::Distinguished;
      v.witness_q = q;
      v.notes.push_back("c_" + std::to_string(q) + " differs: " + fixed_count(QA, q).get_str() +
                        " vs " + fixed_count(QB, q).get_str());
      return v;
    }
  }
  auto ha = entropy(QA, 1e-12);
  auto hb = entropy(QB, 1e-12);
  if (std::abs(ha.value - hb.value) > ha.error_bound + hb.error_bound + tol) {
    v.outcome = ClassificationVerdict::Outcome::Distinguished;
    v.entropy_gap = true;
    v.notes.push_back("entropy differs beyond combined error: " + std::to_string(ha.value) +
                      " vs " + std::to_string(hb.value));
    return v;
  }
  v.outcome = ClassificationVerdict::Outcome::IndistinguishableUpTo;
  v.up_to = qmax;
  return v;
}

KGroups k_groups(long m, long l) {
  if (m <= 0 || l <= 0) throw ValidationError("m and l must be positive");
  if (std::gcd(m, l) != 1) throw ValidationError("m/l must be in lowest terms");
  if (m == l) throw ValidationError("a=1 excluded");
  KGroups k;
  k.m = m;
  k.l = l;
  k.torsion = std::labs(l - m);
  k.k0_display = "Z";
  k.k1_display = (k.torsion == 1) ? "Z" : ("Z + Z_" + std::to_string(k.torsion));
  return k;
}

}  // namespace ks::dynamics
