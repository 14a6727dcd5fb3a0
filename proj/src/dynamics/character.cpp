#include "ks/dynamics/character.hpp"

#include "ks/errors.hpp"

namespace ks::dynamics {

Character make_character(std::vector<Rat> angles) {
  if (angles.empty()) throw ValidationError("character needs at least one angle");
  Character chi;
  chi.q = static_cast<int>(angles.size());
  for (Rat& a : angles) a = mod1(a);
  chi.angles = std::move(angles);
  for (int p = 1; p <= chi.q; ++p) {
    if (chi.q % p != 0) continue;
    bool periodic = true;
    for (int n = 0; n < chi.q && periodic; ++n)
      periodic = chi.angles[static_cast<size_t>(n)] ==
                 chi.angles[static_cast<size_t>((n + p) % chi.q)];
    if (periodic) {
      chi.least_period = p;
      break;
    }
  }
  return chi;
}

bool satisfies_recursion(const exactalg::IntPolynomial& Q, const Character& chi) {
  const auto& q = Q.coeffs();
  for (int n = 0; n < chi.q; ++n) {
    Rat acc = 0;
    for (size_t j = 0; j < q.size(); ++j)
      acc += Rat(q[j]) * chi.angles[static_cast<size_t>((n + static_cast<int>(j)) % chi.q)];
    if (mod1(acc) != 0) return false;
  }
  return true;
}

Character shift_character(const Character& chi) {
  std::vector<Rat> rotated(chi.angles.begin() + 1, chi.angles.end());
  rotated.push_back(chi.angles.front());
  return make_character(std::move(rotated));
}

bool operator==(const Character& a, const Character& b) {
  return a.q == b.q && a.angles == b.angles;
}

}  // namespace ks::dynamics
