#include "ks/numeric.hpp"

#include <cmath>

namespace ks {

Rat mod1(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return r - Rat(q);
}

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

double to_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }
double to_double(const Int& n) { return mpz_get_d(n.get_mpz_t()); }

double log_int(const Int& n) {
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::string rat_string(const Rat& r) { return r.get_str(); }

std::complex<double> unit_phase(const Rat& angle) {
  const double a = to_double(mod1(angle));
  const double t = 2.0 * M_PI * a;
  return {std::cos(t), std::sin(t)};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace ks
