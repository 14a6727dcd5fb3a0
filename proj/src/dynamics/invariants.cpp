#include "ks/dynamics/invariants.hpp"

#include <algorithm>

#include "ks/errors.hpp"

namespace ks::dynamics {

using exactalg::IntMatrix;
using exactalg::IntPolynomial;

Int fixed_count(const IntPolynomial& Q, int q) {
  if (q < 1) throw ValidationError("period q must be >= 1");
  Int r = abs(exactalg::resultant(Q.coeffs(), exactalg::cyclotomic_like(q)));
  if (r == 0)
    throw ValidationError("polynomial shares a root with x^" + std::to_string(q) +
                          "-1; not an admissible parameter");
  return r;
}

int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Int least_period_count(const IntPolynomial& Q, int q) {
  if (q < 1) throw ValidationError("period q must be >= 1");
  Int acc = 0;
  for (int e = 1; e <= q; ++e)
    if (q % e == 0) acc += Int(moebius(q / e)) * fixed_count(Q, e);
  return acc;
}

IntMatrix circulant_system(const IntPolynomial& Q, int q) {
  IntMatrix C(q, q);
  const auto& coeffs = Q.coeffs();
  for (int n = 0; n < q; ++n)
    for (size_t j = 0; j < coeffs.size(); ++j)
      C.at(n, (n + static_cast<int>(j)) % q) += coeffs[j];
  return C;
}

std::vector<Character> enumerate_characters(const IntPolynomial& Q, int q, long guard) {
  Int count = fixed_count(Q, q);
  if (count > guard)
    throw GuardExceeded("enumeration refused: c_" + std::to_string(q) + " = " + count.get_str() +
                        " exceeds the guard " + std::to_string(guard) +
                        "; the count-only answer is available via fixed_count");

  IntMatrix C = circulant_system(Q, q);
  auto snf = exactalg::smith_normal_form(C);

  // torus solutions of C*theta = 0 (mod Z^q): theta = V*y with y_i in (1/s_i)Z
  std::vector<long> s(static_cast<size_t>(q));
  Int check = 1;
  for (int i = 0; i < q; ++i) {
    const Int& si = snf.S.at(i, i);
    if (si == 0)
      throw ValidationError("circulant system is singular; parameter not admissible");
    s[static_cast<size_t>(i)] = si.get_si();
    check *= si;
  }
  if (check != count)
    throw std::logic_error("Smith diagonal product disagrees with the resultant count");

  std::vector<Character> out;
  out.reserve(static_cast<size_t>(count.get_ui()));
  std::vector<long> digits(static_cast<size_t>(q), 0);
  for (;;) {
    std::vector<Rat> theta(static_cast<size_t>(q), Rat(0));
    for (int i = 0; i < q; ++i) {
      if (digits[static_cast<size_t>(i)] == 0) continue;
      Rat yi = make_rat(Int(digits[static_cast<size_t>(i)]), Int(s[static_cast<size_t>(i)]));
      for (int r = 0; r < q; ++r) theta[static_cast<size_t>(r)] += Rat(snf.V.at(r, i)) * yi;
    }
    for (Rat& t : theta) t = mod1(t);
    out.push_back(make_character(std::move(theta)));

    int pos = q - 1;
    while (pos >= 0) {
      if (++digits[static_cast<size_t>(pos)] < s[static_cast<size_t>(pos)]) break;
      digits[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  if (Int(static_cast<long>(out.size())) != count)
    throw std::logic_error("enumeration produced a wrong number of characters");
  return out;
}

std::vector<GrowthRow> entropy_growth_check(const IntPolynomial& Q, int qmax) {
  if (qmax < 2) throw ValidationError("qmax must be >= 2");
  std::vector<GrowthRow> rows;
  rows.reserve(static_cast<size_t>(qmax));
  for (int q = 1; q <= qmax; ++q) {
    Int c = fixed_count(Q, q);
    rows.push_back({q, c, log_int(c) / q});
  }
  return rows;
}

}  // namespace ks::dynamics
