#include "ks/exactalg/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace ks::exactalg {

namespace {

using RatPoly = std::vector<Rat>;  // ascending, trailing zeros trimmed

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  trim(d);
  return d;
}

// remainder of a by b, b nonzero
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

int sign_of(const Rat& r) { return sgn(r); }

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::vector<Int> divisors_of(const Int& n_in) {
  Int n = abs(n_in);
  std::vector<Int> out;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  }
  return out;
}

std::string poly_display(const std::vector<Int>& c) {
  std::ostringstream os;
  bool first = true;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    const Int& q = c[static_cast<size_t>(j)];
    if (q == 0) continue;
    Int a = abs(q);
    if (first) {
      if (q < 0) os << "-";
      first = false;
    } else {
      os << (q < 0 ? "-" : "+");
    }
    if (j == 0 || a != 1) os << a.get_str();
    if (j >= 1) {
      os << "x";
      if (j >= 2) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

// Search for a quadratic x quadratic factorization of a primitive quartic.
// Returns a factor witness if one exists.
std::optional<std::vector<Int>> quartic_quadratic_factor(const std::vector<Int>& q) {
  const Int& q4 = q[4];
  const Int& q3 = q[3];
  const Int& q2 = q[2];
  const Int& q1 = q[1];
  const Int& q0 = q[0];
  // coefficient box from the Cauchy root bound
  Int maxc = 0;
  for (const Int& c : q) {
    Int ac = abs(c);
    if (ac > maxc) maxc = ac;
  }
  Int bound = 2 * q4 * (1 + maxc / q4 + 1);
  for (const Int& b2 : divisors_of(q4)) {
    Int e2 = q4 / b2;  // both positive: q4 > 0
    for (const Int& d0 : divisors_of(q0)) {
      for (int s = 0; s < 2; ++s) {
        Int b0 = (s == 0) ? d0 : -d0;
        if (q0 % b0 != 0) continue;
        Int e0 = q0 / b0;
        // q3 = b2 e1 + b1 e2 ; q1 = b1 e0 + b0 e1
        Int det = e2 * b0 - b2 * e0;
        if (det != 0) {
          Int num_b1 = q3 * b0 - q1 * b2;
          Int num_e1 = q1 * e2 - q3 * e0;
          if (num_b1 % det != 0 || num_e1 % det != 0) continue;
          Int b1 = num_b1 / det, e1 = num_e1 / det;
          if (q2 == b2 * e0 + b1 * e1 + b0 * e2)
            return std::vector<Int>{b0, b1, b2};
        } else {
          for (Int b1 = -bound; b1 <= bound; ++b1) {
            Int r = q3 - b1 * e2;
            if (r % b2 != 0) continue;
            Int e1 = r / b2;
            if (q1 == b1 * e0 + b0 * e1 && q2 == b2 * e0 + b1 * e1 + b0 * e2)
              return std::vector<Int>{b0, b1, b2};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int count_positive_real_roots(const std::vector<Int>& coeffs) {
  RatPoly p0;
  for (const Int& c : coeffs) p0.push_back(Rat(c));
  trim(p0);
  if (p0.size() < 2) return 0;
  std::vector<RatPoly> chain{p0, derivative(p0)};
  while (chain.back().size() > 1) {
    RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_zero, at_inf;
  for (const RatPoly& p : chain) {
    if (p.empty()) continue;
    at_zero.push_back(sign_of(p.front()));
    at_inf.push_back(sign_of(p.back()));
  }
  return variations(at_zero) - variations(at_inf);
}

IntPolynomial IntPolynomial::normalize(const std::vector<Int>& raw) {
  std::vector<Int> c = raw;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw ValidationError("zero polynomial");
  if (c.size() < 2) throw ValidationError("degree must be at least 1");
  if (c.front() == 0)
    throw ValidationError("constant term is zero: the root a would not be invertible");

  Int g = 0;
  for (const Int& q : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t());
  for (Int& q : c) q /= g;
  if (c.back() < 0)
    for (Int& q : c) q = -q;

  IntPolynomial P;
  P.c_ = std::move(c);
  const auto& q = P.c_;
  const int d = P.degree();

  if (d == 1) {
    if (sgn(q[0]) == sgn(q[1]))
      throw ValidationError("no positive real root != 1: root " + make_rat(-q[0], q[1]).get_str() +
                            " is not positive");
    if (q[0] + q[1] == 0) throw ValidationError("a=1 excluded");
    return P;
  }

  // Irreducibility. Rational-root test is complete for d = 2, 3; a quartic
  // additionally needs the quadratic x quadratic search.
  Int coeff_cap("1000000000000");
  if (abs(q[0]) > coeff_cap || q[d] > coeff_cap) {
    P.irr_verified_ = false;
  } else if (d <= 4) {
    for (const Int& p : divisors_of(q[0])) {
      for (const Int& s : divisors_of(q[static_cast<size_t>(d)])) {
        for (int sign = 0; sign < 2; ++sign) {
          Rat root = (sign == 0) ? make_rat(p, s) : make_rat(-p, s);
          if (P.evaluate(root) == 0) {
            std::vector<Int> factor{Int(-root.get_num()), Int(root.get_den())};
            throw ValidationError("reducible polynomial: factor (" + poly_display(factor) + ")");
          }
        }
      }
    }
    if (d == 4) {
      if (auto f = quartic_quadratic_factor(q))
        throw ValidationError("reducible polynomial: factor (" + poly_display(*f) + ")");
    }
  } else {
    P.irr_verified_ = false;
    if (P.evaluate(Rat(1)) == 0)
      throw ValidationError("reducible polynomial: factor (x-1)");
    if (P.evaluate(Rat(-1)) == 0)
      throw ValidationError("reducible polynomial: factor (x+1)");
  }

  if (count_positive_real_roots(q) == 0)
    throw ValidationError("no positive real root != 1: the polynomial defines no admissible a");
  return P;
}

IntPolynomial IntPolynomial::normalize(const std::vector<long>& raw) {
  std::vector<Int> c;
  c.reserve(raw.size());
  for (long v : raw) c.emplace_back(v);
  return normalize(c);
}

IntPolynomial IntPolynomial::reciprocal() const {
  std::vector<Int> rev(c_.rbegin(), c_.rend());
  if (rev.back() < 0)
    for (Int& q : rev) q = -q;
  IntPolynomial out;
  out.c_ = std::move(rev);
  out.irr_verified_ = irr_verified_;
  return out;
}

Rat IntPolynomial::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

std::complex<double> IntPolynomial::evaluate(const std::complex<double>& z) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

std::string IntPolynomial::display() const { return poly_display(c_); }

}  // namespace ks::exactalg
