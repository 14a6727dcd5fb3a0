#pragma once

#include <map>
#include <vector>

#include "ks/exactalg/parameter.hpp"
#include "ks/numeric.hpp"

namespace ks::exactalg {

/// Element of B_a, the additive group of finite sums sum_n m_n a^n.
///
/// Two representations are kept side by side: the integer Laurent monomial
/// list {n -> m_n} (the data characters evaluate on) and, for algebraic a,
/// the canonical rational vector in the basis 1, a, ..., a^(d-1) obtained by
/// reduction modulo Q_a (the data equality is decided on).
class BElement {
 public:
  explicit BElement(ParamPtr ctx);  // zero element
  static BElement monomial(ParamPtr ctx, long n, Int coeff = 1);

  const std::map<long, Int>& monomials() const { return mono_; }
  const std::vector<Rat>& canonical() const { return canon_; }
  const ParamPtr& context() const { return ctx_; }
  bool is_zero() const;

  friend BElement b_add(const BElement& a, const BElement& b);
  friend BElement b_neg(const BElement& a);
  friend BElement b_scale(const BElement& a, const Int& k);
  friend BElement b_shift(const BElement& a, long n);
  friend bool b_eq(const BElement& a, const BElement& b);

 private:
  ParamPtr ctx_;
  std::map<long, Int> mono_;
  std::vector<Rat> canon_;
};

BElement b_add(const BElement& a, const BElement& b);
BElement b_neg(const BElement& a);
BElement b_scale(const BElement& a, const Int& k);
BElement b_shift(const BElement& a, long n);  // multiplication by a^n
bool b_eq(const BElement& a, const BElement& b);

/// Canonical vector of a^n in the basis 1, a, ..., a^(d-1).
std::vector<Rat> monomial_canonical(const IntPolynomial& Q, long n);

void require_same_context(const ParamPtr& a, const ParamPtr& b);

/// Element (b, l) of G_a = B_a x| Z with law (b,l)(b',l') = (b + a^l b', l+l').
struct GroupElement {
  BElement b;
  long l;
};

GroupElement g_identity(ParamPtr ctx);
GroupElement g_u(ParamPtr ctx);  // (0, 1)
GroupElement g_v(ParamPtr ctx);  // (1, 0)
GroupElement g_compose(const GroupElement& g, const GroupElement& h);
GroupElement g_inverse(const GroupElement& g);
bool g_eq(const GroupElement& g, const GroupElement& h);

}  // namespace ks::exactalg
