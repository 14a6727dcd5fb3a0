#include "ks/exactalg/belement.hpp"

#include <algorithm>

#include "ks/errors.hpp"

namespace ks::exactalg {

namespace {

// multiply a canonical vector by a (reduce a^d via Q) or by a^(-1) (via q_0)
void mul_by_a(const IntPolynomial& Q, std::vector<Rat>& v) {
  const int d = Q.degree();
  const auto& q = Q.coeffs();
  Rat top = v[static_cast<size_t>(d - 1)];
  for (int j = d - 1; j >= 1; --j) v[static_cast<size_t>(j)] = v[static_cast<size_t>(j - 1)];
  v[0] = 0;
  if (top != 0)
    for (int j = 0; j < d; ++j)
      v[static_cast<size_t>(j)] -= top * make_rat(q[static_cast<size_t>(j)], q[static_cast<size_t>(d)]);
}

void div_by_a(const IntPolynomial& Q, std::vector<Rat>& v) {
  const int d = Q.degree();
  const auto& q = Q.coeffs();
  Rat low = v[0];
  for (int j = 0; j + 1 < d; ++j) v[static_cast<size_t>(j)] = v[static_cast<size_t>(j + 1)];
  v[static_cast<size_t>(d - 1)] = 0;
  if (low != 0)
    for (int j = 0; j < d; ++j)
      v[static_cast<size_t>(j)] -= low * make_rat(q[static_cast<size_t>(j + 1)], q[0]);
}

std::vector<Rat> canonical_of(const IntPolynomial& Q, const std::map<long, Int>& mono) {
  const int d = Q.degree();
  std::vector<Rat> acc(static_cast<size_t>(d), Rat(0));
  if (mono.empty()) return acc;
  // walk the exponents in ascending order, sliding a power vector along
  long pos = mono.begin()->first;
  std::vector<Rat> pw = monomial_canonical(Q, pos);
  for (const auto& [n, m] : mono) {
    while (pos < n) {
      mul_by_a(Q, pw);
      ++pos;
    }
    for (int j = 0; j < d; ++j) acc[static_cast<size_t>(j)] += Rat(m) * pw[static_cast<size_t>(j)];
  }
  return acc;
}

}  // namespace

std::vector<Rat> monomial_canonical(const IntPolynomial& Q, long n) {
  std::vector<Rat> v(static_cast<size_t>(Q.degree()), Rat(0));
  v[0] = 1;
  for (long i = 0; i < n; ++i) mul_by_a(Q, v);
  for (long i = 0; i > n; --i) div_by_a(Q, v);
  return v;
}

void require_same_context(const ParamPtr& a, const ParamPtr& b) {
  if (!a || !b) throw ContextMismatch("element without a parameter context");
  if (!a->same_context(*b))
    throw ContextMismatch("mixing elements from different parameter contexts: " + a->display() +
                          " vs " + b->display());
}

BElement::BElement(ParamPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw ValidationError("null parameter context");
  if (ctx_->is_algebraic()) canon_.assign(static_cast<size_t>(ctx_->degree()), Rat(0));
}

BElement BElement::monomial(ParamPtr ctx, long n, Int coeff) {
  BElement b(std::move(ctx));
  if (coeff != 0) {
    b.mono_[n] = coeff;
    if (b.ctx_->is_algebraic()) b.canon_ = canonical_of(b.ctx_->poly(), b.mono_);
  }
  return b;
}

bool BElement::is_zero() const {
  if (ctx_->is_algebraic())
    return std::all_of(canon_.begin(), canon_.end(), [](const Rat& r) { return r == 0; });
  return mono_.empty();
}

BElement b_add(const BElement& a, const BElement& b) {
  require_same_context(a.ctx_, b.ctx_);
  BElement out = a;
  for (const auto& [n, m] : b.mono_) {
    Int& slot = out.mono_[n];
    slot += m;
    if (slot == 0) out.mono_.erase(n);
  }
  for (size_t j = 0; j < out.canon_.size(); ++j) out.canon_[j] += b.canon_[j];
  return out;
}

BElement b_neg(const BElement& a) {
  BElement out = a;
  for (auto& [n, m] : out.mono_) m = -m;
  for (auto& c : out.canon_) c = -c;
  return out;
}

BElement b_scale(const BElement& a, const Int& k) {
  if (k == 0) return BElement(a.ctx_);
  BElement out = a;
  for (auto& [n, m] : out.mono_) m *= k;
  for (auto& c : out.canon_) c *= Rat(k);
  return out;
}

BElement b_shift(const BElement& a, long n) {
  if (n == 0) return a;
  BElement out(a.ctx_);
  for (const auto& [k, m] : a.mono_) out.mono_[k + n] = m;
  if (a.ctx_->is_algebraic()) {
    out.canon_ = a.canon_;
    const auto& Q = a.ctx_->poly();
    for (long i = 0; i < n; ++i) mul_by_a(Q, out.canon_);
    for (long i = 0; i > n; --i) div_by_a(Q, out.canon_);
  }
  return out;
}

bool b_eq(const BElement& a, const BElement& b) {
  require_same_context(a.ctx_, b.ctx_);
  if (a.ctx_->is_algebraic()) return a.canon_ == b.canon_;
  return a.mono_ == b.mono_;
}

GroupElement g_identity(ParamPtr ctx) { return {BElement(std::move(ctx)), 0}; }
GroupElement g_u(ParamPtr ctx) { return {BElement(std::move(ctx)), 1}; }
GroupElement g_v(ParamPtr ctx) { return {BElement::monomial(std::move(ctx), 0, 1), 0}; }

GroupElement g_compose(const GroupElement& g, const GroupElement& h) {
  return {b_add(g.b, b_shift(h.b, g.l)), g.l + h.l};
}

GroupElement g_inverse(const GroupElement& g) {
  return {b_neg(b_shift(g.b, -g.l)), -g.l};
}

bool g_eq(const GroupElement& g, const GroupElement& h) {
  return g.l == h.l && b_eq(g.b, h.b);
}

}  // namespace ks::exactalg
