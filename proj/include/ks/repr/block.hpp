#pragma once

#include <complex>
#include <vector>

#include "ks/dynamics/character.hpp"
#include "ks/exactalg/belement.hpp"
#include "ks/repr/phase_matrix.hpp"

namespace ks::repr {

/// Angle of chi(b) from the Laurent data of b: sum_n m_n theta_{n mod q}.
Rat char_angle(const dynamics::Character& chi, const exactalg::BElement& b);
std::complex<double> char_eval(const dynamics::Character& chi, const exactalg::BElement& b);

/// Finite-dimensional covariant block: a q x q unitary representation built
/// from a character of least period q and a corner phase x.
///
/// (b, 0) acts as Diag(chi(b), chi(a b), ..., chi(a^{q-1} b)); the group's
/// Z-generator acts as the cyclic shift with phase x at position (q, 1),
/// which implements the covariance relation u* rho(f) u = rho(f o dual-shift)
/// and makes the evaluation multiplicative.
class BlockRep {
 public:
  BlockRep(exactalg::ParamPtr param, dynamics::Character chi, Rat x,
           bool allow_non_least = false);

  int dim() const { return chi_.q; }
  const dynamics::Character& character() const { return chi_; }
  const Rat& corner() const { return x_; }
  const exactalg::ParamPtr& context() const { return param_; }

  PhaseMatrix evaluate(const exactalg::GroupElement& g) const;
  PhaseMatrix diagonal_part(const exactalg::BElement& b) const;  // rho(b)
  PhaseMatrix shift_generator() const;                           // image of (0, 1)
  PhaseMatrix corner_unitary() const;  // u_x: x top-right, identity subdiagonal

 private:
  exactalg::ParamPtr param_;
  dynamics::Character chi_;
  Rat x_;
};

/// max over the test monomials b of ||u_x* rho(b) u_x - rho(a b)||; exactly 0
/// for any valid block (computed in exact angle arithmetic).
double verify_covariance(const BlockRep& block, const std::vector<exactalg::BElement>& tests);

/// Checks Pi(u) Pi(v) Pi(u)^{-1} = Pi(v)^m. Deviation written to *dev if given.
bool verify_relation(const BlockRep& block, long m, double tol = 1e-12,
                     double* dev = nullptr);

}  // namespace ks::repr
