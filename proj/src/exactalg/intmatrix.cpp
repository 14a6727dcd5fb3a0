#include "ks/exactalg/intmatrix.hpp"

#include <algorithm>

#include "ks/errors.hpp"

namespace ks::exactalg {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw ValidationError("matrix dimension mismatch");
  IntMatrix out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.c_; ++j) out.at(i, j) += aik * o.at(k, j);
    }
  return out;
}

Int IntMatrix::determinant() const {
  if (r_ != c_) throw ValidationError("determinant of non-square matrix");
  const int n = r_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

IntMatrix companion_matrix(const IntPolynomial& Q) {
  const int d = Q.degree();
  const auto& q = Q.coeffs();
  IntMatrix A(d, d);
  for (int i = 0; i + 1 < d; ++i) A.at(i, i + 1) = q[static_cast<size_t>(d)];
  for (int j = 0; j < d; ++j) A.at(d - 1, j) = -q[static_cast<size_t>(j)];
  return A;
}

std::vector<Int> cyclotomic_like(int q) {
  std::vector<Int> g(static_cast<size_t>(q) + 1, Int(0));
  g.front() = -1;
  g.back() = 1;
  return g;
}

Int resultant(const std::vector<Int>& p_in, const std::vector<Int>& g_in) {
  auto trimmed = [](std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  std::vector<Int> p = trimmed(p_in), g = trimmed(g_in);
  if (p.empty() || g.empty()) throw ValidationError("resultant of zero polynomial");
  const int dp = static_cast<int>(p.size()) - 1;
  const int dg = static_cast<int>(g.size()) - 1;
  if (dp == 0) return int_pow(p[0], static_cast<unsigned long>(dg));
  if (dg == 0) return int_pow(g[0], static_cast<unsigned long>(dp));
  const int n = dp + dg;
  IntMatrix syl(n, n);
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= dp; ++j) syl.at(i, i + j) = p[static_cast<size_t>(j)];
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j <= dg; ++j) syl.at(dg + i, i + j) = g[static_cast<size_t>(j)];
  return syl.determinant();
}

namespace {

struct SnfWork {
  IntMatrix S, U, V;
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < S.cols(); ++j) std::swap(S.at(a, j), S.at(b, j));
    for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < S.rows(); ++i) std::swap(S.at(i, a), S.at(i, b));
    for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  void row_addmul(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < S.cols(); ++j) S.at(dst, j) += f * S.at(src, j);
    for (int j = 0; j < U.cols(); ++j) U.at(dst, j) += f * U.at(src, j);
  }
  void col_addmul(int dst, int src, const Int& f) {
    for (int i = 0; i < S.rows(); ++i) S.at(i, dst) += f * S.at(i, src);
    for (int i = 0; i < V.rows(); ++i) V.at(i, dst) += f * V.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < S.cols(); ++j) S.at(r, j) = -S.at(r, j);
    for (int j = 0; j < U.cols(); ++j) U.at(r, j) = -U.at(r, j);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
  const int r = M.rows(), c = M.cols();
  SnfWork w{M, IntMatrix::identity(r), IntMatrix::identity(c)};
  const int steps = std::min(r, c);

  bool done = false;
  for (int t = 0; t < steps && !done; ++t) {
    for (;;) {
      // smallest nonzero pivot in the trailing submatrix
      int pi = -1, pj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j)
          if (w.S.at(i, j) != 0 &&
              (pi < 0 || abs(w.S.at(i, j)) < abs(w.S.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {  // rest of the matrix is zero
        done = true;
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool dirty = false;
      for (int i = t + 1; i < r; ++i) {
        if (w.S.at(i, t) == 0) continue;
        Int q = w.S.at(i, t) / w.S.at(t, t);
        if (q != 0) w.row_addmul(i, t, -q);
        if (w.S.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < c; ++j) {
        if (w.S.at(t, j) == 0) continue;
        Int q = w.S.at(t, j) / w.S.at(t, t);
        if (q != 0) w.col_addmul(j, t, -q);
        if (w.S.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // divisibility: pivot must divide the whole trailing submatrix
      bool fixed = false;
      for (int i = t + 1; i < r && !fixed; ++i)
        for (int j = t + 1; j < c && !fixed; ++j)
          if (w.S.at(i, j) % w.S.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
  for (int t = 0; t < steps; ++t)
    if (w.S.at(t, t) < 0) w.negate_row(t);
  return SmithResult{w.U, w.S, w.V};
}

}  // namespace ks::exactalg
