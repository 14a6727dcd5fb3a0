#include "ks/dynamics/bohr.hpp"

#include "ks/errors.hpp"
#include "ks/exactalg/intmatrix.hpp"

namespace ks::dynamics {

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix rational_inverse(const exactalg::IntMatrix& A) {
  const int n = A.rows();
  RatMatrix m(static_cast<size_t>(n), std::vector<Rat>(2 * static_cast<size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(A.at(i, j));
    m[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw ValidationError("companion matrix is singular");
    std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(pivot)]);
    Rat inv = 1 / m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (auto& x : m[static_cast<size_t>(col)]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < 2 * n; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  RatMatrix inv(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          m[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
  return inv;
}

std::vector<Rat> apply_int(const exactalg::IntMatrix& A, const std::vector<Rat>& v) {
  std::vector<Rat> out(v.size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      out[i] += Rat(A.at(static_cast<int>(i), static_cast<int>(j))) * v[j];
  return out;
}

std::vector<Rat> apply_rat(const RatMatrix& A, const std::vector<Rat>& v) {
  std::vector<Rat> out(v.size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += A[i][j] * v[j];
  return out;
}

}  // namespace

std::map<long, std::vector<Rat>> bohr_embed(const exactalg::IntPolynomial& Q,
                                            const std::vector<Rat>& phi, long kmin, long kmax) {
  const int d = Q.degree();
  if (static_cast<int>(phi.size()) != d)
    throw ValidationError("phi must have length d = " + std::to_string(d));
  if (kmin > kmax) throw ValidationError("empty k range");
  auto A = exactalg::companion_matrix(Q);
  const Rat qd_inv = make_rat(Int(1), Q.leading());
  const Rat qd = Rat(Q.leading());

  std::map<long, std::vector<Rat>> out;
  auto reduce = [](std::vector<Rat> v) {
    for (Rat& x : v) x = mod1(x);
    return v;
  };

  std::vector<Rat> cur = phi;  // exact value at k = 0 (unreduced)
  if (kmin <= 0 && kmax >= 0) out[0] = reduce(cur);
  std::vector<Rat> fwd = phi;
  for (long k = 1; k <= kmax; ++k) {
    fwd = apply_int(A, fwd);
    for (Rat& x : fwd) x *= qd_inv;
    if (k >= kmin) out[k] = reduce(fwd);
  }
  if (kmin < 0) {
    auto Ainv = rational_inverse(A);
    std::vector<Rat> bwd = phi;
    for (long k = -1; k >= kmin; --k) {
      bwd = apply_rat(Ainv, bwd);
      for (Rat& x : bwd) x *= qd;
      if (k <= kmax) out[k] = reduce(bwd);
    }
  }
  return out;
}

std::optional<int> bohr_window_period(const std::map<long, std::vector<Rat>>& orbit, int qmax) {
  if (orbit.empty()) throw ValidationError("empty orbit window");
  for (int p = 1; p <= qmax; ++p) {
    bool invariant = true;
    bool compared = false;
    for (const auto& [k, z] : orbit) {
      auto it = orbit.find(k + p);
      if (it == orbit.end()) continue;
      compared = true;
      if (it->second != z) {
        invariant = false;
        break;
      }
    }
    if (compared && invariant) return p;
  }
  return std::nullopt;
}

}  // namespace ks::dynamics
