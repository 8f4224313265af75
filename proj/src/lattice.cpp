// lattice.cpp

#include "moricone/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace moricone {

GramMatrix::GramMatrix(std::vector<std::vector<Int>> entries) : entries_(std::move(entries)) {
  const size_t n = entries_.size();
  if (n == 0) throw std::invalid_argument("gram matrix must have dim >= 1");
  for (size_t i = 0; i < n; ++i)
    if (entries_[i].size() != n) throw std::invalid_argument("gram matrix must be square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (entries_[i][j] != entries_[j][i])
        throw std::invalid_argument("gram matrix not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
}

GramMatrix GramMatrix::principal_submatrix(const std::vector<int>& idx) const {
  std::vector<std::vector<Int>> sub(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) {
    sub[i].reserve(idx.size());
    for (size_t j = 0; j < idx.size(); ++j) sub[i].push_back(entries_[idx[i]][idx[j]]);
  }
  return GramMatrix(std::move(sub));
}

Signature signature(const QMat& symmetric) {
  QMat a = symmetric;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i]) throw std::invalid_argument("signature of non-symmetric matrix");

  Signature s;
  auto add_row_col = [&](int dst, int src) {
    for (int t = 0; t < n; ++t) a[dst][t] += a[src][t];
    for (int t = 0; t < n; ++t) a[t][dst] += a[t][src];
  };
  auto swap_row_col = [&](int i, int j) {
    std::swap(a[i], a[j]);
    for (int t = 0; t < n; ++t) std::swap(a[t][i], a[t][j]);
  };

  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // prefer a diagonal swap partner, then the 2x2 split, else a zero row
      int swap_j = -1, split_j = -1;
      for (int j = k + 1; j < n; ++j) {
        if (a[k][j] == 0) continue;
        if (a[j][j] != 0 && swap_j < 0) swap_j = j;
        if (split_j < 0) split_j = j;
      }
      if (swap_j >= 0) {
        swap_row_col(k, swap_j);
      } else if (split_j >= 0) {
        // a[k][k] = 0, a[split_j][split_j] = 0, a[k][split_j] != 0:
        // after adding row+column split_j the pivot becomes 2 a[k][split_j]
        add_row_col(k, split_j);
      } else {
        ++s.n_zero;
        continue;
      }
    }
    const Rat piv = a[k][k];
    if (piv > 0)
      ++s.n_plus;
    else
      ++s.n_minus;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rat f = a[i][k] / piv;
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (int j = k; j < n; ++j) a[j][i] -= f * a[j][k];
    }
  }
  return s;
}

Signature signature(const GramMatrix& g) { return signature(g.to_rational()); }

Definiteness definiteness(const Signature& s) {
  if (s.n_plus > 0) return Definiteness::has_positive_direction;
  if (s.n_zero > 0) return Definiteness::negative_semidefinite_degenerate;
  return Definiteness::negative_definite;
}

Definiteness definiteness(const GramMatrix& g) { return definiteness(signature(g)); }

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::negative_definite: return "negative-definite";
    case Definiteness::negative_semidefinite_degenerate: return "negative-semidefinite-degenerate";
    case Definiteness::has_positive_direction: return "has-positive-direction";
  }
  return "?";
}

PairingValues norm_and_pairing(const QVec& x, const QVec& y, const GramMatrix& g) {
  if (static_cast<int>(x.size()) != g.dim() || static_cast<int>(y.size()) != g.dim())
    throw std::invalid_argument("norm_and_pairing: dimension mismatch");
  const QMat form = g.to_rational();
  return PairingValues{bilinear(x, form, x), bilinear(x, form, y), bilinear(y, form, y)};
}

double DistanceSurrogate::cosh_distance() const { return std::sqrt(to_double(value)); }

DistanceSurrogate distance_surrogate(const QVec& x, const QVec& y, const GramMatrix& g) {
  const PairingValues p = norm_and_pairing(x, y, g);
  if (p.x_sq == 0 || p.y_sq == 0)
    throw std::invalid_argument("distance_surrogate: zero-norm input");
  return DistanceSurrogate{p.x_dot_y * p.x_dot_y / (p.x_sq * p.y_sq)};
}

}  // namespace moricone
