// rational.cpp

#include "moricone/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace moricone {

Rat make_rat(long n, long d) { return make_rat(Int(n), Int(d)); }

Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(text);
      return Rat(n);
    }
    Int n(text.substr(0, slash));
    Int d(text.substr(slash + 1));
    return make_rat(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
}

std::string rat_str(const Rat& q) { return q.get_str(); }

double to_double(const Rat& q) { return q.get_d(); }

QMat identity_matrix(int n) {
  QMat m(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat int_to_rat(const std::vector<std::vector<Int>>& m) {
  QMat out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

namespace {

// Row echelon with partial pivoting by first nonzero; returns pivot columns.
std::vector<int> echelon(QMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rat f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_of(QMat a) { return static_cast<int>(echelon(a).size()); }

Rat determinant(QMat a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of non-square matrix");
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rat f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

QMat inverse(QMat a) {
  const int n = static_cast<int>(a.size());
  QMat inv = identity_matrix(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) throw std::invalid_argument("inverse of singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rat piv = a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return QVec{};
  const int cols = static_cast<int>(a[0].size());
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  QMat aug = a;
  const std::vector<int> pivots = echelon(aug);
  for (size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == cols) return std::nullopt;  // pivot in the constant column
  QVec x(cols, Rat(0));
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    const int c = pivots[k];
    Rat acc = aug[k][cols];
    for (int j = c + 1; j < cols; ++j) acc -= aug[k][j] * x[j];
    x[c] = acc / aug[k][c];
  }
  return x;
}

std::vector<QVec> kernel_basis(QMat a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  const std::vector<int> pivots = echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec x(cols, Rat(0));
    x[free] = 1;
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
      const int c = pivots[k];
      Rat acc(0);
      for (int j = c + 1; j < cols; ++j) acc -= a[k][j] * x[j];
      x[c] = acc / a[k][c];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rat dot(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat acc(0);
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

QVec mat_vec(const QMat& a, const QVec& x) {
  QVec out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(dot(row, x));
  return out;
}

Rat bilinear(const QVec& x, const QMat& form, const QVec& y) {
  return dot(x, mat_vec(form, y));
}

QVec primitive_vector(const QVec& v) {
  Int lcm_den(1);
  for (const auto& q : v) {
    Int den = q.get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> ints;
  ints.reserve(v.size());
  Int g(0);
  for (const auto& q : v) {
    Int z = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  if (g == 0) throw std::invalid_argument("primitive_vector: zero vector");
  QVec out;
  out.reserve(v.size());
  for (const auto& z : ints) out.push_back(Rat(z / g));
  return out;
}

bool lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace moricone
