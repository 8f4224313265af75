// lattice.hpp -- exact symmetric bilinear forms: signatures, definiteness,
// pairings, and the squared-cosh distance surrogate of the hyperbolic model.

#pragma once

#include "moricone/rational.hpp"

namespace moricone {

// Symmetric integer intersection matrix, entry (i,j) = E_i . E_j.
class GramMatrix {
 public:
  explicit GramMatrix(std::vector<std::vector<Int>> entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Int& at(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<Int>>& entries() const { return entries_; }

  GramMatrix principal_submatrix(const std::vector<int>& idx) const;
  QMat to_rational() const { return int_to_rat(entries_); }

  bool operator==(const GramMatrix&) const = default;

 private:
  std::vector<std::vector<Int>> entries_;
};

struct Signature {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  int rank() const { return n_plus + n_minus; }
  bool operator==(const Signature&) const = default;
};

enum class Definiteness {
  negative_definite,
  negative_semidefinite_degenerate,
  has_positive_direction,
};

// Inertia by symmetric congruence reduction with exact rational pivoting.
// A zero diagonal pivot with a nonzero off-diagonal partner is handled by the
// symmetric 2x2 split (add row+column of the partner), which keeps the whole
// reduction rational: no square roots, no eigenvalues.
Signature signature(const QMat& symmetric);
Signature signature(const GramMatrix& g);

Definiteness definiteness(const Signature& s);
Definiteness definiteness(const GramMatrix& g);
const char* definiteness_name(Definiteness d);

struct PairingValues {
  Rat x_sq;
  Rat x_dot_y;
  Rat y_sq;
};

// Evaluates (x^2, x.y, y^2) under the form. Throws on dimension mismatch.
PairingValues norm_and_pairing(const QVec& x, const QVec& y, const GramMatrix& g);

// Exact (x.y)^2 / (x^2 y^2). The hyperbolic distance between the rays of two
// timelike vectors is arccosh of the square root; only the square is stored so
// that every comparison stays rational.
struct DistanceSurrogate {
  Rat value;
  double cosh_distance() const;  // reporting only
};

DistanceSurrogate distance_surrogate(const QVec& x, const QVec& y, const GramMatrix& g);

}  // namespace moricone
