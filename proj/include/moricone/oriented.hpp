// oriented.hpp -- oriented diagrams of extremal rays on 3-folds: divisor
// pairing weights t_ij, injectivity of R -> D(R), asymmetric graph metrics,
// and recognition of the classical elliptic (Dynkin) and minimal hyperbolic
// (Lanner) weighted-diagram patterns.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "moricone/cone.hpp"

namespace moricone {

// Rays R_1..R_m with t[i][j] = R_i . D(R_j) >= 0 for i != j (diagonal must be
// zero; the self-pairing is carried by self_k, C . D(R) = -k with k in 1..3).
// An arrow R_i -> R_j exists iff t[i][j] > 0.
class OrientedDiagram {
 public:
  OrientedDiagram(std::vector<std::string> rays, std::vector<std::string> divisor_ids, QMat t,
                  std::vector<int> self_k);

  int size() const { return static_cast<int>(rays_.size()); }
  const std::vector<std::string>& rays() const { return rays_; }
  const std::vector<std::string>& divisor_ids() const { return divisor_ids_; }
  const QMat& t() const { return t_; }
  const std::vector<int>& self_k() const { return self_k_; }

  bool arrow(int i, int j) const { return i != j && t_[i][j] > 0; }
  bool mutual(int i, int j) const { return arrow(i, j) && arrow(j, i); }
  bool has_single_arrow() const;

  OrientedDiagram induced(const std::vector<int>& subset) const;
  OrientedDiagram relabeled(const std::vector<int>& permutation) const;

 private:
  std::vector<std::string> rays_;
  std::vector<std::string> divisor_ids_;
  QMat t_;
  std::vector<int> self_k_;
};

struct DivisorInjectivity {
  bool injective = false;
  std::vector<std::pair<int, int>> collisions;  // ray index pairs sharing a divisor
};

// Two different extremal rays cannot share their divisor; report violations.
DivisorInjectivity check_divisor_injectivity(const OrientedDiagram& d);

struct OrientedDistances {
  std::vector<std::vector<int>> dist;  // directed path lengths, kUnreachable = -1
  static constexpr int kUnreachable = -1;
  std::optional<int> diameter;  // max finite off-diagonal entry
  bool all_reachable = false;
};

OrientedDistances oriented_distances(const OrientedDiagram& d);

struct DiagramVerdict {
  enum class Kind { elliptic_family, e_set, unclassified };
  Kind kind = Kind::unclassified;
  std::string name;    // family ("A3", "F4", ...) or pattern ("pair", "block4a", ...)
  std::string reason;  // why unclassified
};

// Matches the mutual-arrow weighted graph against the classical Dynkin
// shapes: chains (A), chains with one end arrow-pair of product 2 (B/C,
// distinguished by whether the heavier arrow points toward or away from the
// end), forks (D), the three branched E shapes, F4 and G2. Diagrams with a
// single (non-mutual) arrow are unclassified by construction.
DiagramVerdict recognize_elliptic_family(const OrientedDiagram& d);

// Matches the classical minimal hyperbolic patterns: a pair with
// t12 t21 > 4; a 3-chain with both products in (0,4) summing above 4; a
// triangle with all products in (0,4) summing above 3; and the four doubled
// block shapes with their printed weight-2 arrows (matched structurally).
DiagramVerdict recognize_e_set(const OrientedDiagram& d);

// The doubled block patterns used by recognize_e_set, exposed for the catalog.
const std::vector<std::pair<std::string, OrientedDiagram>>& e_set_block_patterns();

// Face-containment ellipticity for diagrams realized as rational cones:
// a subset is elliptic iff it lies in a proper face of the realized cone.
bool subset_elliptic_by_face(const ConeDescription& ne, const std::vector<int>& subset);
std::vector<std::vector<int>> minimal_non_elliptic_subsets(const ConeDescription& ne,
                                                           int max_size);

struct BoundApplicability {
  bool fano_bound_applicable = false;  // rho <= 7
  bool cy3_bound_applicable = false;   // rho <= 40
  std::vector<std::string> fano_exceptions;
  std::vector<std::string> cy3_exceptions;
};

// Conditional Picard-number bounds for Fano / Calabi-Yau 3-folds. The flags
// are geometric facts supplied by the caller; the verdict names which
// exception fired.
BoundApplicability rho_bound_applicability(bool has_small_ray, bool has_low_kodaira_face,
                                           bool has_nef_d_with_d3_zero, bool cone_finite);

}  // namespace moricone
