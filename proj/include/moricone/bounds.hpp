// bounds.hpp -- the diagram-method constants d, C1, C2 measured from a
// configuration, the two Picard-number bound formulas built from them, and
// the published reference constants used by reports and golden tests.

#pragma once

#include "moricone/oriented.hpp"

namespace moricone {

struct ReferenceConstants {
  static constexpr long narrow_parts_ratio_bound = 3844;  // 62^2
  static constexpr int fano3fold_rho_bound = 7;
  static constexpr int cy3_rho_bound = 40;
  static constexpr int delpezzo_duval_rho_bound = 9;
  // picard-lattice counts for K3 surfaces with finite automorphism group,
  // rho = 3 .. >= 20
  static const std::vector<std::pair<std::string, int>>& k3_counts();
  static const std::vector<int>& shokurov_k_range();  // {1, 2, 3}
};

// 96 (C1 + C2/3) + 68; the surface Picard number is strictly below this.
Rat surface_rho_bound(const Rat& c1, const Rat& c2);
// (16/3) C1 + 4 C2 + 6; the 3-fold Picard number is at most this.
Rat threefold_rho_bound(const Rat& c1, const Rat& c2);

enum class DistanceMode { induced, ambient };
const char* distance_mode_name(DistanceMode m);

struct DiameterConstant {
  int d = 0;
  bool vacuous = true;  // no minimal hyperbolic subsets were found
};

// d = max diameter over the supplied minimal hyperbolic subsets (each
// measured in its own induced graph); 0 and flagged vacuous when none exist.
DiameterConstant compute_d(const std::vector<int>& diameters);

struct CountingConstants {
  Rat c1;
  Rat c2;
  bool vacuous = true;  // no elliptic subsets enumerated
  std::vector<int> c1_witness;  // an elliptic subset attaining C1
  std::vector<int> c2_witness;
};

// Minimal constants over the enumerated elliptic subsets: C1 bounds the pair
// count at distance 1..d per element, C2 the pair count at distance
// d+1..2d+1. Surfaces count unordered pairs, 3-fold diagrams ordered pairs.
CountingConstants compute_counting_constants(const Configuration& c, int d,
                                             const std::vector<std::vector<int>>& elliptic_subsets,
                                             DistanceMode mode);
CountingConstants compute_counting_constants(const OrientedDiagram& diag, int d,
                                             const std::vector<std::vector<int>>& elliptic_subsets,
                                             DistanceMode mode);

struct BoundReport {
  VarietyKind mode = VarietyKind::surface;
  DistanceMode distance_mode = DistanceMode::induced;
  int max_size = 0;
  bool complete = false;  // enumeration covered every subset size

  DiameterConstant diameter;
  std::optional<int> d_override;
  int d_used = 0;
  CountingConstants counting;

  long minimal_hyperbolic_count = 0;
  long elliptic_count = 0;
  std::vector<std::vector<int>> minimal_hyperbolic_subsets;

  Rat surface_bound;    // 96(C1 + C2/3) + 68
  Rat threefold_bound;  // (16/3) C1 + 4 C2 + 6

  std::optional<int> rho;          // surfaces: rank of the gram; 3-folds: caller hint
  std::optional<bool> consistent;  // rho against the bound of the active mode
};

BoundReport bound_report(const Configuration& c, int max_size,
                         std::optional<int> d_override = std::nullopt,
                         DistanceMode mode = DistanceMode::induced);
BoundReport bound_report(const OrientedDiagram& diag, int max_size,
                         std::optional<int> d_override = std::nullopt,
                         DistanceMode mode = DistanceMode::induced,
                         std::optional<int> rho_hint = std::nullopt);

}  // namespace moricone
