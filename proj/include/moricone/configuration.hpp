// configuration.hpp -- exceptional-curve configurations: graphs, surface
// invariants, subset classification, the narrow-parts search and the integer
// ample-divisor candidate built from its output.

#pragma once

#include <optional>
#include <string>

#include "moricone/lattice.hpp"

namespace moricone {

enum class VarietyKind { surface, cy3 };

// Labeled curve classes with intersection data. Off-diagonal pairings must be
// >= 0; on a surface every curve is exceptional, E^2 < 0.
class Configuration {
 public:
  Configuration(std::vector<std::string> labels, GramMatrix gram,
                std::optional<std::vector<Int>> canonical_pairings, VarietyKind kind,
                std::optional<Int> k_squared = std::nullopt);

  int size() const { return gram_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const GramMatrix& gram() const { return gram_; }
  const std::optional<std::vector<Int>>& canonical_pairings() const { return canonical_; }
  const std::optional<Int>& k_squared() const { return k_squared_; }
  VarietyKind kind() const { return kind_; }

 private:
  std::vector<std::string> labels_;
  GramMatrix gram_;
  std::optional<std::vector<Int>> canonical_;
  std::optional<Int> k_squared_;
  VarietyKind kind_;
};

// Undirected graph on curve indices, edge iff pairing > 0.
class CurveGraph {
 public:
  explicit CurveGraph(const GramMatrix& g);
  CurveGraph(const GramMatrix& g, const std::vector<int>& subset);  // induced subgraph

  int order() const { return static_cast<int>(adj_.size()); }
  bool adjacent(int i, int j) const { return adj_[i][j]; }
  int edge_count() const;

  static constexpr int kUnreachable = -1;
  // BFS distances; kUnreachable marks disconnected pairs.
  const std::vector<std::vector<int>>& distances() const { return dist_; }
  int distance(int i, int j) const { return dist_[i][j]; }

  bool connected() const;
  int component_count() const;
  std::vector<std::vector<int>> components() const;
  std::optional<int> diameter() const;  // nullopt when disconnected (infinite)

 private:
  void build(const GramMatrix& g, const std::vector<int>& subset);
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> dist_;
};

struct SurfaceInvariants {
  int rho = 0;  // rank of the span of the curve classes (= rank of the gram)
  Int delta;    // max(-E^2)
  std::optional<Int> p;                        // max arithmetic genus, needs K pairings
  std::optional<std::vector<Int>> per_curve_genus;
};

// Computes rho, delta and (when canonical pairings are present) every
// p_a(E) = (E^2 + K.E)/2 + 1. Throws if a genus comes out fractional or
// negative, or if require_genus is set and no K pairings were given.
SurfaceInvariants surface_invariants(const Configuration& c, bool require_genus = false);

enum class SubsetVerdict { elliptic, parabolic, lanner, hyperbolic_non_minimal };
const char* verdict_name(SubsetVerdict v);

struct SubsetClassification {
  std::vector<int> subset;
  SubsetVerdict verdict;
  bool connected = false;
  // For a lanner verdict: the maximal proper subsets, each re-checked to lack
  // a positive direction (the minimality certificate).
  std::vector<std::vector<int>> minimality_witness;
};

SubsetClassification classify_subset(const Configuration& c, const std::vector<int>& subset);

struct SubsetEnumeration {
  std::vector<SubsetClassification> matches;  // canonical lexicographic order
  int max_size = 0;
  bool complete = false;  // true iff max_size covered the whole configuration
};

SubsetEnumeration enumerate_subsets(const Configuration& c, std::optional<SubsetVerdict> filter,
                                    int max_size);

struct NarrowPartsResult {
  bool success = false;
  std::vector<int> chosen;      // size-rho candidate (best one found on failure)
  Rat max_ratio;                // max over pairs of 4 (Ei.Ej)^2 / (Ei^2 Ej^2)
  bool spans = false;           // rank of the chosen subset == rho
  bool connected = false;
  bool ratio_ok = false;        // max_ratio < 62^2
  bool low_rank_warning = false;  // rho < 3
};

// Search over size-rho subsets, ordered by (max_ratio, lexicographic index
// order), for one that spans, is connected and stays under the 62^2 ratio
// bound. Throws if no size-rho subset spans at all, or if the candidate count
// exceeds `enumeration_cap`.
NarrowPartsResult narrow_parts_search(const Configuration& c, long enumeration_cap = 2000000);

struct AmpleCandidate {
  std::vector<Int> coefficients;  // a_i >= 1 over the basis curves
  Int h_squared;
  std::vector<Int> pairings;  // H.E for every curve of the configuration
};

// Positive integer combination H = sum a_i E_i over the given basis with
// H.E > 0 against every curve of the configuration and H^2 > 0. The interior
// point is the sum of the extreme rays of {a : a >= 0, pairings >= 0}, so the
// output depends only on the intersection matrix. Throws when infeasible.
AmpleCandidate build_ample_candidate(const Configuration& c, const std::vector<int>& basis);

struct EpsilonResult {
  Rat epsilon;
  bool exceeds_unit_frame = false;  // epsilon > 1; returned anyway, flagged
};

// Minimum of the supplied (-E . pullback K) values over the first-kind curves.
EpsilonResult epsilon_invariant(const Configuration& c, const std::vector<int>& first_kind,
                                const std::vector<Rat>& values);

struct FractionalIndexResult {
  Rat r;                      // positive content
  std::vector<Int> primitive; // k_vector / r
};

FractionalIndexResult fractional_index(const std::vector<Int>& k_vector);

}  // namespace moricone
