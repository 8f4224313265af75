// bounds.cpp

#include "moricone/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace moricone {

const std::vector<std::pair<std::string, int>>& ReferenceConstants::k3_counts() {
  static const std::vector<std::pair<std::string, int>> counts = {
      {"3", 27}, {"4", 17},  {"5", 10},  {"6", 10},  {"7", 9},   {"8", 12},
      {"9", 10}, {"10", 9},  {"11", 4},  {"12", 4},  {"13", 3},  {"14", 3},
      {"15", 1}, {"16", 1},  {"17", 1},  {"18", 1},  {"19", 1},  {">=20", 0},
  };
  return counts;
}

const std::vector<int>& ReferenceConstants::shokurov_k_range() {
  static const std::vector<int> range = {1, 2, 3};
  return range;
}

Rat surface_rho_bound(const Rat& c1, const Rat& c2) {
  if (c1 < 0 || c2 < 0) throw std::invalid_argument("surface_rho_bound: negative constant");
  return Rat(96) * (c1 + c2 / 3) + 68;
}

Rat threefold_rho_bound(const Rat& c1, const Rat& c2) {
  if (c1 < 0 || c2 < 0) throw std::invalid_argument("threefold_rho_bound: negative constant");
  return make_rat(16, 3) * c1 + Rat(4) * c2 + 6;
}

const char* distance_mode_name(DistanceMode m) {
  return m == DistanceMode::induced ? "induced" : "ambient";
}

DiameterConstant compute_d(const std::vector<int>& diameters) {
  DiameterConstant out;
  out.vacuous = diameters.empty();
  for (int d : diameters) out.d = std::max(out.d, d);
  return out;
}

namespace {

// distance table for the elements of `subset`, per mode
std::vector<std::vector<int>> subset_distances(const CurveGraph& ambient,
                                               const GramMatrix& gram,
                                               const std::vector<int>& subset,
                                               DistanceMode mode) {
  const int k = static_cast<int>(subset.size());
  std::vector<std::vector<int>> dist(k, std::vector<int>(k, CurveGraph::kUnreachable));
  if (mode == DistanceMode::induced) {
    const CurveGraph g(gram, subset);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) dist[i][j] = g.distance(i, j);
  } else {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) dist[i][j] = ambient.distance(subset[i], subset[j]);
  }
  return dist;
}

CountingConstants count_from_tables(
    const std::vector<std::vector<int>>& subsets,
    const std::vector<std::vector<std::vector<int>>>& tables, int d, bool ordered) {
  CountingConstants out;
  out.c1 = 0;
  out.c2 = 0;
  out.vacuous = subsets.empty();
  for (size_t s = 0; s < subsets.size(); ++s) {
    const auto& dist = tables[s];
    const int k = static_cast<int>(subsets[s].size());
    long in_near = 0, in_far = 0;
    for (int i = 0; i < k; ++i)
      for (int j = ordered ? 0 : i + 1; j < k; ++j) {
        if (i == j) continue;
        const int dij = dist[i][j];
        if (dij == CurveGraph::kUnreachable || dij < 1) continue;
        if (dij <= d) ++in_near;
        else if (dij <= 2 * d + 1) ++in_far;
      }
    const Rat r1 = make_rat(in_near, k);
    const Rat r2 = make_rat(in_far, k);
    if (r1 > out.c1) {
      out.c1 = r1;
      out.c1_witness = subsets[s];
    }
    if (r2 > out.c2) {
      out.c2 = r2;
      out.c2_witness = subsets[s];
    }
  }
  return out;
}

}  // namespace

CountingConstants compute_counting_constants(const Configuration& c, int d,
                                             const std::vector<std::vector<int>>& elliptic_subsets,
                                             DistanceMode mode) {
  if (d < 0) throw std::invalid_argument("compute_counting_constants: negative d");
  const CurveGraph ambient(c.gram());
  std::vector<std::vector<std::vector<int>>> tables;
  tables.reserve(elliptic_subsets.size());
  for (const auto& s : elliptic_subsets)
    tables.push_back(subset_distances(ambient, c.gram(), s, mode));
  return count_from_tables(elliptic_subsets, tables, d, /*ordered=*/false);
}

CountingConstants compute_counting_constants(const OrientedDiagram& diag, int d,
                                             const std::vector<std::vector<int>>& elliptic_subsets,
                                             DistanceMode mode) {
  if (d < 0) throw std::invalid_argument("compute_counting_constants: negative d");
  const OrientedDistances ambient = oriented_distances(diag);
  std::vector<std::vector<std::vector<int>>> tables;
  tables.reserve(elliptic_subsets.size());
  for (const auto& s : elliptic_subsets) {
    const int k = static_cast<int>(s.size());
    std::vector<std::vector<int>> dist(k, std::vector<int>(k));
    if (mode == DistanceMode::induced) {
      const OrientedDistances local = oriented_distances(diag.induced(s));
      dist = local.dist;
    } else {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) dist[i][j] = ambient.dist[s[i]][s[j]];
    }
    tables.push_back(std::move(dist));
  }
  return count_from_tables(elliptic_subsets, tables, d, /*ordered=*/true);
}

BoundReport bound_report(const Configuration& c, int max_size, std::optional<int> d_override,
                         DistanceMode mode) {
  if (c.kind() != VarietyKind::surface)
    throw std::invalid_argument("bound_report: surface configuration required");
  BoundReport out;
  out.mode = VarietyKind::surface;
  out.distance_mode = mode;
  out.max_size = std::min(max_size, c.size());
  out.complete = max_size >= c.size();

  const SubsetEnumeration lanner = enumerate_subsets(c, SubsetVerdict::lanner, max_size);
  std::vector<int> diameters;
  for (const auto& sc : lanner.matches) {
    out.minimal_hyperbolic_subsets.push_back(sc.subset);
    const auto diam = CurveGraph(c.gram(), sc.subset).diameter();
    diameters.push_back(diam.value_or(0));  // lanner subsets are connected
  }
  out.minimal_hyperbolic_count = static_cast<long>(lanner.matches.size());
  out.diameter = compute_d(diameters);
  out.d_override = d_override;
  out.d_used = d_override.value_or(out.diameter.d);

  const SubsetEnumeration elliptic = enumerate_subsets(c, SubsetVerdict::elliptic, max_size);
  std::vector<std::vector<int>> elliptic_subsets;
  for (const auto& sc : elliptic.matches) elliptic_subsets.push_back(sc.subset);
  out.elliptic_count = static_cast<long>(elliptic_subsets.size());
  out.counting = compute_counting_constants(c, out.d_used, elliptic_subsets, mode);

  out.surface_bound = surface_rho_bound(out.counting.c1, out.counting.c2);
  out.threefold_bound = threefold_rho_bound(out.counting.c1, out.counting.c2);
  out.rho = signature(c.gram()).rank();
  out.consistent = Rat(*out.rho) < out.surface_bound;
  return out;
}

BoundReport bound_report(const OrientedDiagram& diag, int max_size, std::optional<int> d_override,
                         DistanceMode mode, std::optional<int> rho_hint) {
  BoundReport out;
  out.mode = VarietyKind::cy3;
  out.distance_mode = mode;
  out.max_size = std::min(max_size, diag.size());
  out.complete = max_size >= diag.size();

  // subsets classified through the weighted-diagram patterns
  std::vector<std::vector<int>> elliptic_subsets;
  std::vector<int> diameters;
  const int n = diag.size();
  for (int size = 1; size <= out.max_size; ++size) {
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      const OrientedDiagram sub = diag.induced(comb);
      if (recognize_elliptic_family(sub).kind == DiagramVerdict::Kind::elliptic_family) {
        elliptic_subsets.push_back(comb);
      } else if (recognize_e_set(sub).kind == DiagramVerdict::Kind::e_set) {
        out.minimal_hyperbolic_subsets.push_back(comb);
        diameters.push_back(oriented_distances(sub).diameter.value_or(0));
      }
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  out.minimal_hyperbolic_count = static_cast<long>(out.minimal_hyperbolic_subsets.size());
  out.elliptic_count = static_cast<long>(elliptic_subsets.size());
  out.diameter = compute_d(diameters);
  out.d_override = d_override;
  out.d_used = d_override.value_or(out.diameter.d);
  out.counting = compute_counting_constants(diag, out.d_used, elliptic_subsets, mode);

  out.surface_bound = surface_rho_bound(out.counting.c1, out.counting.c2);
  out.threefold_bound = threefold_rho_bound(out.counting.c1, out.counting.c2);
  out.rho = rho_hint;
  if (rho_hint) out.consistent = Rat(*rho_hint) <= out.threefold_bound;
  return out;
}

}  // namespace moricone
