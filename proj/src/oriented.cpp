// oriented.cpp

#include "moricone/oriented.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace moricone {

OrientedDiagram::OrientedDiagram(std::vector<std::string> rays,
                                 std::vector<std::string> divisor_ids, QMat t,
                                 std::vector<int> self_k)
    : rays_(std::move(rays)), divisor_ids_(std::move(divisor_ids)), t_(std::move(t)),
      self_k_(std::move(self_k)) {
  const size_t m = rays_.size();
  if (m == 0) throw std::invalid_argument("oriented diagram must have at least one ray");
  if (divisor_ids_.size() != m || self_k_.size() != m || t_.size() != m)
    throw std::invalid_argument("oriented diagram: field sizes disagree");
  for (size_t i = 0; i < m; ++i) {
    if (t_[i].size() != m) throw std::invalid_argument("oriented diagram: t must be square");
    if (t_[i][i] != 0)
      throw std::invalid_argument("oriented diagram: t diagonal must be 0 (self-pairings live in self_k)");
    for (size_t j = 0; j < m; ++j)
      if (i != j && t_[i][j] < 0)
        throw std::invalid_argument("oriented diagram: t[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "] < 0");
    if (self_k_[i] < 1 || self_k_[i] > 3)
      throw std::invalid_argument("oriented diagram: self_k[" + std::to_string(i) +
                                  "] outside {1,2,3}");
  }
}

bool OrientedDiagram::has_single_arrow() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (arrow(i, j) != arrow(j, i)) return true;
  return false;
}

OrientedDiagram OrientedDiagram::induced(const std::vector<int>& subset) const {
  std::vector<std::string> r, ids;
  std::vector<int> k;
  QMat t(subset.size(), QVec(subset.size(), Rat(0)));
  for (size_t i = 0; i < subset.size(); ++i) {
    r.push_back(rays_[subset[i]]);
    ids.push_back(divisor_ids_[subset[i]]);
    k.push_back(self_k_[subset[i]]);
    for (size_t j = 0; j < subset.size(); ++j)
      if (i != j) t[i][j] = t_[subset[i]][subset[j]];
  }
  return OrientedDiagram(std::move(r), std::move(ids), std::move(t), std::move(k));
}

OrientedDiagram OrientedDiagram::relabeled(const std::vector<int>& permutation) const {
  return induced(permutation);
}

DivisorInjectivity check_divisor_injectivity(const OrientedDiagram& d) {
  DivisorInjectivity out;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d.divisor_ids()[i] == d.divisor_ids()[j]) out.collisions.emplace_back(i, j);
  out.injective = out.collisions.empty();
  return out;
}

OrientedDistances oriented_distances(const OrientedDiagram& d) {
  const int m = d.size();
  OrientedDistances out;
  out.dist.assign(m, std::vector<int>(m, OrientedDistances::kUnreachable));
  for (int s = 0; s < m; ++s) {
    out.dist[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < m; ++v)
        if (d.arrow(u, v) && out.dist[s][v] == OrientedDistances::kUnreachable) {
          out.dist[s][v] = out.dist[s][u] + 1;
          queue.push_back(v);
        }
    }
  }
  int best = 0;
  out.all_reachable = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (out.dist[i][j] == OrientedDistances::kUnreachable)
        out.all_reachable = false;
      else
        best = std::max(best, out.dist[i][j]);
    }
  out.diameter = best;
  return out;
}

// ----------------------------------------------------------- family shapes

namespace {

struct MutualGraph {
  int m = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<int> deg;
  int edge_count = 0;

  explicit MutualGraph(const OrientedDiagram& d) : m(d.size()) {
    adj.assign(m, std::vector<bool>(m, false));
    deg.assign(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && d.arrow(i, j)) adj[i][j] = true;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (adj[i][j]) {
          ++deg[i];
          ++deg[j];
          ++edge_count;
        }
  }

  bool connected() const {
    std::vector<bool> seen(m, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int found = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < m; ++v)
        if (adj[u][v] && !seen[v]) {
          seen[v] = true;
          ++found;
          queue.push_back(v);
        }
    }
    return found == m;
  }
};

// vertices of a chain in path order, or empty if the graph is not a chain
std::vector<int> chain_order(const MutualGraph& g) {
  if (g.m == 1) return {0};
  if (g.edge_count != g.m - 1) return {};
  std::vector<int> ends;
  for (int i = 0; i < g.m; ++i) {
    if (g.deg[i] > 2) return {};
    if (g.deg[i] == 1) ends.push_back(i);
    if (g.deg[i] == 0) return {};
  }
  if (ends.size() != 2) return {};
  std::vector<int> order{ends[0]};
  int prev = -1, cur = ends[0];
  while (static_cast<int>(order.size()) < g.m) {
    int next = -1;
    for (int v = 0; v < g.m; ++v)
      if (g.adj[cur][v] && v != prev) next = v;
    if (next < 0) return {};
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// branch lengths (in edges) from the unique degree-3 vertex, sorted; empty if
// the graph is not a tree with exactly one degree-3 vertex and paths elsewhere
std::vector<int> fork_branches(const MutualGraph& g) {
  if (g.edge_count != g.m - 1) return {};
  int center = -1;
  for (int i = 0; i < g.m; ++i) {
    if (g.deg[i] > 3) return {};
    if (g.deg[i] == 3) {
      if (center >= 0) return {};
      center = i;
    }
  }
  if (center < 0) return {};
  std::vector<int> lengths;
  for (int v = 0; v < g.m; ++v) {
    if (!g.adj[center][v]) continue;
    int len = 1, prev = center, cur = v;
    while (true) {
      int next = -1;
      for (int w = 0; w < g.m; ++w)
        if (g.adj[cur][w] && w != prev) {
          if (next >= 0) return {};  // branching again
          next = w;
        }
      if (next < 0) break;
      ++len;
      prev = cur;
      cur = next;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

DiagramVerdict family(const std::string& name) {
  return DiagramVerdict{DiagramVerdict::Kind::elliptic_family, name, ""};
}

DiagramVerdict unclassified(const std::string& reason) {
  return DiagramVerdict{DiagramVerdict::Kind::unclassified, "", reason};
}

}  // namespace

DiagramVerdict recognize_elliptic_family(const OrientedDiagram& d) {
  if (d.has_single_arrow()) return unclassified("single arrow present");
  const MutualGraph g(d);
  const int m = g.m;
  if (m == 1) return family("A1");
  if (!g.connected()) return unclassified("disconnected");

  // arrow-pair products, the layer every table condition consumes
  std::vector<std::tuple<int, int, Rat>> weighted;  // edges with product != 1
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adj[i][j]) {
        const Rat prod = d.t()[i][j] * d.t()[j][i];
        if (prod != 1) weighted.emplace_back(i, j, prod);
      }

  if (weighted.empty()) {
    if (!chain_order(g).empty()) return family("A" + std::to_string(m));
    const std::vector<int> branches = fork_branches(g);
    if (branches.size() == 3) {
      if (branches[0] == 1 && branches[1] == 1) return family("D" + std::to_string(m));
      if (branches == std::vector<int>{1, 2, 2}) return family("E6");
      if (branches == std::vector<int>{1, 2, 3}) return family("E7");
      if (branches == std::vector<int>{1, 2, 4}) return family("E8");
    }
    return unclassified("shape matches no family");
  }

  if (weighted.size() != 1) return unclassified("more than one weighted arrow pair");
  const auto [wi, wj, prod] = weighted[0];

  if (m == 2) {
    if (prod == 3) return family("G2");
    if (prod == 2) return family("B2");  // B2 and C2 are the same diagram
    return unclassified("pair with product other than 1, 2, 3");
  }

  const std::vector<int> order = chain_order(g);
  if (order.empty()) return unclassified("weighted diagram is not a chain");
  // position of the weighted edge along the chain, 0-based
  int pos = -1;
  for (int k = 0; k + 1 < m; ++k)
    if ((order[k] == wi && order[k + 1] == wj) || (order[k] == wj && order[k + 1] == wi)) pos = k;

  if (prod == 2 && m == 4 && pos == 1) return family("F4");
  if (prod == 2 && (pos == 0 || pos == m - 2)) {
    const int end = (pos == 0) ? order[0] : order[m - 1];
    const int inner = (pos == 0) ? order[1] : order[m - 2];
    const Rat into_end = d.t()[inner][end];
    const Rat out_of_end = d.t()[end][inner];
    if (into_end > out_of_end) return family("B" + std::to_string(m));
    if (out_of_end > into_end) return family("C" + std::to_string(m));
    return unclassified("end weight split symmetrically");
  }
  return unclassified("weighted arrow pair in an unrecognized position");
}

// ----------------------------------------------------------- e-set patterns

namespace {

OrientedDiagram make_pattern(int m, const std::vector<std::tuple<int, int, long, long>>& edges) {
  std::vector<std::string> rays, ids;
  std::vector<int> k(m, 1);
  for (int i = 0; i < m; ++i) {
    rays.push_back("R" + std::to_string(i + 1));
    ids.push_back("D" + std::to_string(i + 1));
  }
  QMat t(m, QVec(m, Rat(0)));
  for (const auto& [i, j, forward, backward] : edges) {
    t[i][j] = forward;
    t[j][i] = backward;
  }
  return OrientedDiagram(std::move(rays), std::move(ids), std::move(t), std::move(k));
}

bool isomorphic_exact(const OrientedDiagram& a, const OrientedDiagram& b) {
  if (a.size() != b.size()) return false;
  const int m = a.size();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int i = 0; i < m && match; ++i)
      for (int j = 0; j < m && match; ++j)
        if (i != j && a.t()[i][j] != b.t()[perm[i]][perm[j]]) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

DiagramVerdict e_set(const std::string& name) {
  return DiagramVerdict{DiagramVerdict::Kind::e_set, name, ""};
}

}  // namespace

const std::vector<std::pair<std::string, OrientedDiagram>>& e_set_block_patterns() {
  // Two vertical mutual pairs joined top and bottom (a 4-cycle), plus the
  // 5-vertex variant whose bottom path passes through a middle ray. The
  // printed "2" sits on the arrow it annotates; unlabeled arrows weigh 1.
  // Vertices: 0 = left top, 1 = left bottom, 2 = right top, 3 = right bottom,
  // 4 = bottom middle (block5 only).
  static const std::vector<std::pair<std::string, OrientedDiagram>> patterns = [] {
    std::vector<std::pair<std::string, OrientedDiagram>> p;
    p.emplace_back("block4a", make_pattern(4, {{0, 1, 1, 1}, {2, 3, 1, 1},
                                               {0, 2, 2, 1}, {1, 3, 1, 1}}));
    p.emplace_back("block4b", make_pattern(4, {{0, 1, 1, 1}, {2, 3, 1, 1},
                                               {0, 2, 2, 1}, {1, 3, 2, 1}}));
    p.emplace_back("block4c", make_pattern(4, {{0, 1, 1, 1}, {2, 3, 1, 1},
                                               {0, 2, 2, 1}, {1, 3, 1, 2}}));
    p.emplace_back("block5", make_pattern(5, {{0, 1, 1, 1}, {2, 3, 1, 1}, {0, 2, 2, 1},
                                              {1, 4, 1, 1}, {4, 3, 1, 1}}));
    return p;
  }();
  return patterns;
}

DiagramVerdict recognize_e_set(const OrientedDiagram& d) {
  if (d.has_single_arrow()) return unclassified("single arrow present");
  const MutualGraph g(d);
  const int m = g.m;

  if (m == 2 && g.edge_count == 1) {
    const Rat prod = d.t()[0][1] * d.t()[1][0];
    if (prod > 4) return e_set("pair");
    return unclassified("pair product not above 4");
  }

  if (m == 3 && g.edge_count == 2) {
    const std::vector<int> order = chain_order(g);
    const Rat p1 = d.t()[order[0]][order[1]] * d.t()[order[1]][order[0]];
    const Rat p2 = d.t()[order[1]][order[2]] * d.t()[order[2]][order[1]];
    if (p1 > 0 && p1 < 4 && p2 > 0 && p2 < 4 && p1 + p2 > 4) return e_set("chain3");
    return unclassified("3-chain products outside the minimal hyperbolic window");
  }

  if (m == 3 && g.edge_count == 3) {
    const Rat p01 = d.t()[0][1] * d.t()[1][0];
    const Rat p12 = d.t()[1][2] * d.t()[2][1];
    const Rat p20 = d.t()[2][0] * d.t()[0][2];
    const bool windows = p01 > 0 && p01 < 4 && p12 > 0 && p12 < 4 && p20 > 0 && p20 < 4;
    if (windows && p01 + p12 + p20 > 3) return e_set("triangle3");
    return unclassified("triangle products outside the minimal hyperbolic window");
  }

  for (const auto& [name, pattern] : e_set_block_patterns())
    if (isomorphic_exact(d, pattern)) return e_set(name);
  return unclassified("matches no minimal hyperbolic pattern");
}

// -------------------------------------------------- face-based ellipticity

bool subset_elliptic_by_face(const ConeDescription& ne, const std::vector<int>& subset) {
  return subset_in_proper_face(ne, subset);
}

std::vector<std::vector<int>> minimal_non_elliptic_subsets(const ConeDescription& ne,
                                                           int max_size) {
  const int n = static_cast<int>(ne.generators.size());
  std::map<std::vector<int>, bool> elliptic;
  auto is_elliptic = [&](const std::vector<int>& s) {
    auto it = elliptic.find(s);
    if (it != elliptic.end()) return it->second;
    const bool v = subset_in_proper_face(ne, s);
    elliptic.emplace(s, v);
    return v;
  };

  std::vector<std::vector<int>> out;
  for (int size = 1; size <= std::min(max_size, n); ++size) {
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      if (!is_elliptic(comb)) {
        bool minimal = true;
        for (int drop = 0; drop < size && minimal; ++drop) {
          std::vector<int> sub;
          for (int i = 0; i < size; ++i)
            if (i != drop) sub.push_back(comb[i]);
          if (!sub.empty() && !is_elliptic(sub)) minimal = false;
        }
        if (minimal) out.push_back(comb);
      }
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

BoundApplicability rho_bound_applicability(bool has_small_ray, bool has_low_kodaira_face,
                                           bool has_nef_d_with_d3_zero, bool cone_finite) {
  BoundApplicability out;
  if (has_low_kodaira_face)
    out.fano_exceptions.push_back("(1) a face of the Mori cone has Kodaira dimension <= 2");
  if (has_small_ray) out.fano_exceptions.push_back("(2) a small extremal ray exists");
  out.fano_bound_applicable = out.fano_exceptions.empty();

  if (has_nef_d_with_d3_zero)
    out.cy3_exceptions.push_back("(1) a rational nef element D with D^3 = 0 exists");
  if (has_small_ray) out.cy3_exceptions.push_back("(2) a small extremal ray exists");
  if (!cone_finite) out.cy3_exceptions.push_back("(3) the Mori cone is not finite polyhedral");
  if (has_low_kodaira_face && !has_nef_d_with_d3_zero)
    out.cy3_exceptions.push_back(
        "a face of Kodaira dimension <= 2 (fibration-type obstruction)");
  out.cy3_bound_applicable = out.cy3_exceptions.empty();
  return out;
}

}  // namespace moricone
