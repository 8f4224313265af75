// configuration.cpp

#include "moricone/configuration.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "moricone/cone.hpp"

namespace moricone {

Configuration::Configuration(std::vector<std::string> labels, GramMatrix gram,
                             std::optional<std::vector<Int>> canonical_pairings,
                             VarietyKind kind, std::optional<Int> k_squared)
    : labels_(std::move(labels)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical_pairings)),
      k_squared_(std::move(k_squared)),
      kind_(kind) {
  const int n = gram_.dim();
  if (static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("configuration: label count does not match gram dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && gram_.at(i, j) < 0)
        throw std::invalid_argument("configuration: negative pairing E" + std::to_string(i) +
                                    ".E" + std::to_string(j) + " violates E.E' >= 0");
      if (i == j && kind_ == VarietyKind::surface && gram_.at(i, i) >= 0)
        throw std::invalid_argument("configuration: surface curve " + labels_[i] +
                                    " must have E^2 < 0");
    }
  if (canonical_ && static_cast<int>(canonical_->size()) != n)
    throw std::invalid_argument("configuration: canonical pairing count does not match dimension");
}

// ---------------------------------------------------------------- CurveGraph

void CurveGraph::build(const GramMatrix& g, const std::vector<int>& subset) {
  const int n = static_cast<int>(subset.size());
  adj_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.at(subset[i], subset[j]) > 0) adj_[i][j] = true;

  dist_.assign(n, std::vector<int>(n, kUnreachable));
  for (int s = 0; s < n; ++s) {
    dist_[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v)
        if (adj_[u][v] && dist_[s][v] == kUnreachable) {
          dist_[s][v] = dist_[s][u] + 1;
          queue.push_back(v);
        }
    }
  }
}

CurveGraph::CurveGraph(const GramMatrix& g) {
  std::vector<int> all(g.dim());
  for (int i = 0; i < g.dim(); ++i) all[i] = i;
  build(g, all);
}

CurveGraph::CurveGraph(const GramMatrix& g, const std::vector<int>& subset) { build(g, subset); }

int CurveGraph::edge_count() const {
  int count = 0;
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if (adj_[i][j]) ++count;
  return count;
}

bool CurveGraph::connected() const { return component_count() <= 1; }

int CurveGraph::component_count() const { return static_cast<int>(components().size()); }

std::vector<std::vector<int>> CurveGraph::components() const {
  const int n = order();
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    for (int v = 0; v < n; ++v)
      if (dist_[s][v] != kUnreachable && !seen[v]) {
        seen[v] = true;
        comp.push_back(v);
      }
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<int> CurveGraph::diameter() const {
  int best = 0;
  for (int i = 0; i < order(); ++i)
    for (int j = 0; j < order(); ++j) {
      if (dist_[i][j] == kUnreachable) return std::nullopt;
      best = std::max(best, dist_[i][j]);
    }
  return best;
}

// ---------------------------------------------------------------- invariants

SurfaceInvariants surface_invariants(const Configuration& c, bool require_genus) {
  if (c.kind() != VarietyKind::surface)
    throw std::invalid_argument("surface_invariants: configuration is not of surface kind");
  SurfaceInvariants inv;
  inv.rho = signature(c.gram()).rank();
  inv.delta = 0;
  for (int i = 0; i < c.size(); ++i) inv.delta = std::max(inv.delta, Int(-c.gram().at(i, i)));

  if (!c.canonical_pairings()) {
    if (require_genus)
      throw std::invalid_argument("surface_invariants: canonical pairings required for genus");
    return inv;
  }
  const auto& k = *c.canonical_pairings();
  std::vector<Int> genus;
  Int p(0);
  for (int i = 0; i < c.size(); ++i) {
    const Int twice = c.gram().at(i, i) + k[i];  // 2(p_a - 1)
    if (twice % 2 != 0)
      throw std::invalid_argument("adjunction violated: E^2 + K.E odd for curve " + c.labels()[i]);
    const Int pa = twice / 2 + 1;
    if (pa < 0)
      throw std::invalid_argument("adjunction violated: negative genus for curve " + c.labels()[i]);
    genus.push_back(pa);
    p = std::max(p, pa);
  }
  inv.per_curve_genus = std::move(genus);
  inv.p = p;
  return inv;
}

// ------------------------------------------------------------ classification

const char* verdict_name(SubsetVerdict v) {
  switch (v) {
    case SubsetVerdict::elliptic: return "elliptic";
    case SubsetVerdict::parabolic: return "parabolic";
    case SubsetVerdict::lanner: return "lanner";
    case SubsetVerdict::hyperbolic_non_minimal: return "hyperbolic-non-minimal";
  }
  return "?";
}

namespace {

bool has_positive_direction(const GramMatrix& g, const std::vector<int>& subset) {
  return signature(g.principal_submatrix(subset)).n_plus > 0;
}

}  // namespace

SubsetClassification classify_subset(const Configuration& c, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("classify_subset: empty subset");
  std::vector<int> idx = subset;
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::invalid_argument("classify_subset: repeated index");
  if (idx.front() < 0 || idx.back() >= c.size())
    throw std::invalid_argument("classify_subset: index out of range");

  SubsetClassification out;
  out.subset = idx;
  out.connected = CurveGraph(c.gram(), idx).connected();

  const Definiteness d = definiteness(c.gram().principal_submatrix(idx));
  if (d == Definiteness::negative_definite) {
    out.verdict = SubsetVerdict::elliptic;
    return out;
  }
  if (d == Definiteness::negative_semidefinite_degenerate) {
    out.verdict = SubsetVerdict::parabolic;
    return out;
  }
  // hyperbolic: minimal iff no maximal proper subset has a positive direction
  bool minimal = true;
  std::vector<std::vector<int>> witness;
  for (size_t drop = 0; drop < idx.size(); ++drop) {
    std::vector<int> sub;
    sub.reserve(idx.size() - 1);
    for (size_t i = 0; i < idx.size(); ++i)
      if (i != drop) sub.push_back(idx[i]);
    if (sub.empty()) continue;
    if (has_positive_direction(c.gram(), sub)) {
      minimal = false;
      break;
    }
    witness.push_back(std::move(sub));
  }
  if (minimal) {
    out.verdict = SubsetVerdict::lanner;
    out.minimality_witness = std::move(witness);
  } else {
    out.verdict = SubsetVerdict::hyperbolic_non_minimal;
  }
  return out;
}

SubsetEnumeration enumerate_subsets(const Configuration& c, std::optional<SubsetVerdict> filter,
                                    int max_size) {
  const int n = c.size();
  if (max_size < 0) throw std::invalid_argument("enumerate_subsets: negative max_size");
  SubsetEnumeration out;
  out.max_size = std::min(max_size, n);
  out.complete = max_size >= n;

  // canonical order: by size, then lexicographic index order
  std::vector<SubsetClassification> collected;
  for (int size = 1; size <= out.max_size; ++size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      SubsetClassification sc = classify_subset(c, comb);
      if (!filter || sc.verdict == *filter) collected.push_back(sc);
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  out.matches = std::move(collected);
  return out;
}

// ---------------------------------------------------------------- narrow parts

namespace {

Rat pair_ratio(const GramMatrix& g, int i, int j) {
  const Rat num = Rat(4) * Rat(g.at(i, j)) * Rat(g.at(i, j));
  return num / (Rat(g.at(i, i)) * Rat(g.at(j, j)));
}

Rat subset_max_ratio(const GramMatrix& g, const std::vector<int>& subset) {
  Rat best(0);
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      best = std::max(best, pair_ratio(g, subset[a], subset[b]));
  return best;
}

}  // namespace

NarrowPartsResult narrow_parts_search(const Configuration& c, long enumeration_cap) {
  if (c.kind() != VarietyKind::surface)
    throw std::invalid_argument("narrow_parts_search: surface configuration required");
  const int n = c.size();
  const int rho = signature(c.gram()).rank();
  const Rat ratio_bound(3844);  // 62^2

  // count candidates first; the search is explicitly capped
  {
    double count = 1;
    for (int i = 0; i < rho; ++i) count = count * (n - i) / (i + 1);
    if (count > static_cast<double>(enumeration_cap))
      throw std::runtime_error("narrow_parts_search: too many size-rho subsets (" +
                               std::to_string(static_cast<long long>(count)) +
                               "); raise the enumeration cap explicitly");
  }

  struct Candidate {
    Rat ratio;
    std::vector<int> subset;
  };
  std::vector<Candidate> candidates;
  std::vector<int> comb(rho);
  for (int i = 0; i < rho; ++i) comb[i] = i;
  while (true) {
    candidates.push_back({subset_max_ratio(c.gram(), comb), comb});
    int i = rho - 1;
    while (i >= 0 && comb[i] == n - rho + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < rho; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.ratio < b.ratio; });

  NarrowPartsResult best_spanning;
  bool saw_spanning = false;
  for (const Candidate& cand : candidates) {
    NarrowPartsResult r;
    r.chosen = cand.subset;
    r.max_ratio = cand.ratio;
    r.spans = signature(c.gram().principal_submatrix(cand.subset)).rank() == rho;
    if (!r.spans) continue;
    r.connected = CurveGraph(c.gram(), cand.subset).connected();
    r.ratio_ok = cand.ratio < ratio_bound;
    r.low_rank_warning = rho < 3;
    r.success = r.connected && r.ratio_ok;
    if (r.success) return r;
    if (!saw_spanning) {
      best_spanning = r;
      saw_spanning = true;
    }
  }
  if (!saw_spanning)
    throw std::runtime_error("narrow_parts_search: no size-rho subset spans the configuration");
  return best_spanning;  // failure certificate: best ratio among spanning subsets
}

// ------------------------------------------------------------ ample candidate

AmpleCandidate build_ample_candidate(const Configuration& c, const std::vector<int>& basis) {
  const int rho = signature(c.gram()).rank();
  if (static_cast<int>(basis.size()) != rho ||
      signature(c.gram().principal_submatrix(basis)).rank() != rho)
    throw std::invalid_argument("build_ample_candidate: basis does not span rank rho");

  const int n = c.size();
  const int d = static_cast<int>(basis.size());
  // feasibility cone {a : a_i >= 0, (sum a_i E_i).E_j >= 0 for every curve j}
  std::vector<QVec> rows;
  for (int j = 0; j < n; ++j) {
    QVec row(d);
    for (int i = 0; i < d; ++i) row[i] = Rat(c.gram().at(basis[i], j));
    rows.push_back(std::move(row));
  }
  for (int i = 0; i < d; ++i) {
    QVec row(d, Rat(0));
    row[i] = 1;
    rows.push_back(std::move(row));
  }

  const std::vector<QVec> rays = extreme_rays(rows);
  QVec a(d, Rat(0));
  for (const QVec& r : rays)
    for (int i = 0; i < d; ++i) a[i] += r[i];

  // interior iff every inequality is strict at the ray sum
  bool strict = !rays.empty();
  for (const QVec& row : rows)
    if (strict && dot(row, a) <= 0) strict = false;
  if (!strict)
    throw std::runtime_error(
        "build_ample_candidate: infeasible, no strictly positive combination pairs positively "
        "with every curve");

  const QVec prim = primitive_vector(a);
  AmpleCandidate out;
  for (const Rat& q : prim) out.coefficients.push_back(q.get_num());

  // H.E_j and H^2, re-verified by direct exact evaluation
  out.h_squared = 0;
  std::vector<Int> h_pairings(n, Int(0));
  for (int j = 0; j < n; ++j) {
    Int acc(0);
    for (int i = 0; i < d; ++i) acc += out.coefficients[i] * c.gram().at(basis[i], j);
    h_pairings[j] = acc;
  }
  for (int i = 0; i < d; ++i) out.h_squared += out.coefficients[i] * h_pairings[basis[i]];
  out.pairings = std::move(h_pairings);
  for (const Int& p : out.pairings)
    if (p <= 0) throw std::runtime_error("build_ample_candidate: verification failed, H.E <= 0");
  if (out.h_squared <= 0)
    throw std::runtime_error("build_ample_candidate: verification failed, H^2 <= 0");
  return out;
}

// ------------------------------------------------------ epsilon / index

EpsilonResult epsilon_invariant(const Configuration& c, const std::vector<int>& first_kind,
                                const std::vector<Rat>& values) {
  if (first_kind.empty()) throw std::invalid_argument("epsilon_invariant: empty first-kind set");
  if (first_kind.size() != values.size())
    throw std::invalid_argument("epsilon_invariant: index/value count mismatch");
  for (int i : first_kind)
    if (i < 0 || i >= c.size())
      throw std::invalid_argument("epsilon_invariant: curve index out of range");
  EpsilonResult out;
  out.epsilon = values.front();
  for (const Rat& v : values) {
    if (v <= 0)
      throw std::invalid_argument("epsilon_invariant: nonpositive value; -E.(pullback K) must be > 0");
    out.epsilon = std::min(out.epsilon, v);
  }
  out.exceeds_unit_frame = out.epsilon > 1;
  return out;
}

FractionalIndexResult fractional_index(const std::vector<Int>& k_vector) {
  Int g(0);
  for (const Int& z : k_vector) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) throw std::invalid_argument("fractional_index: zero vector");
  FractionalIndexResult out;
  out.r = Rat(g);  // content, sign convention r > 0
  for (const Int& z : k_vector) out.primitive.push_back(z / g);
  return out;
}

}  // namespace moricone
