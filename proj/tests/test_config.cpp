// test_config.cpp

#include <doctest.h>

#include "moricone/catalog.hpp"
#include "oracles.hpp"

using namespace moricone;

namespace {

Configuration surface(const std::vector<std::vector<long>>& rows,
                      std::optional<std::vector<long>> canonical = std::nullopt) {
  std::vector<std::vector<Int>> entries;
  for (const auto& row : rows) entries.emplace_back(row.begin(), row.end());
  std::vector<std::string> labels;
  for (size_t i = 0; i < rows.size(); ++i) labels.push_back("E" + std::to_string(i + 1));
  std::optional<std::vector<Int>> k;
  if (canonical) k = std::vector<Int>(canonical->begin(), canonical->end());
  return Configuration(std::move(labels), GramMatrix(std::move(entries)), std::move(k),
                       VarietyKind::surface);
}

const Configuration& catalog_surface(const std::string& name) {
  return std::get<Configuration>(load_catalog(name).payload);
}

}  // namespace

TEST_CASE("configuration invariants enforced") {
  CHECK_THROWS_AS(surface({{-2, -1}, {-1, -2}}), std::invalid_argument);  // negative pairing
  CHECK_THROWS_AS(surface({{0}}), std::invalid_argument);                 // E^2 >= 0 on a surface
  CHECK_THROWS_AS(surface({{-2, 1}, {1, -2}}, std::vector<long>{0}), std::invalid_argument);
}

TEST_CASE("curve graph basics") {
  const Configuration apart = surface({{-1, 0}, {0, -1}});
  const CurveGraph g0(apart.gram());
  CHECK(g0.edge_count() == 0);
  CHECK(g0.component_count() == 2);
  CHECK_FALSE(g0.diameter().has_value());

  const Configuration joined = surface({{-1, 1}, {1, -1}});
  const CurveGraph g1(joined.gram());
  CHECK(g1.edge_count() == 1);
  CHECK(g1.diameter() == 1);

  const Configuration& ha8 = catalog_surface("HA8~");
  const CurveGraph g2(ha8.gram());
  CHECK(g2.order() == 12);
  CHECK(g2.connected());
}

TEST_CASE("surface invariants and adjunction") {
  const SurfaceInvariants one = surface_invariants(surface({{-2}}, std::vector<long>{0}));
  CHECK(one.delta == 2);
  CHECK(one.per_curve_genus->front() == 0);

  // a (-4)-curve with K.E = 2 is rational
  const SurfaceInvariants neg4 = surface_invariants(surface({{-4}}, std::vector<long>{2}));
  CHECK(neg4.p == 0);

  const SurfaceInvariants he8 = surface_invariants(catalog_surface("HE8~"));
  CHECK(he8.rho == 10);
  CHECK(he8.delta == 2);
  CHECK(he8.p == 0);
  for (const Int& pa : *he8.per_curve_genus) CHECK(pa == 0);

  CHECK_THROWS_AS(surface_invariants(surface({{-2}}, std::vector<long>{1})),
                  std::invalid_argument);  // odd E^2 + K.E
  CHECK_THROWS_AS(surface_invariants(surface({{-6}}, std::vector<long>{0})),
                  std::invalid_argument);  // negative genus
  CHECK_THROWS_AS(surface_invariants(surface({{-2}}), /*require_genus=*/true),
                  std::invalid_argument);
}

TEST_CASE("classify_subset on pinned examples") {
  CHECK(classify_subset(surface({{-1}}), {0}).verdict == SubsetVerdict::elliptic);
  CHECK(classify_subset(surface({{-2, 2}, {2, -2}}), {0, 1}).verdict ==
        SubsetVerdict::parabolic);
  const SubsetClassification lanner = classify_subset(surface({{-2, 3}, {3, -2}}), {0, 1});
  CHECK(lanner.verdict == SubsetVerdict::lanner);
  CHECK(lanner.connected);
  CHECK(lanner.minimality_witness.size() == 2);  // both singletons checked
  CHECK_THROWS_AS(classify_subset(surface({{-1}}), {}), std::invalid_argument);
  CHECK_THROWS_AS(classify_subset(surface({{-1}}), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(classify_subset(surface({{-1}}), {1}), std::invalid_argument);
}

TEST_CASE("enumerate_subsets ordering and filters") {
  // A3 chain of (-2)-curves: minors -2, 3, -4, so everything is elliptic
  const Configuration a3 = surface({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  const SubsetEnumeration all = enumerate_subsets(a3, std::nullopt, 3);
  CHECK(all.complete);
  CHECK(all.matches.size() == 7);
  for (const auto& sc : all.matches) CHECK(sc.verdict == SubsetVerdict::elliptic);

  const SubsetEnumeration singles =
      enumerate_subsets(catalog_surface("HE8~"), SubsetVerdict::elliptic, 1);
  CHECK(singles.matches.size() == 10);
  CHECK_FALSE(singles.complete);

  const SubsetEnumeration pairs =
      enumerate_subsets(catalog_surface("HE8~"), SubsetVerdict::lanner, 2);
  CHECK(pairs.matches.empty());  // all pairings are 0 or 1 here

  // canonical order: sizes ascending, lexicographic within a size
  CHECK(all.matches[0].subset == std::vector<int>{0});
  CHECK(all.matches[3].subset == std::vector<int>{0, 1});
  CHECK(all.matches[6].subset == std::vector<int>{0, 1, 2});
}

TEST_CASE("property: classify_subset agrees with the principal-minor oracle") {
  oracles::ConfigGen gen(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 1 + static_cast<int>(gen.rng() % 6);
    const Configuration c = gen.random_configuration(dim);
    const auto dets = oracles::principal_minors(c.gram());
    for (unsigned mask = 1; mask < (1u << dim); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < dim; ++i)
        if (mask & (1u << i)) subset.push_back(i);
      CHECK(classify_subset(c, subset).verdict ==
            oracles::minor_verdict(c.gram(), dets, subset));
    }
  }
}

TEST_CASE("property: lanner subsets are connected; adding curves never reclassifies") {
  oracles::ConfigGen gen(777);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = 2 + static_cast<int>(gen.rng() % 4);
    const Configuration c = gen.random_configuration(dim);
    for (const auto& sc : enumerate_subsets(c, SubsetVerdict::lanner, dim).matches)
      CHECK(sc.connected);

    // embed into a configuration with one extra curve
    std::vector<std::vector<Int>> bigger(dim + 1, std::vector<Int>(dim + 1, Int(0)));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) bigger[i][j] = c.gram().at(i, j);
    bigger[dim][dim] = -3;
    for (int i = 0; i < dim; ++i) bigger[i][dim] = bigger[dim][i] = Int(gen.rng() % 3);
    std::vector<std::string> labels = c.labels();
    labels.push_back("X");
    const Configuration extended(std::move(labels), GramMatrix(std::move(bigger)), std::nullopt,
                                 VarietyKind::surface);
    for (const auto& sc : enumerate_subsets(c, std::nullopt, dim).matches)
      CHECK(classify_subset(extended, sc.subset).verdict == sc.verdict);
  }
}

TEST_CASE("narrow parts search on pinned examples") {
  // two (-2)-curves with pairing 1: the only candidate, ratio 4/4 = 1
  const NarrowPartsResult tiny = narrow_parts_search(surface({{-2, 1}, {1, -2}}));
  CHECK(tiny.success);
  CHECK(tiny.chosen == std::vector<int>{0, 1});
  CHECK(tiny.max_ratio == 1);
  CHECK(tiny.low_rank_warning);  // rho = 2 < 3

  // orthogonal blocks: the only spanning set is disconnected
  const NarrowPartsResult split = narrow_parts_search(surface({{-2, 0}, {0, -2}}));
  CHECK_FALSE(split.success);
  CHECK(split.spans);
  CHECK_FALSE(split.connected);
  CHECK(split.ratio_ok);

  for (const char* name : {"HE8~", "HD8~", "HA8~"}) {
    const NarrowPartsResult r = narrow_parts_search(catalog_surface(name));
    CHECK(r.success);
    CHECK(r.max_ratio == 2);
    CHECK(r.max_ratio < Rat(ReferenceConstants::narrow_parts_ratio_bound));
  }
}

TEST_CASE("narrow parts certificates re-verify independently") {
  const Configuration& c = catalog_surface("HD8~");
  const NarrowPartsResult r = narrow_parts_search(c);
  REQUIRE(r.success);
  // rank via the characteristic polynomial oracle
  const Signature sub_sig =
      oracles::charpoly_inertia(c.gram().principal_submatrix(r.chosen).to_rational());
  CHECK(sub_sig.rank() == signature(c.gram()).rank());
  // ratio directly from the gram
  Rat worst(0);
  for (size_t a = 0; a < r.chosen.size(); ++a)
    for (size_t b = a + 1; b < r.chosen.size(); ++b) {
      const Rat num = Rat(4) * Rat(c.gram().at(r.chosen[a], r.chosen[b])) *
                      Rat(c.gram().at(r.chosen[a], r.chosen[b]));
      const Rat ratio = num / (Rat(c.gram().at(r.chosen[a], r.chosen[a])) *
                               Rat(c.gram().at(r.chosen[b], r.chosen[b])));
      worst = std::max(worst, ratio);
    }
  CHECK(worst == r.max_ratio);
  CHECK(worst < 3844);
  // connectivity via union-find instead of BFS
  std::vector<int> parent(r.chosen.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t a = 0; a < r.chosen.size(); ++a)
    for (size_t b = a + 1; b < r.chosen.size(); ++b)
      if (c.gram().at(r.chosen[a], r.chosen[b]) > 0) parent[find(a)] = find(b);
  int roots = 0;
  for (size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
  CHECK(roots == 1);
}

TEST_CASE("ample candidate construction") {
  // single curve: H = aE with a >= 1 has H.E = -a < 0
  CHECK_THROWS_AS(build_ample_candidate(surface({{-1}}), {0}), std::runtime_error);

  const Configuration two = surface({{-1, 2}, {2, -1}});
  const AmpleCandidate h = build_ample_candidate(two, {0, 1});
  CHECK(h.coefficients == std::vector<Int>{Int(1), Int(1)});
  CHECK(h.h_squared == 2);
  CHECK(h.pairings == std::vector<Int>{Int(1), Int(1)});

  const Configuration& he8 = catalog_surface("HE8~");
  const std::vector<int> basis = narrow_parts_search(he8).chosen;
  const AmpleCandidate h1 = build_ample_candidate(he8, basis);
  const AmpleCandidate h2 = build_ample_candidate(he8, basis);
  CHECK(h1.coefficients == h2.coefficients);  // deterministic
  CHECK(h1.h_squared > 0);
  for (size_t i = 0; i < h1.coefficients.size(); ++i) CHECK(h1.coefficients[i] >= 1);
  // re-verify H.E > 0 by direct evaluation
  for (int j = 0; j < he8.size(); ++j) {
    Int acc(0);
    for (size_t i = 0; i < basis.size(); ++i)
      acc += h1.coefficients[i] * he8.gram().at(basis[i], j);
    CHECK(acc > 0);
    CHECK(acc == h1.pairings[j]);
  }

  CHECK_THROWS_AS(build_ample_candidate(he8, {0, 1, 2}), std::invalid_argument);  // wrong size
}

TEST_CASE("epsilon invariant") {
  const Configuration c = surface({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  CHECK(epsilon_invariant(c, {0}, {Rat(1)}).epsilon == 1);
  const EpsilonResult r =
      epsilon_invariant(c, {0, 1, 2}, {Rat(1), make_rat(1, 3), make_rat(2, 3)});
  CHECK(r.epsilon == make_rat(1, 3));
  CHECK_FALSE(r.exceeds_unit_frame);
  CHECK(epsilon_invariant(c, {0}, {Rat(2)}).exceeds_unit_frame);
  CHECK_THROWS_AS(epsilon_invariant(c, {0, 1}, {make_rat(1, 2), Rat(-1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(epsilon_invariant(c, {}, {}), std::invalid_argument);
}

TEST_CASE("fractional index") {
  const FractionalIndexResult a = fractional_index({Int(2), Int(4), Int(6)});
  CHECK(a.r == 2);
  CHECK(a.primitive == std::vector<Int>{Int(1), Int(2), Int(3)});
  const FractionalIndexResult b = fractional_index({Int(1), Int(0), Int(0)});
  CHECK(b.r == 1);
  const FractionalIndexResult c = fractional_index({Int(-3), Int(-6)});
  CHECK(c.r == 3);
  CHECK(c.primitive == std::vector<Int>{Int(-1), Int(-2)});
  CHECK_THROWS_AS(fractional_index({Int(0), Int(0)}), std::invalid_argument);
}
