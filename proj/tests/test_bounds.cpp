// test_bounds.cpp

#include <doctest.h>

#include "moricone/catalog.hpp"
#include "moricone/io.hpp"
#include "oracles.hpp"

using namespace moricone;

namespace {

Configuration surface(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> entries;
  for (const auto& row : rows) entries.emplace_back(row.begin(), row.end());
  std::vector<std::string> labels;
  for (size_t i = 0; i < rows.size(); ++i) labels.push_back("E" + std::to_string(i + 1));
  return Configuration(std::move(labels), GramMatrix(std::move(entries)), std::nullopt,
                       VarietyKind::surface);
}

const Configuration& catalog_surface(const std::string& name) {
  return std::get<Configuration>(load_catalog(name).payload);
}

}  // namespace

TEST_CASE("reference constants") {
  CHECK(ReferenceConstants::narrow_parts_ratio_bound == 3844);
  CHECK(ReferenceConstants::fano3fold_rho_bound == 7);
  CHECK(ReferenceConstants::cy3_rho_bound == 40);
  CHECK(ReferenceConstants::delpezzo_duval_rho_bound == 9);
  CHECK(ReferenceConstants::k3_counts().size() == 18);
  CHECK(ReferenceConstants::k3_counts().front() == std::pair<std::string, int>{"3", 27});
  CHECK(ReferenceConstants::k3_counts().back() == std::pair<std::string, int>{">=20", 0});
  CHECK(ReferenceConstants::shokurov_k_range() == std::vector<int>{1, 2, 3});
}

TEST_CASE("bound formulas, exact") {
  CHECK(surface_rho_bound(Rat(0), Rat(0)) == 68);
  CHECK(surface_rho_bound(Rat(1), Rat(1)) == 196);
  CHECK(surface_rho_bound(make_rat(1, 2), make_rat(1, 3)) == make_rat(380, 3));
  CHECK(threefold_rho_bound(Rat(0), Rat(0)) == 6);
  CHECK(threefold_rho_bound(Rat(3), Rat(3)) == 34);
  CHECK(threefold_rho_bound(make_rat(3, 2), Rat(0)) == 14);
  CHECK_THROWS_AS(surface_rho_bound(Rat(-1), Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(threefold_rho_bound(Rat(0), Rat(-1)), std::invalid_argument);
}

TEST_CASE("property: bound formulas are monotone in each argument") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> num(0, 40), den(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const Rat c1 = make_rat(num(rng), den(rng));
    const Rat c2 = make_rat(num(rng), den(rng));
    const Rat bump = make_rat(num(rng) + 1, den(rng));
    CHECK(surface_rho_bound(c1 + bump, c2) >= surface_rho_bound(c1, c2));
    CHECK(surface_rho_bound(c1, c2 + bump) >= surface_rho_bound(c1, c2));
    CHECK(threefold_rho_bound(c1 + bump, c2) >= threefold_rho_bound(c1, c2));
    CHECK(threefold_rho_bound(c1, c2 + bump) >= threefold_rho_bound(c1, c2));
  }
}

TEST_CASE("compute_d") {
  CHECK(compute_d({}).vacuous);
  CHECK(compute_d({}).d == 0);
  CHECK(compute_d({1}).d == 1);
  CHECK_FALSE(compute_d({1}).vacuous);
  CHECK(compute_d({1, 2, 2}).d == 2);

  // a single hyperbolic pair is a minimal hyperbolic subset of diameter 1
  const BoundReport pair = bound_report(surface({{-2, 3}, {3, -2}}), 2);
  CHECK(pair.minimal_hyperbolic_count == 1);
  CHECK(pair.diameter.d == 1);
  CHECK_FALSE(pair.diameter.vacuous);

  // the chain3 e-set pattern has directed diameter 2
  const OrientedDiagram& chain3 =
      std::get<OrientedDiagram>(load_catalog("table43-chain3").payload);
  const BoundReport chain = bound_report(chain3, 3);
  CHECK(chain.minimal_hyperbolic_count == 1);
  CHECK(chain.diameter.d == 2);
}

TEST_CASE("counting constants on pinned examples") {
  // elliptic pair at distance 1 with d = 1: one pair over two elements
  const Configuration a2 = surface({{-2, 1}, {1, -2}});
  const CountingConstants c_a2 = compute_counting_constants(a2, 1, {{0, 1}}, DistanceMode::induced);
  CHECK(c_a2.c1 == make_rat(1, 2));
  CHECK(c_a2.c2 == 0);

  // elliptic A3 chain with d = 1: near pairs {01},{12}, far pair {02}
  const Configuration a3 = surface({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  const CountingConstants c_a3 =
      compute_counting_constants(a3, 1, {{0, 1, 2}}, DistanceMode::induced);
  CHECK(c_a3.c1 == make_rat(2, 3));
  CHECK(c_a3.c2 == make_rat(1, 3));

  // a singleton contributes no pairs
  const CountingConstants c_single =
      compute_counting_constants(a3, 1, {{0}}, DistanceMode::induced);
  CHECK(c_single.c1 == 0);
  CHECK(c_single.c2 == 0);
  CHECK_FALSE(c_single.vacuous);
}

TEST_CASE("ordered pairs double the symmetric unordered count") {
  // same chain as an oriented diagram: ordered pairs at distance 1 are 4
  const OrientedDiagram& a3 = std::get<OrientedDiagram>(load_catalog("table1-A3").payload);
  const CountingConstants ordered =
      compute_counting_constants(a3, 1, {{0, 1, 2}}, DistanceMode::induced);
  CHECK(ordered.c1 == make_rat(4, 3));
  CHECK(ordered.c2 == make_rat(2, 3));

  const Configuration a3s = surface({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  const CountingConstants unordered =
      compute_counting_constants(a3s, 1, {{0, 1, 2}}, DistanceMode::induced);
  CHECK(unordered.c1 * 2 == ordered.c1);
}

TEST_CASE("property: counting constants are minimal and attained") {
  oracles::ConfigGen gen(86);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + static_cast<int>(gen.rng() % 4);
    const Configuration c = gen.random_configuration(dim);
    const SubsetEnumeration elliptic = enumerate_subsets(c, SubsetVerdict::elliptic, dim);
    std::vector<std::vector<int>> subsets;
    for (const auto& sc : elliptic.matches) subsets.push_back(sc.subset);
    if (subsets.empty()) continue;
    const int d = 1;
    const CountingConstants cc = compute_counting_constants(c, d, subsets, DistanceMode::induced);
    bool attained1 = false, attained2 = false;
    for (const auto& s : subsets) {
      const CurveGraph g(c.gram(), s);
      long near = 0, far = 0;
      for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
          const int dist = g.distance(static_cast<int>(i), static_cast<int>(j));
          if (dist == CurveGraph::kUnreachable) continue;
          if (dist >= 1 && dist <= d) ++near;
          if (dist >= d + 1 && dist <= 2 * d + 1) ++far;
        }
      CHECK(Rat(near) <= cc.c1 * Rat(static_cast<long>(s.size())));
      CHECK(Rat(far) <= cc.c2 * Rat(static_cast<long>(s.size())));
      if (Rat(near) == cc.c1 * Rat(static_cast<long>(s.size()))) attained1 = true;
      if (Rat(far) == cc.c2 * Rat(static_cast<long>(s.size()))) attained2 = true;
    }
    CHECK(attained1);
    CHECK(attained2);
  }
}

TEST_CASE("bound report on the catalog surfaces, exhaustive enumeration") {
  const BoundReport he8 = bound_report(catalog_surface("HE8~"), 10);
  CHECK(he8.complete);
  CHECK(he8.diameter.d == 8);
  CHECK(he8.counting.c1 == 4);
  CHECK(he8.counting.c2 == 0);
  CHECK(he8.surface_bound == 452);
  CHECK(he8.rho == 10);
  CHECK(*he8.consistent);

  const BoundReport hd8 = bound_report(catalog_surface("HD8~"), 11);
  CHECK(hd8.diameter.d == 4);
  CHECK(hd8.counting.c1 == make_rat(23, 8));
  CHECK(hd8.counting.c2 == make_rat(3, 4));
  CHECK(hd8.surface_bound == 368);
  CHECK(*hd8.consistent);

  const BoundReport ha8 = bound_report(catalog_surface("HA8~"), 12);
  CHECK(ha8.diameter.d == 3);
  CHECK(ha8.counting.c1 == make_rat(7, 3));
  CHECK(ha8.counting.c2 == make_rat(14, 9));
  CHECK(ha8.surface_bound == make_rat(3076, 9));
  CHECK(*ha8.consistent);
}

TEST_CASE("vacuous bound report keeps the constant terms") {
  // single curve: no pairs, no minimal hyperbolic subsets
  const BoundReport r = bound_report(surface({{-1}}), 1);
  CHECK(r.diameter.vacuous);
  CHECK(r.counting.c1 == 0);
  CHECK(r.counting.c2 == 0);
  CHECK(r.surface_bound == 68);
  CHECK(r.threefold_bound == 6);
}

TEST_CASE("cy3 bound report via diagram patterns") {
  const OrientedDiagram& a3 = std::get<OrientedDiagram>(load_catalog("table1-A3").payload);
  // no e-sets inside a chain of unit pairs: d is vacuous; with the override
  // d = 1, adjacent ordered pairs feed C1
  const BoundReport r = bound_report(a3, 3, /*d_override=*/1);
  CHECK(r.diameter.vacuous);
  CHECK(r.d_used == 1);
  // 3 singletons, the two adjacent pairs, and the full chain; the
  // disconnected pair matches no family shape
  CHECK(r.elliptic_count == 6);
  CHECK(r.counting.c1 == make_rat(4, 3));
  CHECK_FALSE(r.rho.has_value());

  const OrientedDiagram& pair = std::get<OrientedDiagram>(load_catalog("table43-pair").payload);
  const BoundReport p = bound_report(pair, 2);
  CHECK(p.minimal_hyperbolic_count == 1);
  CHECK(p.diameter.d == 1);
}

TEST_CASE("bound reports are byte-deterministic") {
  ParsedDocument doc;
  doc.name = "HE8~";
  doc.payload = catalog_surface("HE8~");
  const Rendered a = render_bounds(doc, 5, std::nullopt, DistanceMode::induced);
  const Rendered b = render_bounds(doc, 5, std::nullopt, DistanceMode::induced);
  CHECK(a.text == b.text);
  CHECK(dump_json(a.json) == dump_json(b.json));
  CHECK(a.text.find("68") != std::string::npos);
}

TEST_CASE("ambient vs induced distance modes are both available") {
  // two curves adjacent through an outside curve only: ambient distance 2,
  // induced distance infinite
  const Configuration c = surface({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  const CountingConstants induced =
      compute_counting_constants(c, 2, {{0, 2}}, DistanceMode::induced);
  const CountingConstants ambient =
      compute_counting_constants(c, 2, {{0, 2}}, DistanceMode::ambient);
  CHECK(induced.c1 == 0);                 // unreachable inside the subset
  CHECK(ambient.c1 == make_rat(1, 2));    // distance 2 through the middle curve
}
