// test_cone.cpp

#include <doctest.h>

#include "moricone/catalog.hpp"
#include "oracles.hpp"

using namespace moricone;

namespace {

QVec qv(const std::vector<long>& v) { return QVec(v.begin(), v.end()); }

// cone {x : rows.x >= 0} described with the standard pairing: the rows act
// both as generators of the dual and as facet normals
ConeDescription cone_from_rows(const std::vector<QVec>& rows) {
  return dual_cone(rows, identity_matrix(static_cast<int>(rows[0].size())));
}

const Configuration& catalog_surface(const std::string& name) {
  return std::get<Configuration>(load_catalog(name).payload);
}

std::vector<QVec> cube_rows() {
  return oracles::product_of_simplices_rows({1, 1, 1});
}

std::vector<QVec> pyramid_rows() {
  // square pyramid over [0,1]^2 with apex (1/2,1/2,1), homogenized; scaled by 2
  return {qv({0, 0, 1, 0}), qv({2, 0, -1, 0}), qv({0, 2, -1, 0}), qv({-2, 0, -1, 2}),
          qv({0, -2, -1, 2})};
}

}  // namespace

TEST_CASE("dual cone on pinned 2d examples") {
  const ConeDescription orthant = cone_from_rows({qv({1, 0}), qv({0, 1})});
  CHECK(orthant.nef_rays == std::vector<QVec>{qv({0, 1}), qv({1, 0})});

  const ConeDescription skew = cone_from_rows({qv({1, 0}), qv({1, 1})});
  CHECK(skew.nef_rays == std::vector<QVec>{qv({0, 1}), qv({1, -1})});
}

TEST_CASE("dual cone input validation") {
  CHECK_THROWS_AS(cone_from_rows({qv({0, 0}), qv({1, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(dual_cone({qv({1, 0}), qv({2, 0})}, identity_matrix(2)),
                  std::invalid_argument);  // proportional generators
}

TEST_CASE("dual cone of the catalog entries") {
  const ConeDescription he8 = dual_cone(catalog_surface("HE8~"));
  CHECK(he8.nef_rays.size() == 10);
  CHECK(he8.lineality_dim == 0);
  for (const QVec& ray : he8.nef_rays)
    for (const QVec& g : he8.generators) CHECK(he8.pair(g, ray) >= 0);

  // every normal supports a facet: active on at least dim-1 independent rays
  for (const QVec& g : he8.generators) {
    QMat active;
    for (const QVec& ray : he8.nef_rays)
      if (he8.pair(g, ray) == 0) active.push_back(ray);
    CHECK(rank_of(active) >= he8.ambient_dim - 1);
  }

  CHECK(dual_cone(catalog_surface("HD8~")).nef_rays.size() == 26);
  CHECK(dual_cone(catalog_surface("HA8~")).nef_rays.size() == 55);
}

TEST_CASE("property: double description matches kernel-enumeration oracle") {
  std::mt19937_64 rng(987654);
  std::uniform_int_distribution<long> entry(-3, 3);
  int done = 0;
  while (done < 60) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int m = d + static_cast<int>(rng() % (9 - d));
    std::vector<QVec> rows;
    for (int i = 0; i < m; ++i) {
      QVec row(d);
      for (int j = 0; j < d; ++j) row[j] = Rat(entry(rng));
      rows.push_back(std::move(row));
    }
    QMat mat(rows.begin(), rows.end());
    if (rank_of(mat) != d) continue;
    ++done;
    CHECK(extreme_rays(rows) == oracles::brute_force_rays(rows));
  }
}

TEST_CASE("property: duality round-trip reproduces extreme rays") {
  std::mt19937_64 rng(13579);
  std::uniform_int_distribution<long> entry(-3, 3);
  int done = 0;
  while (done < 40) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int m = d + static_cast<int>(rng() % 4);
    std::vector<QVec> gens;
    for (int i = 0; i < m; ++i) {
      QVec g(d);
      bool zero = true;
      for (int j = 0; j < d; ++j) {
        g[j] = Rat(entry(rng));
        if (g[j] != 0) zero = false;
      }
      if (zero) g[0] = 1;
      gens.push_back(std::move(g));
    }
    // primitive + distinct, spanning, and pointed (dual full-dimensional)
    std::vector<QVec> prim;
    for (const auto& g : gens) {
      const QVec p = primitive_vector(g);
      if (std::find(prim.begin(), prim.end(), p) == prim.end()) prim.push_back(p);
    }
    QMat mat(prim.begin(), prim.end());
    if (static_cast<int>(prim.size()) < d || rank_of(mat) != d) continue;
    const ConeDescription dual1 = dual_cone(prim, identity_matrix(d));
    QMat rays(dual1.nef_rays.begin(), dual1.nef_rays.end());
    if (dual1.nef_rays.empty() || rank_of(rays) != d) continue;  // original cone not pointed
    ++done;
    const ConeDescription dual2 = dual_cone(dual1.nef_rays, identity_matrix(d));
    const ConeDescription dual3 = dual_cone(dual2.nef_rays, identity_matrix(d));
    CHECK(dual3.nef_rays == dual1.nef_rays);
  }
}

TEST_CASE("vertex kinds under the intersection form") {
  const ConeDescription he8 = dual_cone(catalog_surface("HE8~"));
  const VertexKindReport kinds = vertex_kinds(he8);
  CHECK(kinds.finite_volume);
  CHECK_FALSE(kinds.all_finite);
  int infinite = 0;
  for (VertexKind k : kinds.kinds) {
    CHECK(k != VertexKind::outside);
    if (k == VertexKind::infinite) ++infinite;
  }
  CHECK(infinite == 2);

  // signs are read straight off v^2
  ConeDescription toy;
  toy.ambient_dim = 1;
  toy.form = QMat{{Rat(5)}};
  toy.generators = {qv({1})};
  toy.nef_rays = {qv({1})};
  CHECK(vertex_kinds(toy).kinds.front() == VertexKind::finite);
  toy.form = QMat{{Rat(0)}};
  CHECK(vertex_kinds(toy).kinds.front() == VertexKind::infinite);
  toy.form = QMat{{Rat(-1)}};
  CHECK(vertex_kinds(toy).kinds.front() == VertexKind::outside);
}

TEST_CASE("face lattice of small cones") {
  // 2d orthant: apex, two rays, the cone itself; M is a segment
  const FaceLattice orthant = face_lattice(cone_from_rows({qv({1, 0}), qv({0, 1})}));
  CHECK(orthant.cone_dim() == 2);
  CHECK(orthant.faces().size() == 4);
  CHECK(orthant.alpha() == std::vector<Int>{Int(2)});

  // simplicial 3d cone: 3 rays, 3 facets
  const FaceLattice simp3 =
      face_lattice(cone_from_rows({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}));
  CHECK(simp3.alpha() == std::vector<Int>{Int(3), Int(3)});

  // cone over the cube
  const FaceLattice cube = face_lattice(cone_from_rows(cube_rows()));
  CHECK(cube.cone_dim() == 4);
  CHECK(cube.alpha() == std::vector<Int>{Int(8), Int(12), Int(6)});

  CHECK_THROWS_AS(face_lattice(cone_from_rows(cube_rows()), /*dim_cap=*/3), std::runtime_error);
}

TEST_CASE("simpliciality and acuteness reports") {
  const ConeDescription cube = cone_from_rows(cube_rows());
  const SimplicialityReport cube_report = simpliciality_report(face_lattice(cube), cube);
  CHECK(cube_report.simple_at_vertices);
  CHECK(cube_report.simplicial_in_edges);  // every cube edge lies on exactly 2 facets

  const ConeDescription pyramid = cone_from_rows(pyramid_rows());
  const FaceLattice pyramid_lattice = face_lattice(pyramid);
  CHECK(pyramid_lattice.alpha() == std::vector<Int>{Int(5), Int(8), Int(5)});
  const SimplicialityReport pyramid_report = simpliciality_report(pyramid_lattice, pyramid);
  CHECK_FALSE(pyramid_report.simple_at_vertices);  // apex sits on 4 facets in dimension 3

  const ConeDescription he8 = dual_cone(catalog_surface("HE8~"));
  const SimplicialityReport he8_report = simpliciality_report(face_lattice(he8), he8);
  CHECK(he8_report.acute);  // configuration pairings are >= 0 by invariant
  CHECK(he8_report.simplicial_in_edges);
}

TEST_CASE("face polynomial on pinned examples") {
  const FacePolynomial cube = face_polynomial(std::vector<Int>{Int(8), Int(12), Int(6)});
  CHECK(cube.coefficients == std::vector<Int>{Int(1), Int(3), Int(3), Int(1)});
  CHECK(cube.pretty() == "s^3+3s^2+3s+1");
  CHECK(cube.reversible);
  CHECK(cube.positive_coefficients);

  const FacePolynomial simplex2 = face_polynomial(std::vector<Int>{Int(3), Int(3)});
  CHECK(simplex2.coefficients == std::vector<Int>{Int(1), Int(1), Int(1)});
  CHECK(simplex2.reversible);

  const FacePolynomial pyramid = face_polynomial(std::vector<Int>{Int(5), Int(8), Int(5)});
  CHECK(pyramid.coefficients == std::vector<Int>{Int(1), Int(1), Int(2), Int(1)});
  CHECK_FALSE(pyramid.reversible);
}

TEST_CASE("face averages with their dimension bounds") {
  const FaceAverages cube = face_averages(face_lattice(cone_from_rows(cube_rows())));
  CHECK(*cube.a02 == 4);
  CHECK(*cube.bound02 == 8);  // 4 + 4/(3-2)
  CHECK(*cube.ok02);
  CHECK_FALSE(cube.a23.has_value());

  const FaceAverages simplex =
      face_averages(face_lattice(cone_from_rows(oracles::product_of_simplices_rows({3}))));
  CHECK(*simplex.a02 == 3);

  const FaceAverages fourcube =
      face_averages(face_lattice(cone_from_rows(oracles::product_of_simplices_rows({1, 1, 1, 1}))));
  CHECK(*fourcube.a23 == 6);   // every 3-face of the 4-cube is a cube
  CHECK(*fourcube.bound23 == 12);
  CHECK(*fourcube.ok23);

  CHECK_THROWS_AS(face_averages(face_lattice(cone_from_rows({qv({1, 0}), qv({0, 1})}))),
                  std::invalid_argument);
}

TEST_CASE("property: products of simplices match the convolution oracle and stay reversible") {
  const std::vector<std::vector<int>> shapes = {
      {3}, {2, 1}, {1, 1, 1}, {4}, {2, 2}, {3, 1}, {1, 1, 1, 1}, {3, 2}, {2, 2, 1}};
  for (const auto& dims : shapes) {
    const ConeDescription cone = cone_from_rows(oracles::product_of_simplices_rows(dims));
    const FaceLattice fl = face_lattice(cone);
    const std::vector<Int> expected = oracles::product_of_simplices_f_vector(dims);
    REQUIRE(fl.alpha().size() + 1 == expected.size());
    for (size_t i = 0; i + 1 < expected.size(); ++i) CHECK(fl.alpha()[i] == expected[i]);

    // simple polytope: the face polynomial must come out reversible
    const SimplicialityReport rep = simpliciality_report(fl, cone);
    CHECK(rep.simple_at_vertices);
    CHECK(face_polynomial(fl).reversible);

    const FaceAverages avg = face_averages(fl);
    CHECK(*avg.ok02);
    if (avg.a23) CHECK(*avg.ok23);
  }
}

TEST_CASE("plane angle classification") {
  // chain of five (-2)-curves: elliptic A5
  const std::vector<std::vector<long>> chain5 = {{-2, 1, 0, 0, 0},
                                                 {1, -2, 1, 0, 0},
                                                 {0, 1, -2, 1, 0},
                                                 {0, 0, 1, -2, 1},
                                                 {0, 0, 0, 1, -2}};
  std::vector<std::vector<Int>> entries;
  for (const auto& row : chain5) entries.emplace_back(row.begin(), row.end());
  const Configuration c({"E1", "E2", "E3", "E4", "E5"}, GramMatrix(std::move(entries)),
                        std::nullopt, VarietyKind::surface);

  const std::vector<int> all{0, 1, 2, 3, 4};
  const PlaneAngleResult adjacent = plane_angle_classification(c, all, 0, 1, 1);
  CHECK_FALSE(adjacent.combinatorially_right);  // distance 1 <= 3
  CHECK(adjacent.subset_elliptic);

  const PlaneAngleResult far = plane_angle_classification(c, all, 0, 4, 1);
  CHECK(far.combinatorially_right);  // distance 4 > 3
  CHECK(far.distance == 4);

  // two components: infinite distance counts as right
  const Configuration apart({"E1", "E2"}, GramMatrix({{Int(-2), Int(0)}, {Int(0), Int(-2)}}),
                            std::nullopt, VarietyKind::surface);
  const PlaneAngleResult inf = plane_angle_classification(apart, {0, 1}, 0, 1, 1);
  CHECK(inf.combinatorially_right);
  CHECK_FALSE(inf.distance.has_value());

  CHECK_THROWS_AS(plane_angle_classification(c, {0, 1, 2}, 0, 4, 1), std::invalid_argument);
}

TEST_CASE("subset_in_proper_face on pinned examples") {
  const ConeDescription simp3 =
      cone_from_rows({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
  CHECK(subset_in_proper_face(simp3, {0}));
  CHECK(subset_in_proper_face(simp3, {0, 1}));
  CHECK_FALSE(subset_in_proper_face(simp3, {0, 1, 2}));
  CHECK_THROWS_AS(subset_in_proper_face(simp3, {3}), std::invalid_argument);
}

TEST_CASE("property: subset_in_proper_face agrees with functional enumeration") {
  std::mt19937_64 rng(2468);
  std::uniform_int_distribution<long> entry(-2, 3);
  int done = 0;
  while (done < 25) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int m = d + static_cast<int>(rng() % (9 - d));
    std::vector<QVec> gens;
    for (int i = 0; i < m; ++i) {
      QVec g(d);
      bool zero = true;
      for (int j = 0; j < d; ++j) {
        g[j] = Rat(entry(rng));
        if (g[j] != 0) zero = false;
      }
      if (zero) g[0] = 1;
      const QVec p = primitive_vector(g);
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
    }
    QMat mat(gens.begin(), gens.end());
    if (static_cast<int>(gens.size()) < d || rank_of(mat) != d) continue;
    const ConeDescription cone = dual_cone(gens, identity_matrix(d));
    QMat rays(cone.nef_rays.begin(), cone.nef_rays.end());
    if (cone.nef_rays.empty() || rank_of(rays) != d) continue;  // need a pointed cone
    ++done;

    // oracle: supporting functionals from kernels of (d-1)-subsets of generators
    auto oracle = [&](const std::vector<int>& subset) {
      std::vector<int> comb(d - 1);
      if (d - 1 > static_cast<int>(gens.size())) return false;
      for (int i = 0; i < d - 1; ++i) comb[i] = i;
      while (true) {
        QMat sub;
        for (int i : comb) sub.push_back(gens[i]);
        const auto kernel = kernel_basis(sub);
        if (kernel.size() == 1) {
          for (int flip = 0; flip < 2; ++flip) {
            QVec x = kernel[0];
            if (flip)
              for (Rat& q : x) q = -q;
            bool valid = true, strict = false, on_subset = true;
            for (const auto& g : gens) {
              const Rat v = dot(g, x);
              if (v < 0) valid = false;
              if (v > 0) strict = true;
            }
            for (int s : subset)
              if (dot(gens[s], x) != 0) on_subset = false;
            if (valid && strict && on_subset) return true;
          }
        }
        int i = d - 2;
        while (i >= 0 && comb[i] == static_cast<int>(gens.size()) - (d - 1) + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
      }
      return false;
    };

    for (int trial = 0; trial < 8; ++trial) {
      std::vector<int> subset;
      for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        if (rng() % 2) subset.push_back(i);
      if (subset.empty()) subset.push_back(static_cast<int>(rng() % gens.size()));
      CHECK(subset_in_proper_face(cone, subset) == oracle(subset));
    }
  }
}
