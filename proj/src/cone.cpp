// cone.cpp

#include "moricone/cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace moricone {

// ------------------------------------------------------- double description

std::vector<QVec> extreme_rays(const std::vector<QVec>& inequality_rows) {
  if (inequality_rows.empty()) throw std::invalid_argument("extreme_rays: no inequalities");
  const int d = static_cast<int>(inequality_rows[0].size());
  for (const auto& row : inequality_rows)
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("extreme_rays: ragged inequality rows");
  {
    QMat all(inequality_rows.begin(), inequality_rows.end());
    if (rank_of(all) != d)
      throw std::invalid_argument("extreme_rays: cone is not pointed (inequalities do not span)");
  }
  const int m = static_cast<int>(inequality_rows.size());

  // initial simplicial cone from the first d independent rows
  std::vector<int> base;
  {
    QMat acc;
    for (int j = 0; j < m && static_cast<int>(base.size()) < d; ++j) {
      acc.push_back(inequality_rows[j]);
      if (rank_of(acc) == static_cast<int>(acc.size()))
        base.push_back(j);
      else
        acc.pop_back();
    }
  }

  struct Ray {
    QVec vec;
    std::vector<char> tight;  // indexed by inequality row, valid for processed rows
  };

  QMat dmat;
  for (int j : base) dmat.push_back(inequality_rows[j]);
  const QMat dinv = inverse(dmat);

  std::vector<Ray> rays;
  std::vector<char> processed(m, 0);
  for (int j : base) processed[j] = 1;
  for (int i = 0; i < d; ++i) {
    QVec col(d);
    for (int r = 0; r < d; ++r) col[r] = dinv[r][i];
    Ray ray{primitive_vector(col), std::vector<char>(m, 0)};
    for (int j = 0; j < m; ++j)
      if (processed[j]) ray.tight[j] = (dot(inequality_rows[j], ray.vec) == 0);
    rays.push_back(std::move(ray));
  }

  auto adjacent = [&](const Ray& a, const Ray& b) {
    QMat common;
    for (int j = 0; j < m; ++j)
      if (processed[j] && a.tight[j] && b.tight[j]) common.push_back(inequality_rows[j]);
    if (static_cast<int>(common.size()) < d - 2) return false;
    return rank_of(common) == d - 2;
  };

  for (int t = 0; t < m; ++t) {
    if (processed[t]) continue;
    const QVec& row = inequality_rows[t];
    std::vector<Rat> value(rays.size());
    bool any_negative = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(row, rays[i].vec);
      if (value[i] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (size_t i = 0; i < rays.size(); ++i) rays[i].tight[t] = (value[i] == 0);
      processed[t] = 1;
      continue;
    }

    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (value[i] >= 0) {
        rays[i].tight[t] = (value[i] == 0);
        next.push_back(rays[i]);
      }
    for (size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        if (!adjacent(rays[p], rays[q])) continue;
        QVec combo(d);
        for (int k = 0; k < d; ++k)
          combo[k] = value[p] * rays[q].vec[k] - value[q] * rays[p].vec[k];
        Ray fresh{primitive_vector(combo), std::vector<char>(m, 0)};
        for (int j = 0; j < m; ++j)
          if (processed[j] || j == t) fresh.tight[j] = (dot(inequality_rows[j], fresh.vec) == 0);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
    processed[t] = 1;
  }

  std::vector<QVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.vec));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// ------------------------------------------------------------- duality

namespace {

// Greedy principal basis of a symmetric matrix: grows by one index when a
// nonsingular extension exists, else by the two indices of an off-diagonal
// entry of the Schur complement (always possible for symmetric matrices).
std::vector<int> principal_basis(const GramMatrix& g, int target_rank) {
  std::vector<int> basis;
  const int n = g.dim();
  auto rank_with = [&](const std::vector<int>& idx) {
    return rank_of(g.principal_submatrix(idx).to_rational());
  };
  while (static_cast<int>(basis.size()) < target_rank) {
    bool grew = false;
    for (int j = 0; j < n && !grew; ++j) {
      if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
      std::vector<int> trial = basis;
      trial.push_back(j);
      std::sort(trial.begin(), trial.end());
      if (rank_with(trial) == static_cast<int>(trial.size())) {
        basis = std::move(trial);
        grew = true;
      }
    }
    for (int j = 0; j < n && !grew; ++j) {
      if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
      for (int k = j + 1; k < n && !grew; ++k) {
        if (std::find(basis.begin(), basis.end(), k) != basis.end()) continue;
        std::vector<int> trial = basis;
        trial.push_back(j);
        trial.push_back(k);
        std::sort(trial.begin(), trial.end());
        if (rank_with(trial) == static_cast<int>(trial.size())) {
          basis = std::move(trial);
          grew = true;
        }
      }
    }
    if (!grew)
      throw std::logic_error("principal_basis: no nonsingular extension found");
  }
  return basis;
}

std::vector<QVec> nef_rays_of(const std::vector<QVec>& rows, int dim, int rank) {
  if (rank == dim) return extreme_rays(rows);
  // restrict to the row space: x = P^T y with P rows a basis of the row space
  QMat p;
  {
    QMat acc;
    for (const auto& row : rows) {
      acc.push_back(row);
      if (rank_of(acc) == static_cast<int>(acc.size()))
        p.push_back(row);
      else
        acc.pop_back();
    }
  }
  std::vector<QVec> restricted;
  restricted.reserve(rows.size());
  for (const auto& row : rows) {
    QVec r(rank);
    for (int i = 0; i < rank; ++i) r[i] = dot(p[i], row);
    restricted.push_back(std::move(r));
  }
  std::vector<QVec> inner = extreme_rays(restricted);
  std::vector<QVec> lifted;
  lifted.reserve(inner.size());
  for (const auto& y : inner) {
    QVec x(dim, Rat(0));
    for (int i = 0; i < rank; ++i)
      for (int k = 0; k < dim; ++k) x[k] += p[i][k] * y[i];
    lifted.push_back(primitive_vector(x));
  }
  std::sort(lifted.begin(), lifted.end(), lex_less);
  return lifted;
}

}  // namespace

ConeDescription dual_cone(const std::vector<QVec>& generators, const QMat& form) {
  if (generators.empty()) throw std::invalid_argument("dual_cone: no generators");
  const int d = static_cast<int>(form.size());
  ConeDescription out;
  out.ambient_dim = d;
  out.form = form;

  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != d)
      throw std::invalid_argument("dual_cone: generator dimension mismatch");
    bool zero = std::all_of(g.begin(), g.end(), [](const Rat& q) { return q == 0; });
    if (zero) throw std::invalid_argument("dual_cone: degenerate input, zero generator");
    out.generators.push_back(primitive_vector(g));
  }
  for (size_t i = 0; i < out.generators.size(); ++i)
    for (size_t j = i + 1; j < out.generators.size(); ++j)
      if (out.generators[i] == out.generators[j])
        throw std::invalid_argument("dual_cone: proportional generators at " + std::to_string(i) +
                                    " and " + std::to_string(j));

  std::vector<QVec> rows;
  rows.reserve(out.generators.size());
  for (const auto& g : out.generators) rows.push_back(mat_vec(form, g));

  QMat gen_mat(out.generators.begin(), out.generators.end());
  out.span_deficiency = d - rank_of(gen_mat);
  QMat row_mat(rows.begin(), rows.end());
  const int r = rank_of(row_mat);
  out.lineality_dim = d - r;
  out.nef_rays = nef_rays_of(rows, d, r);

  // construction sanity: every ray pairs >= 0 with every generator
  for (const auto& ray : out.nef_rays)
    for (const auto& row : rows)
      if (dot(row, ray) < 0) throw std::logic_error("dual_cone: ray fails an inequality");
  return out;
}

ConeDescription dual_cone(const Configuration& c) {
  const int rho = signature(c.gram()).rank();
  const std::vector<int> basis = principal_basis(c.gram(), rho);
  const QMat gram_bb = c.gram().principal_submatrix(basis).to_rational();
  const QMat gb_inv = inverse(gram_bb);

  std::vector<QVec> curve_vectors;
  curve_vectors.reserve(c.size());
  for (int j = 0; j < c.size(); ++j) {
    QVec pairings(rho);
    for (int i = 0; i < rho; ++i) pairings[i] = Rat(c.gram().at(basis[i], j));
    curve_vectors.push_back(mat_vec(gb_inv, pairings));
  }

  ConeDescription out = dual_cone(curve_vectors, gram_bb);
  out.basis = basis;
  return out;
}

// ---------------------------------------------------------------- vertex kinds

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::finite: return "finite";
    case VertexKind::infinite: return "infinite";
    case VertexKind::outside: return "outside";
  }
  return "?";
}

VertexKindReport vertex_kinds(const ConeDescription& nef) {
  VertexKindReport out;
  out.finite_volume = true;
  out.all_finite = true;
  for (const auto& ray : nef.nef_rays) {
    const int s = sign_of(nef.norm2(ray));
    if (s > 0) {
      out.kinds.push_back(VertexKind::finite);
    } else if (s == 0) {
      out.kinds.push_back(VertexKind::infinite);
      out.all_finite = false;
    } else {
      out.kinds.push_back(VertexKind::outside);
      out.all_finite = false;
      out.finite_volume = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------- face lattice

FaceLattice::FaceLattice(std::vector<Face> faces, int cone_dim, int n_rays)
    : faces_(std::move(faces)), cone_dim_(cone_dim), n_rays_(n_rays) {
  alpha_.assign(std::max(cone_dim_ - 1, 0), Int(0));
  for (const Face& f : faces_)
    if (f.cone_dim >= 1 && f.cone_dim <= cone_dim_ - 1) ++alpha_[f.cone_dim - 1];
}

std::vector<const Face*> FaceLattice::faces_of_polytope_dim(int k) const {
  std::vector<const Face*> out;
  for (const Face& f : faces_)
    if (f.cone_dim == k + 1) out.push_back(&f);
  return out;
}

FaceLattice face_lattice(const ConeDescription& nef, int dim_cap) {
  if (nef.ambient_dim > dim_cap)
    throw std::runtime_error("face_lattice: dimension " + std::to_string(nef.ambient_dim) +
                             " exceeds the cap " + std::to_string(dim_cap) +
                             "; refusing rather than truncating");
  if (nef.lineality_dim > 0)
    throw std::invalid_argument("face_lattice: cone has a lineality space (dim " +
                                std::to_string(nef.lineality_dim) + "), faces are not ray-generated");

  const int n_rays = static_cast<int>(nef.nef_rays.size());
  const int n_normals = static_cast<int>(nef.generators.size());
  std::vector<QVec> rows;
  rows.reserve(n_normals);
  for (const auto& g : nef.generators) rows.push_back(mat_vec(nef.form, g));

  std::vector<std::vector<bool>> tight(n_rays, std::vector<bool>(n_normals, false));
  for (int r = 0; r < n_rays; ++r)
    for (int j = 0; j < n_normals; ++j) tight[r][j] = (dot(rows[j], nef.nef_rays[r]) == 0);

  auto rays_dim = [&](const std::vector<int>& ray_idx) {
    if (ray_idx.empty()) return 0;
    QMat m;
    for (int r : ray_idx) m.push_back(nef.nef_rays[r]);
    return rank_of(m);
  };
  auto actives_of = [&](const std::vector<int>& ray_idx) {
    std::vector<int> act;
    for (int j = 0; j < n_normals; ++j) {
      bool all = true;
      for (int r : ray_idx)
        if (!tight[r][j]) {
          all = false;
          break;
        }
      if (all) act.push_back(j);
    }
    return act;
  };

  std::map<std::vector<int>, Face> faces;
  std::vector<int> all_rays(n_rays);
  for (int r = 0; r < n_rays; ++r) all_rays[r] = r;

  Face top{all_rays, actives_of(all_rays), rays_dim(all_rays)};
  std::vector<std::vector<int>> queue{top.ray_indices};
  faces.emplace(top.ray_indices, top);
  while (!queue.empty()) {
    const std::vector<int> key = queue.back();
    queue.pop_back();
    const Face current = faces.at(key);
    for (int j = 0; j < n_normals; ++j) {
      if (std::find(current.active_normals.begin(), current.active_normals.end(), j) !=
          current.active_normals.end())
        continue;
      std::vector<int> sub;
      for (int r : current.ray_indices)
        if (tight[r][j]) sub.push_back(r);
      if (sub.empty()) continue;  // only the apex lies below; added separately
      if (faces.count(sub)) continue;
      Face child{sub, actives_of(sub), rays_dim(sub)};
      faces.emplace(sub, std::move(child));
      queue.push_back(sub);
    }
  }

  std::vector<Face> list;
  list.reserve(faces.size() + 1);
  // apex first (unless the cone is trivial and the top already is the apex),
  // then faces ordered by (dim, ray set)
  if (n_rays > 0) {
    std::vector<int> all_normals(n_normals);
    for (int j = 0; j < n_normals; ++j) all_normals[j] = j;
    list.push_back(Face{{}, all_normals, 0});
  }
  for (auto& [key, face] : faces) list.push_back(std::move(face));
  std::sort(list.begin(), list.end(), [](const Face& a, const Face& b) {
    if (a.cone_dim != b.cone_dim) return a.cone_dim < b.cone_dim;
    return a.ray_indices < b.ray_indices;
  });
  return FaceLattice(std::move(list), top.cone_dim, n_rays);
}

// ------------------------------------------------------------- diagnostics

SimplicialityReport simpliciality_report(const FaceLattice& fl, const ConeDescription& nef) {
  SimplicialityReport out;
  const int n = fl.polytope_dim();
  const auto facets = fl.faces_of_polytope_dim(n - 1);

  auto count_facets_containing = [&](const std::vector<int>& rays) {
    int count = 0;
    for (const Face* f : facets)
      if (std::includes(f->ray_indices.begin(), f->ray_indices.end(), rays.begin(), rays.end()))
        ++count;
    return count;
  };

  out.simple_at_vertices = true;
  for (const Face* v : fl.faces_of_polytope_dim(0))
    if (count_facets_containing(v->ray_indices) != n) out.simple_at_vertices = false;
  out.simplicial_in_edges = true;
  for (const Face* e : fl.faces_of_polytope_dim(1))
    if (count_facets_containing(e->ray_indices) != n - 1) out.simplicial_in_edges = false;

  out.acute = true;
  for (size_t i = 0; i < nef.generators.size(); ++i)
    for (size_t j = i + 1; j < nef.generators.size(); ++j)
      if (nef.pair(nef.generators[i], nef.generators[j]) < 0) out.acute = false;
  return out;
}

FacePolynomial face_polynomial(const std::vector<Int>& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<Int> coeff(n + 1, Int(0));
  // accumulate alpha_i (s-1)^i plus the leading (s-1)^n
  auto add_power = [&](const Int& scale, int power) {
    // (s-1)^power = sum_k C(power,k) (-1)^(power-k) s^k
    Int binom(1);
    for (int k = 0; k <= power; ++k) {
      Int term = scale * binom;
      if ((power - k) % 2 != 0) term = -term;
      coeff[k] += term;
      binom = binom * (power - k) / (k + 1);
    }
  };
  for (int i = 0; i < n; ++i) add_power(alpha[i], i);
  add_power(Int(1), n);

  FacePolynomial out;
  out.coefficients = std::move(coeff);
  out.n = n;
  out.reversible = true;
  for (int k = 0; k <= n; ++k)
    if (out.coefficients[k] != out.coefficients[n - k]) out.reversible = false;
  out.positive_coefficients = true;
  for (const Int& ck : out.coefficients)
    if (ck <= 0) out.positive_coefficients = false;
  return out;
}

FacePolynomial face_polynomial(const FaceLattice& fl) { return face_polynomial(fl.alpha()); }

std::string FacePolynomial::pretty() const {
  std::string s;
  for (int k = n; k >= 0; --k) {
    const Int& ck = coefficients[k];
    if (ck == 0) continue;
    if (!s.empty()) s += (ck > 0) ? "+" : "-";
    else if (ck < 0) s += "-";
    const Int mag = abs(ck);
    if (mag != 1 || k == 0) s += mag.get_str();
    if (k > 0) s += "s";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

FaceAverages face_averages(const FaceLattice& fl) {
  const int n = fl.polytope_dim();
  if (n < 3) throw std::invalid_argument("face_averages: polytope dimension must be >= 3");
  FaceAverages out;

  const auto two_faces = fl.faces_of_polytope_dim(2);
  Rat vertex_sum(0);
  for (const Face* f : two_faces) vertex_sum += Rat(static_cast<long>(f->ray_indices.size()));
  out.a02 = vertex_sum / Rat(static_cast<long>(two_faces.size()));
  out.bound02 = Rat(4) + make_rat(4, n - 2);
  out.ok02 = (*out.a02 <= *out.bound02);

  if (n >= 4) {
    const auto three_faces = fl.faces_of_polytope_dim(3);
    Rat face_sum(0);
    for (const Face* f3 : three_faces) {
      long contained = 0;
      for (const Face* f2 : two_faces)
        if (std::includes(f3->ray_indices.begin(), f3->ray_indices.end(), f2->ray_indices.begin(),
                          f2->ray_indices.end()))
          ++contained;
      face_sum += Rat(contained);
    }
    out.a23 = face_sum / Rat(static_cast<long>(three_faces.size()));
    out.bound23 = Rat(6) + make_rat(12, n - 2);
    out.ok23 = (*out.a23 <= *out.bound23);
  }
  return out;
}

PlaneAngleResult plane_angle_classification(const Configuration& c,
                                            const std::vector<int>& elliptic_subset, int e1,
                                            int e2, int d) {
  auto pos1 = std::find(elliptic_subset.begin(), elliptic_subset.end(), e1);
  auto pos2 = std::find(elliptic_subset.begin(), elliptic_subset.end(), e2);
  if (e1 == e2 || pos1 == elliptic_subset.end() || pos2 == elliptic_subset.end())
    throw std::invalid_argument("plane_angle_classification: pair not inside the subset");

  PlaneAngleResult out;
  out.subset_elliptic =
      definiteness(c.gram().principal_submatrix(elliptic_subset)) == Definiteness::negative_definite;

  const CurveGraph graph(c.gram(), elliptic_subset);
  const int i1 = static_cast<int>(pos1 - elliptic_subset.begin());
  const int i2 = static_cast<int>(pos2 - elliptic_subset.begin());
  const int dist = graph.distance(i1, i2);
  if (dist == CurveGraph::kUnreachable) {
    out.combinatorially_right = true;  // infinite distance
  } else {
    out.distance = dist;
    out.combinatorially_right = dist > 2 * d + 1;
  }
  return out;
}

bool subset_in_proper_face(const ConeDescription& cone, const std::vector<int>& subset) {
  for (int s : subset)
    if (s < 0 || s >= static_cast<int>(cone.generators.size()))
      throw std::invalid_argument("subset_in_proper_face: generator index out of range");

  for (const auto& ray : cone.nef_rays) {
    bool vanishes = true;
    for (int s : subset)
      if (cone.pair(cone.generators[s], ray) != 0) {
        vanishes = false;
        break;
      }
    if (!vanishes) continue;
    for (const auto& g : cone.generators)
      if (cone.pair(g, ray) > 0) return true;
  }
  return false;
}

}  // namespace moricone
