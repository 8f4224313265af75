// cone.hpp -- exact polyhedral cone duality (double description), face
// lattices of the projectivized nef cone, and the combinatorial diagnostics
// attached to them: vertex kinds, simpliciality, the face polynomial R(s) and
// the face-average bounds.

#pragma once

#include <optional>

#include "moricone/configuration.hpp"

namespace moricone {

// Extreme rays of {x in Q^d : row . x >= 0 for every row}, computed by the
// double description method. Requires rank(rows) == d (pointed cone); rays
// come back as primitive integer vectors in lexicographic order.
std::vector<QVec> extreme_rays(const std::vector<QVec>& inequality_rows);

// Dual pair NE / NEF over a common coordinate system. For a configuration the
// coordinates are a curve basis of the span, the form is its Gram block, and
// x . E_j turns into an exact linear functional per curve. All statements
// about the hyperbolic model reduce to signs of v^2 in these coordinates.
struct ConeDescription {
  int ambient_dim = 0;
  std::vector<int> basis;   // curve indices serving as coordinates (config path)
  QMat form;                // pairing matrix in these coordinates
  std::vector<QVec> generators;     // NE generators, primitive
  std::vector<QVec> nef_rays;       // NEF extreme rays, primitive, sorted
  int lineality_dim = 0;            // of NEF; 0 when the generators span
  int span_deficiency = 0;          // ambient rows minus rank, reported not hidden

  Rat pair(const QVec& x, const QVec& y) const { return bilinear(x, form, y); }
  Rat norm2(const QVec& x) const { return bilinear(x, form, x); }
};

// NEF(X) = {x : x . E >= 0 for all curves E}, within the span of the curves.
ConeDescription dual_cone(const Configuration& c);
// Generic entry point: explicit generator vectors and pairing form.
ConeDescription dual_cone(const std::vector<QVec>& generators, const QMat& form);

enum class VertexKind { finite, infinite, outside };
const char* vertex_kind_name(VertexKind k);

struct VertexKindReport {
  std::vector<VertexKind> kinds;  // one per nef ray
  bool finite_volume = false;     // no ray with v^2 < 0
  bool all_finite = false;        // every ray has v^2 > 0
};

VertexKindReport vertex_kinds(const ConeDescription& nef);

struct Face {
  std::vector<int> ray_indices;     // sorted
  std::vector<int> active_normals;  // generators pairing 0 with the whole face
  int cone_dim = 0;                 // projective dim + 1
};

class FaceLattice {
 public:
  FaceLattice(std::vector<Face> faces, int cone_dim, int n_rays);

  int cone_dim() const { return cone_dim_; }
  int polytope_dim() const { return cone_dim_ - 1; }
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<const Face*> faces_of_polytope_dim(int k) const;
  // alpha[i] = number of i-dimensional faces of the projectivized cone M.
  const std::vector<Int>& alpha() const { return alpha_; }
  int ray_count() const { return n_rays_; }

 private:
  std::vector<Face> faces_;
  std::vector<Int> alpha_;
  int cone_dim_ = 0;
  int n_rays_ = 0;
};

// Full face lattice by closing active-normal sets. Refuses (throws) above the
// dimension cap instead of truncating silently.
FaceLattice face_lattice(const ConeDescription& nef, int dim_cap = 12);

struct SimplicialityReport {
  bool simple_at_vertices = false;   // every vertex of M on exactly n facets
  bool simplicial_in_edges = false;  // every edge of M on exactly n-1 facets
  bool acute = false;                // all distinct normals pair >= 0
};

SimplicialityReport simpliciality_report(const FaceLattice& fl, const ConeDescription& nef);

struct FacePolynomial {
  std::vector<Int> coefficients;  // c[k] = coefficient of s^k, leading 1
  int n = 0;
  bool reversible = false;
  bool positive_coefficients = false;

  std::string pretty() const;
};

// R(s) = alpha_0 + alpha_1 (s-1) + ... + alpha_{n-1} (s-1)^{n-1} + (s-1)^n.
FacePolynomial face_polynomial(const std::vector<Int>& alpha);
FacePolynomial face_polynomial(const FaceLattice& fl);

struct FaceAverages {
  std::optional<Rat> a02;  // average vertex count over 2-faces (n >= 3)
  std::optional<Rat> a23;  // average 2-face count over 3-faces (n >= 4)
  std::optional<Rat> bound02;  // 4 + 4/(n-2)
  std::optional<Rat> bound23;  // 6 + 12/(n-2)
  std::optional<bool> ok02;
  std::optional<bool> ok23;
};

FaceAverages face_averages(const FaceLattice& fl);

// A plane angle is given by an elliptic subset and two distinguished curves in
// it; it is combinatorially right when their distance inside the subset
// exceeds 2d+1 (infinite distance counts as right).
struct PlaneAngleResult {
  bool combinatorially_right = false;
  std::optional<int> distance;  // nullopt = infinite
  bool subset_elliptic = false;
};

PlaneAngleResult plane_angle_classification(const Configuration& c,
                                            const std::vector<int>& elliptic_subset, int e1,
                                            int e2, int d);

// True iff some nonzero supporting functional vanishes on the subset, is
// nonnegative on every generator and positive on at least one.
bool subset_in_proper_face(const ConeDescription& cone, const std::vector<int>& subset);

}  // namespace moricone
