// polytope.hpp -- vector configurations and certified facet enumeration.
//
// The columns of U_kbar, tagged with their vertex labels and grouped into
// coincidence classes, form a vector configuration whose convex hull is the
// eigenpolytope. Facets are enumerated by incremental double description over
// the dual cone. The rational path is exact end to end; the floating path runs
// the same combinatorics behind an epsilon sign oracle and then certifies each
// candidate facet with an SVD refit plus a margin-maximizing linear program.
#pragma once

#include <string>
#include <vector>

#include "galedesign/matrix.hpp"
#include "galedesign/rational.hpp"
#include "galedesign/spectral.hpp"

namespace gd {

struct VectorConfiguration {
  int dim = 0;       // ambient dimension (#rows); the polytope has dimension dim - 1
  int n_labels = 0;  // number of labeled columns
  bool exact = false;
  std::vector<std::vector<int>> classes;  // coincidence classes, ordered by smallest label
  std::vector<int> class_of;              // label -> class index
  Mat<double> points;                     // dim x n_labels (always filled)
  Mat<Rat> points_exact;                  // filled iff exact
  Mat<double> reps;                       // dim x n_classes, class representatives
  Mat<Rat> reps_exact;                    // filled iff exact

  int n_classes() const { return static_cast<int>(classes.size()); }
};

struct Facet {
  bool exact = false;
  Vec<double> functional;     // v with v.u = 0 on incident columns, v.u < 0 elsewhere
  Vec<Rat> functional_exact;  // primitive integer entries (exact path)
  std::vector<int> incident;          // labels on the facet, ascending
  std::vector<int> incident_classes;  // class indices, ascending
  std::string certificate;    // "exact" or "lp-certified"
  double margin = 0.0;        // floating path: certified separation margin
};

struct FaceCheck {
  bool is_face = false;
  bool improper = false;  // face_labels covered every label; no positive dependence exists
  bool exact = false;
  std::vector<int> complement;  // labels outside the face, ascending
  // When is_face and not improper: positive dependence on the complement's
  // U_k columns (indexed like `complement`), scaled so the entries sum to 1.
  Vec<double> witness;
  Vec<Rat> witness_exact;
  // When not is_face: functional v with v.u_i >= 0 on every complement column
  // and > 0 on at least one, refuting relative interiority.
  Vec<double> separator;
  Vec<Rat> separator_exact;
};

// Builds the configuration from a matrix whose first row is all ones and whose
// rows are linearly independent. Coincidence classes group equal columns
// (exactly on the rational path, within 1e-7 infinity-norm on the floating
// path). Errors: BadInput (first row), RankDeficient.
VectorConfiguration configuration_from_matrix(const Mat<Rat>& ukbar);
VectorConfiguration configuration_from_matrix(const Mat<double>& ukbar);
VectorConfiguration configuration_from_partition(const Partition& p);

// All facets in canonical order (lexicographic on sorted incident label
// sets). Errors: NumericallyDegenerate when the floating path cannot certify
// a candidate within the tolerance band. sign_tol is the floating path's
// sign-oracle epsilon (values within it count as zero, values inside
// 10*sign_tol of the wrong side abort); the exact path ignores it.
std::vector<Facet> enumerate_facets(const VectorConfiguration& c, double sign_tol = 1e-8);

// (f_0, ..., f_{dim-2}): face counts by dimension, computed by closing the
// facets' incident class sets under intersection.
std::vector<long long> f_vector(const VectorConfiguration& c);
std::vector<long long> f_vector(const VectorConfiguration& c, const std::vector<Facet>& facets);

// Decides whether the labels index a face of the polytope, via the dual
// criterion: 0 lies in the relative interior of the complement's U_k columns.
// Two linear programs run: a Stiemke alternative (produces the separator on
// refusal) and a min-weight-maximizing feasibility program (produces the
// witness on success). Exact over rationals when uk is rational.
FaceCheck is_face(const VectorConfiguration& c, const Mat<Rat>& uk, const std::vector<int>& face_labels);
FaceCheck is_face(const VectorConfiguration& c, const Mat<double>& uk, const std::vector<int>& face_labels);

// Facets holding the maximum number of columns, counting coincidence class
// sizes (label multiplicity), not just distinct vertices.
std::vector<Facet> max_vertex_facets(const VectorConfiguration& c);
std::vector<Facet> max_vertex_facets(const VectorConfiguration& c, const std::vector<Facet>& facets);

// Independent oracle: tests every hyperplane spanned by dim-1 affinely
// independent distinct vertices and keeps the supporting ones. Exponential in
// the vertex count; intended for cross-validating enumerate_facets on small
// configurations.
std::vector<Facet> brute_force_facets(const VectorConfiguration& c);

// Worker count for internal parallelism, from GALEDESIGN_THREADS (default 1).
int thread_count();

}  // namespace gd
