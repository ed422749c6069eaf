// cubes_codes.hpp -- hypercube-specific machinery: slice eigenbases, the
// eigenpolytope census, cut-polytope triangle designs, GF(2) linear-code
// designs, and the summary bound table.
//
// Hypercube vertices are integers y in [0, 2^d) with coordinate j stored in
// bit j, and phi_x(y) = (-1)^{popcount(x & y)}.  All GF(2) algebra is
// bit-packed and exact.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galedesign/gale.hpp"
#include "galedesign/matrix.hpp"
#include "galedesign/rational.hpp"

namespace gd {

// A binary linear code given by its check matrix: rows are bit masks over
// the d coordinates and must be linearly independent over GF(2).
struct LinearCode {
  int length = 0;                    // d
  std::vector<std::uint64_t> check;  // t rows, bit j = coefficient of coordinate j

  int rank() const;                                // row rank over GF(2)
  std::vector<std::uint64_t> codewords() const;    // ker(check), ascending
  std::vector<std::uint64_t> dual() const;         // row span of check, ascending
  bool in_dual(std::uint64_t x) const;             // x in the row span
};

// The weight-i slice of the d-cube, members ascending as integers.
struct CubeSlice {
  int d = 0;
  int i = 0;
  std::vector<std::uint64_t> members;
};

// Incidence vector of the cut (S, [d] \ S) of the complete graph K_d, with
// edges in ascending order of the integer e_i + e_j (the same order in
// which slice_basis(d, 2) lists its rows).
struct CutVector {
  int d = 0;
  std::vector<int> S;
  std::vector<int> chi;  // one 0/1 entry per edge of K_d
};

struct CubeCensus {
  int d = 0;
  int i = 0;
  long long dim = 0;       // polytope dimension, C(d, i)
  long long labels = 0;    // 2^d columns
  long long distinct = 0;  // distinct vertices
  bool doubled = false;              // even i: columns coincide in pairs
  bool centrally_symmetric = false;  // odd i: column(y) = -column(~y)
};

struct TriangleFacetReport {
  int d = 0;
  long long facet_count = 0;         // all facets of the slice-2 polytope
  long long triangle_facets = 0;     // facets with the maximum vertex count
  long long expected_triangles = 0;  // 4 C(d,3)
  long long classes_per_triangle = 0;  // distinct vertices per triangle facet, 3 * 2^{d-3}
  bool cut_match = false;            // affine equivalence with the cut polytope held
  bool max_are_triangles = false;    // max-vertex facets have exactly the triangle profile
  bool supports_match_cut_designs = false;
  bool pass = false;
};

struct ConstantWeightCheck {
  LinearCode code;
  int t = 0;              // rank; the factorization exponent in 2w = 2^t b
  int target_weight = 0;  // every nonzero row-span element has this weight
};

struct CodeDesign {
  int d = 0;
  int m = 0;        // the slice placed last in the ordering
  int t = 0;        // check matrix rank, |W| = 2^{d-t}
  LinearCode code;  // W = codewords(code)
  Design design;
};

struct Table1Row {
  int d = 0;
  int m = 0;
  long long dim = 0;          // C(d, m)
  long long distinct = 0;     // distinct vertices of the slice-m polytope
  bool doubled = false;       // distinct count carries two labels each
  long long bound = 0;        // upper bound on the minimum design size
  long long facet_lower = 0;  // 2^d - bound, lower bound on max facet labels
};

CubeSlice cube_slice(int d, int i);

CutVector cut_vector(int d, const std::vector<int>& S);

// C(d,i) x 2^d matrix of +-1 entries: row x in the weight-i slice, column y,
// entry (-1)^{x.y}.  Rows are eigenvectors of the d-cube for 1 - 2i/d.
// Dense, so capped at d <= 10.
Mat<Rat> slice_basis(int d, int i);

// Vertex census of the slice-i eigenpolytope: dimension C(d,i), and the
// column pairing c(y) = +-c(~y) that makes even slices doubled and odd
// slices centrally symmetric.  Cross-checked against the generic
// configuration builder for d <= 8.
CubeCensus cube_polytope_census(int d, int i);

// The 4 C(d,3) cut designs: for each triple i<j<k, the four vertex sets cut
// out by one triangle condition on bits i, j, k, each of size 2^{d-2},
// uniform weights, strength d for the slice-2-last ordering.  Verified by
// exact character sums (all d) and through verify_design (d <= 6).
std::vector<Design> cut_polytope_designs(int d);

// Confirms the slice-2 polytope is the cut polytope in disguise: the map
// x -> -2x + 1 matches distinct vertices with cut vectors, and the facets
// with the most vertices are exactly the 4 C(d,3) triangle facets with
// 3 * 2^{d-3} vertices each.  Desk scale: 3 <= d <= 5.
TriangleFacetReport triangle_facet_check(int d);

// The r x (2^r - 1) Hamming check matrix: column j holds the binary
// expansion of j, least significant bit in the first row.
LinearCode hamming_check(int r);

// A t x d check matrix whose nonzero row-span elements all have the target
// weight, built from b concatenated Hamming blocks where
// 2 * target_weight = 2^t * b with b odd, padded with zero columns.
// Throws NoSuchCode when b(2^t - 1) > d makes the construction impossible.
ConstantWeightCheck constant_weight_check(int d, int target_weight);

// The linear-code design of the d-cube: for d = 2 mod 4 the kernel of the
// canonical half-weight word 1...10...0; otherwise the kernel of the
// constant-weight check matrix for the congruence-appropriate slice m.
// Size 2^{d-t}, uniform weights, strength d for the slice-m-last ordering.
// Verified by the averaging lemma always, by direct character sums for
// d <= 12, and through verify_design for d <= 10.
CodeDesign code_design(int d);

// True when averaging phi_x over the codewords reproduces the global
// average, which happens exactly when x is not a nonzero dual word.  For
// d <= 12 the lemma verdict is checked against direct summation.
bool code_averages(const LinearCode& code, std::uint64_t x);

// One row of the summary table: slice m, polytope dimension and vertex
// count, the code bound on the minimum design size, and the complementary
// lower bound on facet label counts.
Table1Row table1(int d);

// Aligned text rendering of table1 rows for d_min..d_max.
std::string table1_text(int d_min, int d_max);

// The elementary congruence-class upper bound 2^d minus one or two middle
// binomials; superseded by the code bounds except at d = 2 mod 4.
long long cube_upper_bounds(int d);

}  // namespace gd
