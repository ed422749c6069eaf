// gale.hpp -- designs in regular graphs and their correspondence with
// polytope faces.
//
// A k-design is a weight vector a supported on W with U_k a = 0 and
// 1^T a != 0, stored normalized to 1^T a = 1.  Minimal positive designs
// correspond to facets of the configuration built from the complementary
// eigenspace rows; general faces correspond to positively weighted designs.
// This header also provides brute-force circuit enumeration as an
// independent route to the same objects, and the stable-set specialization.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galedesign/graphs.hpp"
#include "galedesign/matrix.hpp"
#include "galedesign/polytope.hpp"
#include "galedesign/rational.hpp"
#include "galedesign/spectral.hpp"

namespace gd {

// Weighted: some weight is negative (sum still nonzero).  Positive: all
// weights strictly positive.  Combinatorial: all weights equal 1/|W|.
enum class DesignKind { Weighted, Positive, Combinatorial };

const char* design_kind_name(DesignKind kind);

struct Design {
  int n = 0;                    // number of graph vertices
  int k = 0;                    // design strength
  std::vector<int> support;     // ascending vertex labels, the set W
  Vec<double> weights;          // aligned with support, sums to 1
  Vec<Rat> weights_exact;       // aligned with support when exact
  bool exact = false;
  DesignKind kind = DesignKind::Weighted;
  std::string ordering_id;      // ordering the strength refers to
  int from_facet = -1;          // facet index when produced by enumeration
};

// Everything the facet route produces in one pass, kept together so callers
// can relate designs back to the geometry that certified them.
struct DesignEnumeration {
  Partition partition;
  VectorConfiguration config;
  std::vector<Facet> facets;
  std::vector<Design> designs;  // aligned with facets
};

struct VerifyReport {
  bool pass = false;
  bool exact = false;           // residuals were checked in exact arithmetic
  double ones_sum = 0.0;
  Rat ones_sum_exact = 0;
  std::vector<double> residuals;        // max |phi^T a| per ordered position 1..k-1
  std::vector<int> residual_clusters;   // cluster index behind each residual
  DesignKind observed_kind = DesignKind::Weighted;
  bool kind_ok = false;         // observed kind at least as strong as declared
  std::string message;          // empty when everything passed
};

// A full-support kernel vector of some column subset whose entries sum to
// zero: a circuit of the averaging matrix that is not a design.
struct NonDesignCircuit {
  std::vector<int> support;
  Vec<double> weights;
  Vec<Rat> weights_exact;
  bool exact = false;
};

struct CircuitDesigns {
  std::vector<Design> designs;
  std::vector<NonDesignCircuit> non_designs;
};

struct DesignAdjacency {
  std::vector<std::pair<int, int>> edges;  // indices into the design list
  std::vector<Design> union_designs;       // aligned with edges
};

struct StableSetReport {
  int k = 0;                    // extremal strength used (m - 1 clusters)
  double hoffman_ratio = 0.0;   // -lambda_min / (1 - lambda_min)
  double fraction = 0.0;        // |W| / n
  bool ratio_attained = false;
  Design design;                // uniform weights on the set
  VerifyReport report;
};

// Builds the design carried by a proper face given by its incident labels:
// support is the complement, weights come from the certified interior
// witness.  Throws NotAFace when the labels are not a face or the face is
// improper (all labels).
Design design_from_face(const std::vector<int>& face_labels, const Partition& p);

// Enumerates every facet of the configuration for (s, o, k) and converts
// each into its minimal positive design via a = -ukbar^T v, normalized.
// facet_tol is the floating path's facet sign tolerance; exact paths ignore it.
DesignEnumeration enumerate_minimal_designs(const Spectrum& s, const Ordering& o, int k,
                                            double facet_tol = 1e-8);

std::vector<Design> minimal_positive_designs(const Spectrum& s, const Ordering& o, int k);

// Convenience overload that recomputes the graph's spectrum internally; the
// ordering must have been built from a spectrum of the same graph.
std::vector<Design> minimal_positive_designs(const Graph& g, const Ordering& o, int k);

// Recomputes the averaging conditions for the design's strength: residuals
// |phi^T a| over ordered positions 1..k-1, the value 1^T a, and the kind
// claim.  Exact data is checked in exact arithmetic, otherwise against tol.
VerifyReport verify_design(const Design& d, const Spectrum& s, const Ordering& o,
                           double tol = 1e-8);

// Minimal supports of nonnegative kernel vectors of uk, found by scanning
// column subsets in ascending size.  Costs grow exponentially; scans whose
// subset count exceeds an internal budget throw BudgetExceeded.
std::vector<std::vector<int>> brute_force_positive_circuits(const Mat<Rat>& uk,
                                                            int max_support = 10);
std::vector<std::vector<int>> brute_force_positive_circuits(const Mat<double>& uk,
                                                            int max_support = 10);

// All circuits of uk up to the support cap, oriented so the entries sum to a
// positive value when possible.  Circuits with entries summing to zero are
// not designs and are reported on their own channel.
CircuitDesigns weighted_circuit_designs(const Mat<Rat>& uk, int max_support = 10);
CircuitDesigns weighted_circuit_designs(const Mat<double>& uk, int max_support = 10);

// Partition-aware overload: scans p's averaging matrix and stamps strength
// and ordering metadata onto the resulting designs.
CircuitDesigns weighted_circuit_designs(const Partition& p, int max_support = 10);

// Complement of a combinatorial design: the uniform design on [n] \ W with
// the same strength and ordering.  Throws NotCombinatorial for other kinds
// and BadInput when the complement would be empty.
Design complement(const Design& d);

// Edges between facet designs: two designs are adjacent when their facets
// meet in a ridge.  Each edge also yields the (non-minimal) positive design
// obtained by averaging the two weight vectors.  Inputs must come from the
// same enumeration, with designs aligned to facets.
DesignAdjacency design_adjacency(const std::vector<Design>& designs,
                                 const std::vector<Facet>& facets,
                                 const VectorConfiguration& c);

// Upper bound s_k on the support size of a minimal positive k-design.
int size_bound(const Spectrum& s, const Ordering& o, int k);

// Checks whether a stable set, weighted uniformly, is an extremal design for
// the ordering that places lambda_min last, and compares |W|/n against the
// ratio bound -lambda_min / (1 - lambda_min).  Throws NotStable when the set
// contains an edge.
StableSetReport check_stable_set_design(const Graph& g, const std::vector<int>& W);

}  // namespace gd
