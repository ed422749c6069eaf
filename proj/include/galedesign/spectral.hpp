// spectral.hpp -- eigenvalue clusters, eigenspace orderings, and the U_k /
// U_kbar partition of an orthogonal eigenbasis of the normalized adjacency.
//
// Two sources of eigendata coexist. The floating path (Eigen) always runs and
// provides orthonormal bases per cluster. Whenever a cluster's eigenvalue is
// rational, the exact rational kernel of (M - lambda I) replaces guesswork:
// those clusters additionally carry an exact orthogonal basis with primitive
// integer rows, enabling exact facet enumeration downstream.
#pragma once

#include <string>
#include <vector>

#include "galedesign/graphs.hpp"
#include "galedesign/matrix.hpp"

namespace gd {

struct Cluster {
  double value = 0.0;   // eigenvalue of AD^{-1}
  int mult = 0;         // eigenspace dimension
  Mat<double> basis;    // mult x n, mutually orthogonal rows
  bool exact = false;   // rational eigenvalue with certified exact basis
  Rat value_exact = 0;  // valid iff exact
  Mat<Rat> basis_exact;  // valid iff exact; orthogonal, primitive integer rows
};

struct Spectrum {
  int n = 0;
  int degree = 0;
  std::vector<Cluster> clusters;  // sorted by descending eigenvalue; [0] is lambda=1
  bool fully_exact = false;
  std::string source;  // "decompose" or "analytic"
  int m() const { return static_cast<int>(clusters.size()); }
};

enum class TiePolicy { PositiveFirst, NegativeFirst };

struct TieRecord {
  std::vector<int> positions;  // positions in the ordering holding equal |lambda|
  double abs_value = 0.0;
};

struct Ordering {
  std::vector<int> perm;  // perm[p] = cluster index placed at position p; perm[0] = 0
  std::string policy;     // "frequency:positive_first", "frequency:negative_first", "explicit"
  std::vector<TieRecord> ties;
  std::string id() const;  // stable string, recorded on every Design
};

struct Partition {
  int n = 0;
  int k = 0;
  int s_k = 0;
  Mat<double> uk;     // (s_k - 1) x n: bases of Lambda_2..Lambda_k in order
  Mat<double> ukbar;  // (n - s_k + 1) x n: all-ones row, then Lambda_{k+1}..Lambda_m
  bool uk_exact_ok = false;
  bool ukbar_exact_ok = false;
  Mat<Rat> uk_exact;
  Mat<Rat> ukbar_exact;
  std::vector<int> uk_row_cluster;  // cluster index supplying each U_k row
  std::vector<int> ordered_clusters;  // the ordering's perm
  std::string ordering_id;
};

// Eigendecomposition of a symmetric row-stochastic rational matrix. Clusters
// eigenvalues within cluster_tol; ClusterAmbiguity when two clusters land in
// the (tol, 10*tol] guard band.
Spectrum decompose(const Mat<Rat>& M, double cluster_tol = 1e-9);
Spectrum decompose(const Graph& g, double cluster_tol = 1e-9);

// Closed-form spectra for cycle, cocktail_party, and hypercube families.
Spectrum analytic_spectrum(const Graph& g);

// The standard way to obtain a graph's spectrum: the analytic path for the
// families that have one, numeric decomposition (with exact upgrades of
// rational eigenvalues) for everything else.
Spectrum default_spectrum(const Graph& g);

Ordering frequency_order(const Spectrum& s, TiePolicy tie = TiePolicy::PositiveFirst);

// perm lists cluster indices (0-based, as stored in the Spectrum) in the
// desired order; the lambda=1 cluster must stay first.
Ordering custom_order(const Spectrum& s, const std::vector<int>& perm);

// U_k / U_kbar for 1 <= k < m.
Partition make_partition(const Spectrum& s, const Ordering& o, int k);

// s_k, the universal upper bound on minimal positive k-design size.
int size_bound_sk(const Spectrum& s, const Ordering& o, int k);

}  // namespace gd
