// gale.cpp -- design construction, verification, circuit scans, and the
// design adjacency graph.

#include "galedesign/gale.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "galedesign/errors.hpp"

namespace gd {

namespace {

constexpr double kRelEqual = 1e-9;   // relative tolerance for "all weights equal"
constexpr double kZeroEps = 1e-8;    // floating zero threshold for kernel entries
constexpr double kSubsetBudget = 1e7;

int kind_rank(DesignKind kind) {
  switch (kind) {
    case DesignKind::Weighted: return 0;
    case DesignKind::Positive: return 1;
    case DesignKind::Combinatorial: return 2;
  }
  return 0;
}

DesignKind classify_weights(const Vec<Rat>& w) {
  bool all_positive = true;
  bool all_equal = true;
  for (const Rat& v : w) {
    if (v <= 0) all_positive = false;
    if (v != w.front()) all_equal = false;
  }
  if (all_positive && all_equal) return DesignKind::Combinatorial;
  if (all_positive) return DesignKind::Positive;
  return DesignKind::Weighted;
}

DesignKind classify_weights(const Vec<double>& w) {
  bool all_positive = true;
  double lo = w.front(), hi = w.front();
  for (double v : w) {
    if (!(v > 0)) all_positive = false;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!all_positive) return DesignKind::Weighted;
  if (hi - lo <= kRelEqual * hi) return DesignKind::Combinatorial;
  return DesignKind::Positive;
}

// Converts one enumerated facet into its design: support is the complement
// of the incident labels and the weights are a = -ukbar^T v, normalized.
Design design_from_facet(const Facet& f, const Partition& p, int facet_index) {
  Design d;
  d.n = p.n;
  d.k = p.k;
  d.ordering_id = p.ordering_id;
  d.from_facet = facet_index;

  std::vector<char> incident(p.n, 0);
  for (int lbl : f.incident) incident[lbl] = 1;
  for (int w = 0; w < p.n; ++w) {
    if (!incident[w]) d.support.push_back(w);
  }
  if (d.support.empty()) {
    throw std::logic_error("facet is incident to every label; cannot carry a design");
  }

  if (f.exact && p.ukbar_exact_ok) {
    Vec<Rat> raw = mat_transpose_vec(p.ukbar_exact, f.functional_exact);
    for (int lbl : f.incident) {
      if (raw[lbl] != 0) throw std::logic_error("exact facet functional is nonzero on an incident label");
    }
    Rat total = 0;
    for (int w : d.support) {
      Rat value = -raw[w];
      if (value <= 0) throw std::logic_error("facet functional produced a nonpositive design weight");
      d.weights_exact.push_back(value);
      total += value;
    }
    for (Rat& v : d.weights_exact) v /= total;
    d.weights = to_double_vec(d.weights_exact);
    d.exact = true;
    d.kind = classify_weights(d.weights_exact);
  } else {
    Vec<double> raw = mat_transpose_vec(p.ukbar, f.functional);
    double total = 0;
    for (int w : d.support) {
      double value = -raw[w];
      if (!(value > 0)) throw std::logic_error("facet functional produced a nonpositive design weight");
      d.weights.push_back(value);
      total += value;
    }
    for (double& v : d.weights) v /= total;
    d.exact = false;
    d.kind = classify_weights(d.weights);
  }
  return d;
}

double subset_budget(int n, int cap) {
  double total = 0;
  double binom = 1;  // C(n, 0)
  for (int size = 1; size <= cap; ++size) {
    binom = binom * (n - size + 1) / size;
    total += binom;
    if (total > 2 * kSubsetBudget) break;
  }
  return total;
}

// Scans column subsets of uk in ascending size, pruning supersets of circuit
// supports already found, and invokes on_circuit(support, kernel_vector) for
// every circuit: a subset whose kernel is one-dimensional with full support.
template <class T, class Fn>
void scan_circuits(const Mat<T>& uk, int max_support, Fn&& on_circuit) {
  const int n = uk.cols;
  if (n <= 0) fail(Err::BadInput, "circuit scan needs a matrix with at least one column");
  if (max_support < 1) fail(Err::BadInput, "max_support must be at least 1");
  if (n > 20) {
    fail(Err::BudgetExceeded,
         "brute-force circuit scan is capped at 20 columns; got " + std::to_string(n));
  }
  const int cap = std::min(max_support, n);
  const double budget = subset_budget(n, cap);
  if (budget > kSubsetBudget) {
    std::ostringstream os;
    os << "circuit scan would visit about " << budget << " subsets; lower max_support";
    fail(Err::BudgetExceeded, os.str());
  }
  const double eps = NumTraits<T>::exact ? 0.0 : kZeroEps;

  std::vector<std::vector<int>> circuit_supports;
  for (int size = 1; size <= cap; ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      bool pruned = false;
      for (const std::vector<int>& cs : circuit_supports) {
        if (static_cast<int>(cs.size()) < size &&
            std::includes(pick.begin(), pick.end(), cs.begin(), cs.end())) {
          pruned = true;
          break;
        }
      }
      if (!pruned) {
        Mat<T> sub(uk.rows, size);
        for (int i = 0; i < uk.rows; ++i) {
          for (int j = 0; j < size; ++j) sub(i, j) = uk(i, pick[j]);
        }
        Mat<T> ker = kernel_rows(sub, eps);
        if (ker.rows == 1) {
          Vec<T> x = ker.row(0);
          bool full = true;
          if constexpr (NumTraits<T>::exact) {
            for (const T& v : x) {
              if (v == 0) { full = false; break; }
            }
          } else {
            double top = 0;
            for (double v : x) top = std::max(top, std::abs(v));
            for (double v : x) {
              if (std::abs(v) <= kZeroEps * top) { full = false; break; }
            }
          }
          if (full) {
            circuit_supports.push_back(pick);
            on_circuit(pick, x);
          }
        }
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

template <class T>
std::vector<std::vector<int>> positive_circuits_impl(const Mat<T>& uk, int max_support) {
  std::vector<std::vector<int>> out;
  scan_circuits(uk, max_support, [&](const std::vector<int>& support, const Vec<T>& x) {
    bool has_pos = false, has_neg = false;
    for (const T& v : x) {
      if (v > 0) has_pos = true;
      if (v < 0) has_neg = true;
    }
    if (!(has_pos && has_neg)) out.push_back(support);
  });
  return out;
}

template <class T>
CircuitDesigns circuit_designs_impl(const Mat<T>& uk, int max_support) {
  CircuitDesigns out;
  scan_circuits(uk, max_support, [&](const std::vector<int>& support, Vec<T> x) {
    T total = T(0);
    for (const T& v : x) total += v;
    bool zero_sum;
    if constexpr (NumTraits<T>::exact) {
      zero_sum = total == 0;
    } else {
      double scale = 0;
      for (double v : x) scale += std::abs(v);
      zero_sum = std::abs(total) <= kZeroEps * scale;
    }
    if (zero_sum) {
      if (x.front() < 0) {
        for (T& v : x) v = -v;
      }
      NonDesignCircuit c;
      c.support = support;
      if constexpr (NumTraits<T>::exact) {
        c.weights_exact = x;
        c.weights = to_double_vec(x);
        c.exact = true;
      } else {
        c.weights = x;
      }
      out.non_designs.push_back(std::move(c));
    } else {
      if (total < 0) {
        for (T& v : x) v = -v;
        total = -total;
      }
      for (T& v : x) v /= total;
      Design d;
      d.n = uk.cols;
      d.support = support;
      if constexpr (NumTraits<T>::exact) {
        d.weights_exact = x;
        d.weights = to_double_vec(x);
        d.exact = true;
        d.kind = classify_weights(d.weights_exact);
      } else {
        d.weights = x;
        d.kind = classify_weights(d.weights);
      }
      out.designs.push_back(std::move(d));
    }
  });
  return out;
}

// Averages the weight vectors of two adjacent facet designs into the union
// design on W union W'.
Design union_design(const Design& a, const Design& b) {
  Design u;
  u.n = a.n;
  u.k = a.k;
  u.ordering_id = a.ordering_id;
  if (a.exact && b.exact) {
    Vec<Rat> full(a.n, Rat(0));
    for (size_t i = 0; i < a.support.size(); ++i) full[a.support[i]] += a.weights_exact[i] / 2;
    for (size_t i = 0; i < b.support.size(); ++i) full[b.support[i]] += b.weights_exact[i] / 2;
    for (int w = 0; w < a.n; ++w) {
      if (full[w] != 0) {
        u.support.push_back(w);
        u.weights_exact.push_back(full[w]);
      }
    }
    u.weights = to_double_vec(u.weights_exact);
    u.exact = true;
    u.kind = classify_weights(u.weights_exact);
  } else {
    Vec<double> full(a.n, 0.0);
    for (size_t i = 0; i < a.support.size(); ++i) full[a.support[i]] += a.weights[i] / 2;
    for (size_t i = 0; i < b.support.size(); ++i) full[b.support[i]] += b.weights[i] / 2;
    for (int w = 0; w < a.n; ++w) {
      if (full[w] != 0.0) {
        u.support.push_back(w);
        u.weights.push_back(full[w]);
      }
    }
    u.kind = classify_weights(u.weights);
  }
  return u;
}

void validate_support(const std::vector<int>& support, int n) {
  if (support.empty()) fail(Err::BadInput, "design support is empty");
  for (size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 0 || support[i] >= n) {
      fail(Err::BadInput, "support label " + std::to_string(support[i]) +
                              " is outside [0, " + std::to_string(n) + ")");
    }
    if (i > 0 && support[i] <= support[i - 1]) {
      fail(Err::BadInput, "support labels must be strictly ascending");
    }
  }
}

}  // namespace

const char* design_kind_name(DesignKind kind) {
  switch (kind) {
    case DesignKind::Weighted: return "weighted";
    case DesignKind::Positive: return "positive";
    case DesignKind::Combinatorial: return "combinatorial";
  }
  return "weighted";
}

Design design_from_face(const std::vector<int>& face_labels, const Partition& p) {
  VectorConfiguration c = configuration_from_partition(p);
  FaceCheck fc = p.uk_exact_ok ? is_face(c, p.uk_exact, face_labels)
                               : is_face(c, p.uk, face_labels);
  if (!fc.is_face) {
    fail(Err::NotAFace, "the label set does not span a face of the eigenpolytope");
  }
  if (fc.improper) {
    fail(Err::NotAFace, "the label set spans the improper face, which carries no design");
  }
  Design d;
  d.n = p.n;
  d.k = p.k;
  d.ordering_id = p.ordering_id;
  d.support = fc.complement;
  if (fc.exact) {
    d.weights_exact = fc.witness_exact;
    d.weights = to_double_vec(d.weights_exact);
    d.exact = true;
    d.kind = classify_weights(d.weights_exact);
  } else {
    d.weights = fc.witness;
    d.kind = classify_weights(d.weights);
  }
  if (kind_rank(d.kind) < kind_rank(DesignKind::Positive)) {
    throw std::logic_error("face witness was not strictly positive");
  }
  return d;
}

DesignEnumeration enumerate_minimal_designs(const Spectrum& s, const Ordering& o, int k,
                                            double facet_tol) {
  DesignEnumeration out;
  out.partition = make_partition(s, o, k);
  out.config = configuration_from_partition(out.partition);
  out.facets = enumerate_facets(out.config, facet_tol);
  out.designs.reserve(out.facets.size());
  for (size_t i = 0; i < out.facets.size(); ++i) {
    out.designs.push_back(design_from_facet(out.facets[i], out.partition, static_cast<int>(i)));
  }
  return out;
}

std::vector<Design> minimal_positive_designs(const Spectrum& s, const Ordering& o, int k) {
  return enumerate_minimal_designs(s, o, k).designs;
}

std::vector<Design> minimal_positive_designs(const Graph& g, const Ordering& o, int k) {
  return minimal_positive_designs(default_spectrum(g), o, k);
}

VerifyReport verify_design(const Design& d, const Spectrum& s, const Ordering& o, double tol) {
  if (tol <= 0) fail(Err::BadInput, "verification tolerance must be positive");
  const int n = s.n;
  const int m = s.m();
  if (d.n != 0 && d.n != n) {
    fail(Err::BadInput, "design describes " + std::to_string(d.n) +
                            " vertices but the spectrum describes " + std::to_string(n));
  }
  if (static_cast<int>(o.perm.size()) != m) {
    fail(Err::BadInput, "ordering does not match the spectrum's cluster count");
  }
  if (d.k < 1 || d.k > m) {
    fail(Err::KOutOfRange, "design strength k=" + std::to_string(d.k) +
                               " must lie in [1, " + std::to_string(m) + "]");
  }
  validate_support(d.support, n);
  if (d.weights.size() != d.support.size()) {
    fail(Err::BadInput, "design has " + std::to_string(d.support.size()) +
                            " support labels but " + std::to_string(d.weights.size()) + " weights");
  }

  VerifyReport rep;
  std::ostringstream msg;

  if (!d.ordering_id.empty() && d.ordering_id != o.id()) {
    rep.pass = false;
    rep.message = "ordering mismatch: design was built for '" + d.ordering_id +
                  "' but verification uses '" + o.id() + "'";
    return rep;
  }

  bool clusters_exact = true;
  for (int pos = 1; pos < d.k; ++pos) {
    if (!s.clusters[o.perm[pos]].exact) clusters_exact = false;
  }
  const bool use_exact =
      d.exact && clusters_exact && d.weights_exact.size() == d.support.size();
  rep.exact = use_exact;

  for (size_t i = 0; i < d.support.size(); ++i) {
    const bool zero = use_exact ? d.weights_exact[i] == 0 : d.weights[i] == 0.0;
    if (zero) {
      rep.pass = false;
      rep.message = "support mismatch: vertex " + std::to_string(d.support[i]) +
                    " is listed in the support but carries weight zero";
      return rep;
    }
  }

  bool ones_ok;
  if (use_exact) {
    Rat total = 0;
    for (const Rat& v : d.weights_exact) total += v;
    rep.ones_sum_exact = total;
    rep.ones_sum = to_double(total);
    ones_ok = total != 0;
  } else {
    double total = 0;
    for (double v : d.weights) total += v;
    rep.ones_sum = total;
    ones_ok = std::abs(total) > tol;
  }
  if (!ones_ok) msg << "the weights sum to zero, so the design fails to average the constant eigenvector; ";

  bool residuals_ok = true;
  for (int pos = 1; pos < d.k; ++pos) {
    const int cl = o.perm[pos];
    const Cluster& cluster = s.clusters[cl];
    double worst = 0;
    bool this_ok = true;
    if (use_exact) {
      for (int r = 0; r < cluster.basis_exact.rows; ++r) {
        Rat acc = 0;
        for (size_t i = 0; i < d.support.size(); ++i) {
          acc += cluster.basis_exact(r, d.support[i]) * d.weights_exact[i];
        }
        if (acc != 0) this_ok = false;
        worst = std::max(worst, std::abs(to_double(acc)));
      }
    } else {
      for (int r = 0; r < cluster.basis.rows; ++r) {
        double acc = 0;
        for (size_t i = 0; i < d.support.size(); ++i) {
          acc += cluster.basis(r, d.support[i]) * d.weights[i];
        }
        worst = std::max(worst, std::abs(acc));
      }
      this_ok = worst <= tol;
    }
    rep.residuals.push_back(worst);
    rep.residual_clusters.push_back(cl);
    if (!this_ok) {
      residuals_ok = false;
      msg << "averaging residual " << worst << " at ordered position " << pos
          << " (eigenvalue " << cluster.value << ") exceeds tolerance; ";
    }
  }

  rep.observed_kind = use_exact ? classify_weights(d.weights_exact) : classify_weights(d.weights);
  rep.kind_ok = kind_rank(rep.observed_kind) >= kind_rank(d.kind);
  if (!rep.kind_ok) {
    msg << "declared kind '" << design_kind_name(d.kind) << "' but the weights are only '"
        << design_kind_name(rep.observed_kind) << "'; ";
  }

  rep.pass = ones_ok && residuals_ok && rep.kind_ok;
  rep.message = msg.str();
  if (!rep.message.empty() && rep.message.back() == ' ') {
    rep.message.erase(rep.message.size() - 2);  // drop the trailing "; "
  }
  return rep;
}

std::vector<std::vector<int>> brute_force_positive_circuits(const Mat<Rat>& uk, int max_support) {
  return positive_circuits_impl(uk, max_support);
}

std::vector<std::vector<int>> brute_force_positive_circuits(const Mat<double>& uk, int max_support) {
  return positive_circuits_impl(uk, max_support);
}

CircuitDesigns weighted_circuit_designs(const Mat<Rat>& uk, int max_support) {
  return circuit_designs_impl(uk, max_support);
}

CircuitDesigns weighted_circuit_designs(const Mat<double>& uk, int max_support) {
  return circuit_designs_impl(uk, max_support);
}

CircuitDesigns weighted_circuit_designs(const Partition& p, int max_support) {
  CircuitDesigns out = p.uk_exact_ok ? weighted_circuit_designs(p.uk_exact, max_support)
                                     : weighted_circuit_designs(p.uk, max_support);
  for (Design& d : out.designs) {
    d.n = p.n;
    d.k = p.k;
    d.ordering_id = p.ordering_id;
  }
  return out;
}

Design complement(const Design& d) {
  if (d.kind != DesignKind::Combinatorial) {
    fail(Err::NotCombinatorial,
         "complement closure applies to combinatorial designs; this one is " +
             std::string(design_kind_name(d.kind)));
  }
  if (d.n <= 0) fail(Err::BadInput, "design does not record the number of vertices");
  validate_support(d.support, d.n);
  const int size = d.n - static_cast<int>(d.support.size());
  if (size == 0) fail(Err::BadInput, "the complement of a full-support design is empty");

  Design out;
  out.n = d.n;
  out.k = d.k;
  out.ordering_id = d.ordering_id;
  out.kind = DesignKind::Combinatorial;
  out.exact = true;  // uniform weights are exactly rational no matter how d was found
  std::vector<char> in(d.n, 0);
  for (int w : d.support) in[w] = 1;
  for (int w = 0; w < d.n; ++w) {
    if (!in[w]) {
      out.support.push_back(w);
      out.weights_exact.push_back(Rat(1, size));
      out.weights.push_back(1.0 / size);
    }
  }
  return out;
}

DesignAdjacency design_adjacency(const std::vector<Design>& designs,
                                 const std::vector<Facet>& facets,
                                 const VectorConfiguration& c) {
  if (designs.size() != facets.size()) {
    fail(Err::BadInput, "designs and facets must be aligned lists from the same enumeration");
  }
  DesignAdjacency out;
  const int count = static_cast<int>(facets.size());
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      std::vector<int> common;
      std::set_intersection(facets[i].incident_classes.begin(), facets[i].incident_classes.end(),
                            facets[j].incident_classes.begin(), facets[j].incident_classes.end(),
                            std::back_inserter(common));
      bool adjacent;
      if (common.empty()) {
        // A segment's two endpoint facets meet in the empty ridge.
        adjacent = (c.dim == 2);
      } else {
        const int ar = c.exact ? affine_rank_of_columns(c.reps_exact, common, 0.0)
                               : affine_rank_of_columns(c.reps, common, 1e-7);
        adjacent = (ar == c.dim - 3);
      }
      if (adjacent) {
        out.edges.emplace_back(i, j);
        out.union_designs.push_back(union_design(designs[i], designs[j]));
      }
    }
  }
  return out;
}

int size_bound(const Spectrum& s, const Ordering& o, int k) { return size_bound_sk(s, o, k); }

StableSetReport check_stable_set_design(const Graph& g, const std::vector<int>& W) {
  std::vector<int> sorted = W;
  std::sort(sorted.begin(), sorted.end());
  validate_support(sorted, g.n);
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.adjacent(sorted[i], sorted[j])) {
        fail(Err::NotStable, "vertices " + std::to_string(sorted[i]) + " and " +
                                 std::to_string(sorted[j]) + " are adjacent inside the set");
      }
    }
  }

  Spectrum s = default_spectrum(g);
  const int m = s.m();
  if (m < 2) fail(Err::BadInput, "the graph has a single eigenvalue cluster; no extremal strength exists");
  std::vector<int> identity(m);
  std::iota(identity.begin(), identity.end(), 0);
  // Descending eigenvalue order already places lambda_min last.
  Ordering o = custom_order(s, identity);
  const int k = m - 1;

  StableSetReport rep;
  rep.k = k;
  Design d;
  d.n = g.n;
  d.k = k;
  d.ordering_id = o.id();
  d.kind = DesignKind::Combinatorial;
  d.exact = true;
  d.support = sorted;
  const int size = static_cast<int>(sorted.size());
  d.weights_exact.assign(size, Rat(1, size));
  d.weights.assign(size, 1.0 / size);
  rep.design = d;
  rep.report = verify_design(d, s, o, 1e-8);

  const Cluster& last = s.clusters.back();
  rep.hoffman_ratio = -last.value / (1.0 - last.value);
  rep.fraction = static_cast<double>(size) / g.n;
  if (last.exact) {
    const Rat lm = last.value_exact;
    rep.ratio_attained = Rat(size, g.n) == -lm / (1 - lm);
  } else {
    rep.ratio_attained = std::abs(rep.fraction - rep.hoffman_ratio) <= 1e-9;
  }
  return rep;
}

}  // namespace gd
