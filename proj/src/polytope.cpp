// polytope.cpp
// Coincidence-class bookkeeping, incremental double description over the dual
// cone, floating-point facet certification, face tests, and f-vectors.
#include "galedesign/polytope.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "galedesign/lp.hpp"

namespace gd {

int thread_count() {
  static const int n = [] {
    const char* env = std::getenv("GALEDESIGN_THREADS");
    if (env == nullptr) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 1;
    return static_cast<int>(std::min(v, 64L));
  }();
  return n;
}

namespace {

// Runs f(0..n-1); work is split across thread_count() workers when asked for.
// Each index writes only its own slot, so the result is order-independent.
template <class F>
void parallel_for(int n, F&& f) {
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct BitSet {
  std::vector<uint64_t> w;
  BitSet() = default;
  explicit BitSet(int nbits) : w(static_cast<size_t>(nbits + 63) / 64, 0) {}
  void set(int i) { w[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }
  bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
  int count() const {
    int s = 0;
    for (uint64_t x : w) s += __builtin_popcountll(x);
    return s;
  }
  bool superset_of(const BitSet& o) const {
    for (size_t i = 0; i < w.size(); ++i) {
      if (o.w[i] & ~w[i]) return false;
    }
    return true;
  }
  static BitSet intersection(const BitSet& a, const BitSet& b) {
    BitSet r;
    r.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
};

template <class T>
struct Ray {
  Vec<T> v;
  BitSet zero;  // indices of configuration classes with p . v == 0
};

void normalize_direction(Vec<Rat>& v) { make_primitive(v); }

void normalize_direction(Vec<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m > 0) {
    for (double& x : v) x /= m;
  }
}

template <class T>
Mat<T> rows_from_columns(const Mat<T>& m, const std::vector<int>& cols) {
  Mat<T> out(static_cast<int>(cols.size()), m.rows);
  for (size_t i = 0; i < cols.size(); ++i) {
    for (int r = 0; r < m.rows; ++r) out(static_cast<int>(i), r) = m(r, cols[i]);
  }
  return out;
}

// Inserts the halfspace {v : p_j . v <= 0} into the ray description of the
// dual cone. Standard double description step: keep nonpositive rays, record
// the new incidence on the zero rays, and combine adjacent (+,-) pairs.
template <class T>
void dd_insert(std::vector<Ray<T>>& rays, const Mat<T>& reps, int j, double eps) {
  const int dim = reps.rows;
  const Vec<T> p = reps.col(j);
  const int nr = static_cast<int>(rays.size());
  std::vector<T> val(nr);
  std::vector<int> sgn(nr);
  for (int i = 0; i < nr; ++i) {
    val[i] = dot(p, rays[i].v);
    sgn[i] = NumTraits<T>::is_zero(val[i], eps) ? 0 : (val[i] > T(0) ? 1 : -1);
  }

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < nr; ++a) {
    if (sgn[a] != 1) continue;
    for (int b = 0; b < nr; ++b) {
      if (sgn[b] == -1) pairs.emplace_back(a, b);
    }
  }

  // Combinatorial adjacency: a (+,-) pair spans an edge of the current cone
  // exactly when no third ray's zero set contains the pair's common zeros.
  std::vector<char> adjacent(pairs.size(), 0);
  parallel_for(static_cast<int>(pairs.size()), [&](int pi) {
    const auto [a, b] = pairs[pi];
    const BitSet common = BitSet::intersection(rays[a].zero, rays[b].zero);
    if (common.count() < dim - 2) return;
    for (int c = 0; c < nr; ++c) {
      if (c == a || c == b) continue;
      if (rays[c].zero.superset_of(common)) return;
    }
    adjacent[pi] = 1;
  });

  std::vector<Ray<T>> born;
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    if (!adjacent[pi]) continue;
    const auto [a, b] = pairs[pi];
    Ray<T> r;
    r.v.resize(p.size());
    for (size_t i = 0; i < p.size(); ++i) r.v[i] = val[a] * rays[b].v[i] - val[b] * rays[a].v[i];
    normalize_direction(r.v);
    r.zero = BitSet::intersection(rays[a].zero, rays[b].zero);
    r.zero.set(j);
    born.push_back(std::move(r));
  }

  std::vector<Ray<T>> next;
  next.reserve(rays.size() + born.size());
  for (int i = 0; i < nr; ++i) {
    if (sgn[i] == 1) continue;
    if (sgn[i] == 0) rays[i].zero.set(j);
    next.push_back(std::move(rays[i]));
  }
  for (Ray<T>& r : born) next.push_back(std::move(r));
  rays.swap(next);
}

// Extreme rays of the dual cone {v : reps^T v <= 0}. reps must have full row
// rank; the returned zero sets are complete over all columns.
template <class T>
std::vector<Ray<T>> dd_extreme_rays(const Mat<T>& reps, double eps) {
  const int dim = reps.rows;
  const int d = reps.cols;

  std::vector<int> base;
  Mat<T> acc(0, dim);
  for (int j = 0; j < d && static_cast<int>(base.size()) < dim; ++j) {
    Mat<T> trial = acc;
    Mat<T> row(1, dim);
    for (int r = 0; r < dim; ++r) row(0, r) = reps(r, j);
    trial.append_rows(row);
    if (rank_of(trial, eps) == trial.rows) {
      acc = std::move(trial);
      base.push_back(j);
    }
  }
  if (static_cast<int>(base.size()) < dim)
    fail(Err::RankDeficient, "facet enumeration needs a full-dimensional configuration");

  const Mat<T> binv = inverse(acc, eps);
  std::vector<Ray<T>> rays(dim);
  for (int c = 0; c < dim; ++c) {
    rays[c].v.resize(dim);
    for (int i = 0; i < dim; ++i) rays[c].v[i] = -binv(i, c);
    normalize_direction(rays[c].v);
    rays[c].zero = BitSet(d);
    for (int t = 0; t < dim; ++t) {
      if (t != c) rays[c].zero.set(base[t]);
    }
  }

  std::vector<char> inserted(d, 0);
  for (int j : base) inserted[j] = 1;
  for (int j = 0; j < d; ++j) {
    if (!inserted[j]) dd_insert(rays, reps, j, eps);
  }
  return rays;
}

std::vector<int> bitset_members(const BitSet& z, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (z.test(i)) out.push_back(i);
  }
  return out;
}

void attach_labels(Facet& f, const VectorConfiguration& c) {
  f.incident.clear();
  for (int cl : f.incident_classes)
    f.incident.insert(f.incident.end(), c.classes[cl].begin(), c.classes[cl].end());
  std::sort(f.incident.begin(), f.incident.end());
}

void sort_canonically(std::vector<Facet>& facets) {
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.incident < b.incident; });
}

// Exact path: re-checks every sign against the functional and the facet's
// affine dimension. A failure here is a library bug, not a data problem.
Facet finalize_exact(const VectorConfiguration& c, const Vec<Rat>& v, const std::vector<int>& incident_classes) {
  for (int cl = 0; cl < c.n_classes(); ++cl) {
    Rat s = 0;
    for (int r = 0; r < c.dim; ++r) s += v[r] * c.reps_exact(r, cl);
    const bool on = std::binary_search(incident_classes.begin(), incident_classes.end(), cl);
    if (on ? (s != 0) : (s >= 0))
      throw std::logic_error("facet enumeration produced an unsupported functional");
  }
  if (rank_of(rows_from_columns(c.reps_exact, incident_classes), 0.0) != c.dim - 1)
    throw std::logic_error("facet incident set has the wrong rank");
  Facet f;
  f.exact = true;
  f.functional_exact = v;
  f.functional = to_double_vec(v);
  f.incident_classes = incident_classes;
  f.certificate = "exact";
  attach_labels(f, c);
  return f;
}

constexpr double kSignEps = 1e-8;  // default double-description sign oracle

// Floating path: refit the functional from the incident set (SVD nullspace),
// reclassify every class against it, then certify a strict separation margin
// with a linear program. Values in (-10*sign_tol, -sign_tol) sit between the
// thresholds and abort the run.
Facet certify_float(const VectorConfiguration& c, std::vector<int> incident_classes,
                    double sign_tol) {
  const double band_hi = 10.0 * sign_tol;
  const int dim = c.dim;
  const int nc = c.n_classes();
  Vec<double> v(dim, 0.0);
  for (int pass = 0;; ++pass) {
    if (static_cast<int>(incident_classes.size()) < dim - 1)
      fail(Err::NumericallyDegenerate, "facet candidate has too few incident vertices to span a hyperplane");
    Eigen::MatrixXd P(static_cast<int>(incident_classes.size()), dim);
    for (size_t i = 0; i < incident_classes.size(); ++i) {
      for (int r = 0; r < dim; ++r) P(static_cast<int>(i), r) = c.reps(r, incident_classes[i]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(P, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = std::max(1.0, sv(0));
    const double second = sv(dim - 2);
    const double smallest = (P.rows() >= dim) ? sv(dim - 1) : 0.0;
    if (second <= 1e-5 * scale)
      fail(Err::NumericallyDegenerate, "facet candidate's incident set does not span a hyperplane");
    if (smallest > 1e-7 * scale)
      fail(Err::NumericallyDegenerate, "facet candidate's incident set is not coplanar within tolerance");
    for (int r = 0; r < dim; ++r) v[r] = svd.matrixV()(r, dim - 1);

    double outside_sum = 0.0;
    for (int cl = 0; cl < nc; ++cl) {
      if (!std::binary_search(incident_classes.begin(), incident_classes.end(), cl))
        outside_sum += dot(v, c.reps.col(cl));
    }
    if (outside_sum > 0) {
      for (double& x : v) x = -x;
    }

    std::vector<int> refit;
    for (int cl = 0; cl < nc; ++cl) {
      const double s = dot(v, c.reps.col(cl));
      if (std::abs(s) <= sign_tol) {
        refit.push_back(cl);
      } else if (s > -band_hi) {
        fail(Err::NumericallyDegenerate,
             "facet support value " + std::to_string(s) + " lies in the tolerance band");
      }
    }
    if (refit == incident_classes) break;
    if (pass >= 1) fail(Err::NumericallyDegenerate, "facet incident set did not stabilize under refitting");
    incident_classes = std::move(refit);
  }

  // Margin LP: maximize t with v . u = 0 on the incident classes,
  // v . u <= -t elsewhere, and |v| constrained by sum of split parts = 1.
  std::vector<int> outside;
  for (int cl = 0; cl < nc; ++cl) {
    if (!std::binary_search(incident_classes.begin(), incident_classes.end(), cl)) outside.push_back(cl);
  }
  const int q = static_cast<int>(outside.size());
  const int nv = 2 * dim + 1 + q + 1;  // v+, v-, t, per-outside slack, norm slack
  const int rows = static_cast<int>(incident_classes.size()) + q + 1;
  Mat<double> A(rows, nv);
  Vec<double> b(rows, 0.0), obj(nv, 0.0);
  int row = 0;
  for (int cl : incident_classes) {
    for (int r = 0; r < dim; ++r) {
      A(row, r) = c.reps(r, cl);
      A(row, dim + r) = -c.reps(r, cl);
    }
    b[row++] = 0.0;
  }
  for (int oi = 0; oi < q; ++oi) {
    for (int r = 0; r < dim; ++r) {
      A(row, r) = c.reps(r, outside[oi]);
      A(row, dim + r) = -c.reps(r, outside[oi]);
    }
    A(row, 2 * dim) = 1.0;
    A(row, 2 * dim + 1 + oi) = 1.0;
    b[row++] = 0.0;
  }
  for (int r = 0; r < 2 * dim; ++r) A(row, r) = 1.0;
  A(row, nv - 1) = 1.0;
  b[row] = 1.0;
  obj[2 * dim] = 1.0;

  const LpResult<double> lp = simplex_max(A, b, obj, 1e-9);
  if (lp.status != LpStatus::Optimal || lp.objective <= sign_tol)
    fail(Err::NumericallyDegenerate, "facet candidate could not be certified by the margin program");

  Vec<double> vf(dim);
  for (int r = 0; r < dim; ++r) vf[r] = lp.x[r] - lp.x[dim + r];
  double norm = 0.0;
  for (double x : vf) norm = std::max(norm, std::abs(x));
  for (double& x : vf) x /= norm;

  Facet f;
  f.exact = false;
  f.functional = vf;
  f.incident_classes = incident_classes;
  f.certificate = "lp-certified";
  f.margin = lp.objective / norm;
  attach_labels(f, c);
  return f;
}

template <class T>
VectorConfiguration build_configuration(const Mat<T>& ukbar, bool exact) {
  if (ukbar.rows < 1 || ukbar.cols < 1) fail(Err::BadInput, "configuration matrix must be nonempty");
  for (int j = 0; j < ukbar.cols; ++j) {
    const bool ok = exact ? (ukbar(0, j) == T(1)) : NumTraits<T>::is_zero(ukbar(0, j) - T(1), 1e-9);
    if (!ok) fail(Err::BadInput, "first row of the configuration matrix must be all ones");
  }
  if (rank_of(ukbar, exact ? 0.0 : 1e-8) != ukbar.rows)
    fail(Err::RankDeficient, "configuration matrix does not have full row rank");

  VectorConfiguration c;
  c.dim = ukbar.rows;
  c.n_labels = ukbar.cols;
  c.exact = exact;
  c.class_of.assign(ukbar.cols, -1);
  std::vector<int> rep_label;
  for (int j = 0; j < ukbar.cols; ++j) {
    int found = -1;
    for (size_t cl = 0; cl < rep_label.size(); ++cl) {
      bool same = true;
      for (int r = 0; r < ukbar.rows && same; ++r) {
        const T diff = ukbar(r, j) - ukbar(r, rep_label[cl]);
        same = exact ? (diff == T(0)) : NumTraits<T>::is_zero(diff, 1e-7);
      }
      if (same) {
        found = static_cast<int>(cl);
        break;
      }
    }
    if (found == -1) {
      found = static_cast<int>(rep_label.size());
      rep_label.push_back(j);
      c.classes.push_back({});
    }
    c.class_of[j] = found;
    c.classes[found].push_back(j);
  }

  Mat<T> reps(ukbar.rows, static_cast<int>(rep_label.size()));
  for (size_t cl = 0; cl < rep_label.size(); ++cl) {
    for (int r = 0; r < ukbar.rows; ++r) reps(r, static_cast<int>(cl)) = ukbar(r, rep_label[cl]);
  }
  if constexpr (NumTraits<T>::exact) {
    c.points_exact = ukbar;
    c.reps_exact = reps;
    c.points = to_double_mat(ukbar);
    c.reps = to_double_mat(reps);
  } else {
    c.points = ukbar;
    c.reps = reps;
  }
  return c;
}

}  // namespace

VectorConfiguration configuration_from_matrix(const Mat<Rat>& ukbar) {
  return build_configuration(ukbar, true);
}

VectorConfiguration configuration_from_matrix(const Mat<double>& ukbar) {
  return build_configuration(ukbar, false);
}

VectorConfiguration configuration_from_partition(const Partition& p) {
  if (p.ukbar_exact_ok) return configuration_from_matrix(p.ukbar_exact);
  return configuration_from_matrix(p.ukbar);
}

std::vector<Facet> enumerate_facets(const VectorConfiguration& c, double sign_tol) {
  if (c.dim < 2) fail(Err::BadInput, "facet enumeration needs a configuration of dimension at least 2");
  if (!(sign_tol > 0.0)) fail(Err::BadInput, "facet sign tolerance must be positive");
  std::vector<Facet> facets;
  if (c.exact) {
    for (const Ray<Rat>& r : dd_extreme_rays(c.reps_exact, 0.0))
      facets.push_back(finalize_exact(c, r.v, bitset_members(r.zero, c.n_classes())));
  } else {
    std::map<std::vector<int>, Facet> seen;
    for (const Ray<double>& r : dd_extreme_rays(c.reps, sign_tol)) {
      Facet f = certify_float(c, bitset_members(r.zero, c.n_classes()), sign_tol);
      seen.emplace(f.incident_classes, std::move(f));
    }
    for (auto& [key, f] : seen) facets.push_back(std::move(f));
  }
  sort_canonically(facets);
  return facets;
}

std::vector<long long> f_vector(const VectorConfiguration& c, const std::vector<Facet>& facets) {
  std::vector<std::vector<int>> faces;
  std::set<std::vector<int>> seen;
  for (const Facet& f : facets) {
    if (seen.insert(f.incident_classes).second) faces.push_back(f.incident_classes);
  }
  for (size_t i = 0; i < faces.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> meet;
      std::set_intersection(faces[i].begin(), faces[i].end(), faces[j].begin(), faces[j].end(),
                            std::back_inserter(meet));
      if (!meet.empty() && seen.insert(meet).second) faces.push_back(std::move(meet));
    }
  }

  std::vector<long long> f(static_cast<size_t>(c.dim) - 1, 0);
  for (const auto& face : faces) {
    const int ar = c.exact ? affine_rank_of_columns(c.reps_exact, face, 0.0)
                           : affine_rank_of_columns(c.reps, face, 1e-7);
    if (ar > c.dim - 2) throw std::logic_error("face of unexpected affine dimension in f-vector");
    ++f[ar];
  }
  return f;
}

std::vector<long long> f_vector(const VectorConfiguration& c) { return f_vector(c, enumerate_facets(c)); }

namespace {

template <class T>
FaceCheck is_face_impl(const VectorConfiguration& c, const Mat<T>& uk, const std::vector<int>& face_labels,
                       double eps) {
  if (uk.rows > 0 && uk.cols != c.n_labels)
    fail(Err::BadInput, "U_k column count does not match the configuration");
  std::vector<char> in_face(c.n_labels, 0);
  for (int l : face_labels) {
    if (l < 0 || l >= c.n_labels) fail(Err::BadInput, "face label " + std::to_string(l) + " out of range");
    if (in_face[l]) fail(Err::BadInput, "face label " + std::to_string(l) + " repeated");
    in_face[l] = 1;
  }

  FaceCheck fc;
  fc.exact = NumTraits<T>::exact;
  for (int l = 0; l < c.n_labels; ++l) {
    if (!in_face[l]) fc.complement.push_back(l);
  }
  const int q = static_cast<int>(fc.complement.size());
  if (q == 0) {
    fc.is_face = true;
    fc.improper = true;
    return fc;
  }
  const int r = uk.rows;

  // Stiemke program: maximize sum(s) subject to v.u_i >= s_i, 0 <= s_i <= 1.
  // A positive optimum yields a functional nonnegative on every complement
  // column and positive on one, refuting 0 in the relative interior.
  {
    const int nv = 2 * r + 3 * q;  // v+, v-, s, surplus, slack-for-s<=1
    Mat<T> A(2 * q, nv);
    Vec<T> b(2 * q, T(0)), obj(nv, T(0));
    for (int i = 0; i < q; ++i) {
      const int lab = fc.complement[i];
      for (int j = 0; j < r; ++j) {
        A(i, j) = uk(j, lab);
        A(i, r + j) = -uk(j, lab);
      }
      A(i, 2 * r + i) = T(-1);
      A(i, 2 * r + q + i) = T(-1);
      A(q + i, 2 * r + i) = T(1);
      A(q + i, 2 * r + 2 * q + i) = T(1);
      b[q + i] = T(1);
      obj[2 * r + i] = T(1);
    }
    const LpResult<T> lp = simplex_max(A, b, obj, eps);
    if (lp.status != LpStatus::Optimal)
      throw std::logic_error("Stiemke program must be feasible and bounded");
    const bool refuted = !NumTraits<T>::is_zero(lp.objective, 1e-7) && lp.objective > T(0);
    if (refuted) {
      fc.is_face = false;
      Vec<T> v(r);
      for (int j = 0; j < r; ++j) v[j] = lp.x[j] - lp.x[r + j];
      if constexpr (NumTraits<T>::exact) {
        make_primitive(v);
        fc.separator_exact = v;
        fc.separator = to_double_vec(v);
      } else {
        fc.separator = v;
      }
      return fc;
    }
  }

  // Witness program: maximize the minimum weight t over nonnegative
  // dependences with weights summing to 1. Stiemke guarantees t > 0 here.
  {
    const int nv = 2 * q + 1;  // weights, t, per-weight surplus
    const int rows = r + 1 + q;
    Mat<T> A(rows, nv);
    Vec<T> b(rows, T(0)), obj(nv, T(0));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < q; ++j) A(i, j) = uk(i, fc.complement[j]);
    }
    for (int j = 0; j < q; ++j) A(r, j) = T(1);
    b[r] = T(1);
    for (int j = 0; j < q; ++j) {
      A(r + 1 + j, j) = T(1);
      A(r + 1 + j, q) = T(-1);
      A(r + 1 + j, q + 1 + j) = T(-1);
    }
    obj[q] = T(1);
    const LpResult<T> lp = simplex_max(A, b, obj, eps);
    const bool positive = lp.status == LpStatus::Optimal && lp.objective > T(0) &&
                          !NumTraits<T>::is_zero(lp.objective, 1e-9);
    if (!positive) {
      if constexpr (NumTraits<T>::exact) {
        throw std::logic_error("witness program contradicts the Stiemke alternative");
      } else {
        fail(Err::NumericallyDegenerate, "face witness could not be certified within tolerance");
      }
    }
    fc.is_face = true;
    if constexpr (NumTraits<T>::exact) {
      fc.witness_exact.assign(lp.x.begin(), lp.x.begin() + q);
      fc.witness = to_double_vec(fc.witness_exact);
    } else {
      fc.witness.assign(lp.x.begin(), lp.x.begin() + q);
    }
  }
  return fc;
}

}  // namespace

FaceCheck is_face(const VectorConfiguration& c, const Mat<Rat>& uk, const std::vector<int>& face_labels) {
  return is_face_impl(c, uk, face_labels, 0.0);
}

FaceCheck is_face(const VectorConfiguration& c, const Mat<double>& uk, const std::vector<int>& face_labels) {
  return is_face_impl(c, uk, face_labels, 1e-9);
}

std::vector<Facet> max_vertex_facets(const VectorConfiguration&, const std::vector<Facet>& facets) {
  size_t best = 0;
  for (const Facet& f : facets) best = std::max(best, f.incident.size());
  std::vector<Facet> out;
  for (const Facet& f : facets) {
    if (f.incident.size() == best) out.push_back(f);
  }
  return out;
}

std::vector<Facet> max_vertex_facets(const VectorConfiguration& c) {
  return max_vertex_facets(c, enumerate_facets(c));
}

namespace {

template <class T>
std::vector<Facet> brute_force_facets_impl(const VectorConfiguration& c, const Mat<T>& reps, double eps) {
  const int dim = c.dim;
  const int nc = c.n_classes();
  if (nc < dim - 1) fail(Err::BadInput, "too few distinct vertices for a full-dimensional polytope");

  std::map<std::vector<int>, Facet> seen;
  std::vector<int> pick(dim - 1);
  for (int i = 0; i < dim - 1; ++i) pick[i] = i;
  while (true) {
    Mat<T> span = rows_from_columns(reps, pick);
    if (rank_of(span, eps) == dim - 1) {
      Mat<T> ker = kernel_rows(std::move(span), eps);
      if (ker.rows == 1) {
        Vec<T> v = ker.row(0);
        int pos = 0, neg = 0;
        std::vector<int> incident;
        for (int cl = 0; cl < nc; ++cl) {
          T s(0);
          for (int r = 0; r < dim; ++r) s += v[r] * reps(r, cl);
          if (NumTraits<T>::is_zero(s, eps))
            incident.push_back(cl);
          else if (s > T(0))
            ++pos;
          else
            ++neg;
        }
        if ((pos == 0) != (neg == 0)) {  // supporting and proper
          if (pos > 0) {
            for (T& x : v) x = -x;
          }
          normalize_direction(v);
          if (!seen.count(incident)) {
            Facet f;
            f.exact = NumTraits<T>::exact;
            f.incident_classes = incident;
            f.certificate = "brute-force";
            if constexpr (NumTraits<T>::exact) {
              f.functional_exact = v;
              f.functional = to_double_vec(v);
            } else {
              f.functional = v;
            }
            attach_labels(f, c);
            seen.emplace(std::move(incident), std::move(f));
          }
        }
      }
    }
    // next (dim-1)-combination of {0..nc-1}
    int i = dim - 2;
    while (i >= 0 && pick[i] == nc - (dim - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < dim - 1; ++t) pick[t] = pick[t - 1] + 1;
  }

  std::vector<Facet> out;
  out.reserve(seen.size());
  for (auto& [key, f] : seen) out.push_back(std::move(f));
  sort_canonically(out);
  return out;
}

}  // namespace

std::vector<Facet> brute_force_facets(const VectorConfiguration& c) {
  if (c.dim < 2) fail(Err::BadInput, "facet enumeration needs a configuration of dimension at least 2");
  if (c.exact) return brute_force_facets_impl(c, c.reps_exact, 0.0);
  return brute_force_facets_impl(c, c.reps, kSignEps);
}

}  // namespace gd
