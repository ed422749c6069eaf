#include "galedesign/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gd {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Infers delta from a matrix whose nonzero entries are all 1/delta. Returns 0
// when the entries do not have that shape.
long long infer_degree(const Mat<Rat>& m) {
  for (const Rat& x : m.a) {
    if (x != 0) {
      if (boost::multiprecision::numerator(x) != 1) return 0;
      const BigInt d = boost::multiprecision::denominator(x);
      if (d > 1'000'000) return 0;
      return d.convert_to<long long>();
    }
  }
  return 0;
}

Mat<Rat> exact_eigenspace(const Mat<Rat>& m, const Rat& lambda) {
  Mat<Rat> shifted = m;
  for (int i = 0; i < m.rows; ++i) shifted(i, i) -= lambda;
  return kernel_rows(std::move(shifted), 0.0);
}

}  // namespace

std::string Ordering::id() const {
  std::ostringstream os;
  os << policy << ":";
  for (size_t i = 0; i < perm.size(); ++i) {
    if (i) os << ",";
    os << perm[i];
  }
  return os.str();
}

Spectrum decompose(const Mat<Rat>& M, double cluster_tol) {
  const int n = M.rows;
  if (n == 0 || M.cols != n) fail(Err::BadInput, "decompose: matrix must be square and nonempty");
  if (cluster_tol <= 0) fail(Err::BadInput, "decompose: cluster tolerance must be positive");
  for (int i = 0; i < n; ++i) {
    Rat row_sum = 0;
    for (int j = 0; j < n; ++j) {
      if (M(i, j) != M(j, i)) fail(Err::BadInput, "decompose: matrix is not symmetric");
      row_sum += M(i, j);
    }
    if (row_sum != 1)
      fail(Err::BadInput, "decompose: row " + std::to_string(i) + " does not sum to 1");
  }

  Eigen::MatrixXd md(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) md(i, j) = to_double(M(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(md);
  if (solver.info() != Eigen::Success) fail(Err::BadInput, "decompose: eigensolver failed");

  // Eigen returns ascending eigenvalues; flip to descending.
  std::vector<double> vals(n);
  Eigen::MatrixXd vecs(n, n);
  for (int i = 0; i < n; ++i) {
    vals[i] = solver.eigenvalues()(n - 1 - i);
    vecs.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  if (vals[0] > 1.0 + 1e-7 || vals[n - 1] < -1.0 - 1e-7)
    fail(Err::BadInput, "decompose: spectrum escapes [-1,1]; not a normalized adjacency matrix");

  // Chain clustering on the descending list.
  std::vector<std::pair<int, int>> ranges;  // [first, last] eigenvalue indices
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || vals[i - 1] - vals[i] > cluster_tol) {
      ranges.push_back({start, i - 1});
      start = i;
    }
  }
  for (size_t c = 1; c < ranges.size(); ++c) {
    const double gap = vals[ranges[c - 1].second] - vals[ranges[c].first];
    if (gap <= 10.0 * cluster_tol)
      fail(Err::ClusterAmbiguity, "eigenvalue gap " + std::to_string(gap) + " lies in the guard band (" +
                                      std::to_string(cluster_tol) + ", " + std::to_string(10.0 * cluster_tol) +
                                      "]; adjust the clustering tolerance");
  }

  Spectrum s;
  s.n = n;
  s.source = "decompose";
  const long long delta = infer_degree(M);
  s.degree = static_cast<int>(delta);

  for (const auto& [lo, hi] : ranges) {
    Cluster c;
    c.mult = hi - lo + 1;
    double mean = 0;
    for (int i = lo; i <= hi; ++i) mean += vals[i];
    mean /= c.mult;
    c.value = mean;
    c.basis = Mat<double>(c.mult, n);
    for (int i = lo; i <= hi; ++i)
      for (int r = 0; r < n; ++r) c.basis(i - lo, r) = vecs(r, i);

    // Exact upgrade: a rational eigenvalue of M = A/delta must be t/delta
    // with t an integer (eigenvalues of the integer matrix A are algebraic
    // integers). Certify by computing the exact kernel.
    if (delta > 0) {
      const long long t = std::llround(mean * static_cast<double>(delta));
      const Rat cand = Rat(t) / delta;
      if (std::abs(mean - to_double(cand)) <= cluster_tol) {
        Mat<Rat> ker = exact_eigenspace(M, cand);
        if (ker.rows == c.mult) {
          c.exact = true;
          c.value_exact = cand;
          c.value = to_double(cand);
          c.basis_exact = gram_schmidt_rows(ker, 0.0);
        }
      }
    }
    s.clusters.push_back(std::move(c));
  }

  Cluster& top = s.clusters.front();
  if (std::abs(top.value - 1.0) > cluster_tol || top.mult != 1)
    fail(Err::BadInput, "decompose: lambda=1 must be a simple eigenvalue (is the graph connected?)");
  top.value = 1.0;
  top.exact = true;
  top.value_exact = 1;
  top.basis_exact = Mat<Rat>(1, n);
  for (int j = 0; j < n; ++j) {
    top.basis_exact(0, j) = 1;
    top.basis(0, j) = 1.0;  // store exactly the all-ones row, not a unit vector
  }

  s.fully_exact = std::all_of(s.clusters.begin(), s.clusters.end(), [](const Cluster& c) { return c.exact; });
  return s;
}

Spectrum decompose(const Graph& g, double cluster_tol) {
  Spectrum s = decompose(g.normalized_adjacency(), cluster_tol);
  s.degree = g.degree;
  return s;
}

namespace {

Spectrum analytic_cycle(const Graph& g) {
  const int n = g.n;
  Spectrum s;
  s.n = n;
  s.degree = 2;
  s.source = "analytic";
  for (int j = 0; j <= n / 2; ++j) {
    Cluster c;
    c.value = std::cos(2.0 * kPi * j / n);
    if (j == 0) {
      c.mult = 1;
      c.basis = Mat<double>(1, n);
      for (int t = 0; t < n; ++t) c.basis(0, t) = 1.0;
      c.exact = true;
      c.value_exact = 1;
      c.basis_exact = Mat<Rat>(1, n);
      for (int t = 0; t < n; ++t) c.basis_exact(0, t) = 1;
    } else if (2 * j == n) {
      c.mult = 1;
      c.basis = Mat<double>(1, n);
      for (int t = 0; t < n; ++t) c.basis(0, t) = (t % 2 == 0) ? 1.0 : -1.0;
      c.exact = true;
      c.value_exact = -1;
      c.basis_exact = Mat<Rat>(1, n);
      for (int t = 0; t < n; ++t) c.basis_exact(0, t) = (t % 2 == 0) ? 1 : -1;
    } else {
      c.mult = 2;
      c.basis = Mat<double>(2, n);
      for (int t = 0; t < n; ++t) {
        c.basis(0, t) = std::cos(2.0 * kPi * j * t / n);
        c.basis(1, t) = std::sin(2.0 * kPi * j * t / n);
      }
      // cos/sin rows have exact entries {0, +-1} exactly when n divides 4j;
      // with 0 < j < n/2 that forces 4j = n, angle step pi/2, eigenvalue 0.
      if ((4 * j) % n == 0) {
        c.exact = true;
        c.value_exact = 0;
        c.value = 0.0;
        c.basis_exact = Mat<Rat>(2, n);
        for (int t = 0; t < n; ++t) {
          const int quarter = t % 4;
          c.basis_exact(0, t) = (quarter == 0) ? 1 : (quarter == 2 ? -1 : 0);
          c.basis_exact(1, t) = (quarter == 1) ? 1 : (quarter == 3 ? -1 : 0);
        }
        c.basis = to_double_mat(c.basis_exact);
      }
    }
    s.clusters.push_back(std::move(c));
  }
  s.fully_exact = std::all_of(s.clusters.begin(), s.clusters.end(), [](const Cluster& c) { return c.exact; });
  return s;
}

Spectrum analytic_cocktail(const Graph& g) {
  const int d = static_cast<int>(g.params.at(0));
  const int n = 2 * d;
  Spectrum s;
  s.n = n;
  s.degree = 2 * (d - 1);
  s.source = "analytic";

  Cluster top;
  top.value = 1.0;
  top.mult = 1;
  top.exact = true;
  top.value_exact = 1;
  top.basis = Mat<double>(1, n);
  top.basis_exact = Mat<Rat>(1, n);
  for (int t = 0; t < n; ++t) {
    top.basis(0, t) = 1.0;
    top.basis_exact(0, t) = 1;
  }
  s.clusters.push_back(std::move(top));

  // lambda = 0, multiplicity d: differences within antipodal pairs.
  Cluster zero;
  zero.value = 0.0;
  zero.mult = d;
  zero.exact = true;
  zero.value_exact = 0;
  zero.basis_exact = Mat<Rat>(d, n);
  for (int i = 0; i < d; ++i) {
    zero.basis_exact(i, 2 * i) = 1;
    zero.basis_exact(i, 2 * i + 1) = -1;
  }
  zero.basis = to_double_mat(zero.basis_exact);
  s.clusters.push_back(std::move(zero));

  // lambda = -1/(d-1), multiplicity d-1: pair sums orthogonal to the all-ones
  // vector, orthogonalized exactly.
  Cluster neg;
  neg.value = -1.0 / (d - 1);
  neg.mult = d - 1;
  neg.exact = true;
  neg.value_exact = Rat(-1) / (d - 1);
  Mat<Rat> raw(d - 1, n);
  for (int i = 0; i + 1 < d; ++i) {
    raw(i, 2 * i) = 1;
    raw(i, 2 * i + 1) = 1;
    raw(i, 2 * i + 2) = -1;
    raw(i, 2 * i + 3) = -1;
  }
  neg.basis_exact = gram_schmidt_rows(raw, 0.0);
  neg.basis = to_double_mat(neg.basis_exact);
  s.clusters.push_back(std::move(neg));

  s.fully_exact = true;
  return s;
}

Spectrum analytic_hypercube(const Graph& g) {
  const int d = static_cast<int>(g.params.at(0));
  if (d > 10) fail(Err::BadInput, "analytic hypercube spectrum limited to d <= 10 (the basis is a dense 2^d x 2^d matrix)");
  const int n = 1 << d;
  Spectrum s;
  s.n = n;
  s.degree = d;
  s.source = "analytic";
  for (int i = 0; i <= d; ++i) {
    Cluster c;
    c.value_exact = Rat(d - 2 * i) / d;
    c.value = to_double(c.value_exact);
    c.exact = true;
    // Rows phi_x(y) = (-1)^{x.y} for |x| = i, x ascending as binary integers.
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (__builtin_popcount(static_cast<unsigned>(x)) == i) members.push_back(x);
    c.mult = static_cast<int>(members.size());
    c.basis_exact = Mat<Rat>(c.mult, n);
    c.basis = Mat<double>(c.mult, n);
    for (int r = 0; r < c.mult; ++r) {
      for (int y = 0; y < n; ++y) {
        const int p = __builtin_popcount(static_cast<unsigned>(members[r] & y)) & 1;
        c.basis_exact(r, y) = p ? -1 : 1;
        c.basis(r, y) = p ? -1.0 : 1.0;
      }
    }
    s.clusters.push_back(std::move(c));
  }
  s.fully_exact = true;
  return s;
}

}  // namespace

Spectrum analytic_spectrum(const Graph& g) {
  if (g.family == "cycle") return analytic_cycle(g);
  if (g.family == "cocktail_party") return analytic_cocktail(g);
  if (g.family == "hypercube") return analytic_hypercube(g);
  fail(Err::UnsupportedFamily,
       "analytic spectrum available for cycle, cocktail_party, hypercube; got family '" + g.family + "'");
}

Spectrum default_spectrum(const Graph& g) {
  if (g.family == "cycle" || g.family == "cocktail_party" || g.family == "hypercube") {
    return analytic_spectrum(g);
  }
  return decompose(g);
}

namespace {

// Groups positions 1..m-1 (cluster 0 pinned first) by |lambda|, sorts by
// descending |lambda| with the policy breaking ties, and records tie groups.
Ordering order_by_frequency(const Spectrum& s, TiePolicy tie, const char* policy_name) {
  const int m = s.m();
  std::vector<int> rest;
  for (int c = 1; c < m; ++c) rest.push_back(c);
  auto abs_val = [&](int c) { return std::abs(s.clusters[c].value); };
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    const double aa = abs_val(a), ab = abs_val(b);
    if (std::abs(aa - ab) > 1e-9) return aa > ab;
    const double va = s.clusters[a].value, vb = s.clusters[b].value;
    if (va != vb) return tie == TiePolicy::PositiveFirst ? va > vb : va < vb;
    return a < b;
  });

  Ordering o;
  o.policy = policy_name;
  o.perm = {0};
  for (int c : rest) o.perm.push_back(c);
  for (size_t i = 0; i < rest.size();) {
    size_t j = i;
    while (j + 1 < rest.size() && std::abs(abs_val(rest[j + 1]) - abs_val(rest[i])) <= 1e-9) ++j;
    if (j > i) {
      TieRecord t;
      t.abs_value = abs_val(rest[i]);
      for (size_t p = i; p <= j; ++p) t.positions.push_back(static_cast<int>(p) + 1);
      o.ties.push_back(std::move(t));
    }
    i = j + 1;
  }
  return o;
}

}  // namespace

Ordering frequency_order(const Spectrum& s, TiePolicy tie) {
  return order_by_frequency(
      s, tie, tie == TiePolicy::PositiveFirst ? "frequency:positive_first" : "frequency:negative_first");
}

Ordering custom_order(const Spectrum& s, const std::vector<int>& perm) {
  const int m = s.m();
  if (static_cast<int>(perm.size()) != m)
    fail(Err::BadPermutation, "permutation has " + std::to_string(perm.size()) + " entries, spectrum has " +
                                  std::to_string(m) + " clusters");
  std::vector<char> seen(m, 0);
  for (int c : perm) {
    if (c < 0 || c >= m || seen[c]) fail(Err::BadPermutation, "not a bijection on cluster indices");
    seen[c] = 1;
  }
  if (perm[0] != 0) fail(Err::BadPermutation, "the lambda=1 cluster must come first");

  Ordering o;
  o.perm = perm;
  o.policy = "explicit";
  // Record |lambda| ties present in the spectrum at their explicit positions.
  std::vector<char> used(m, 0);
  for (int c = 1; c < m; ++c) {
    if (used[c]) continue;
    std::vector<int> group = {c};
    for (int c2 = c + 1; c2 < m; ++c2) {
      if (!used[c2] && std::abs(std::abs(s.clusters[c].value) - std::abs(s.clusters[c2].value)) <= 1e-9)
        group.push_back(c2);
    }
    if (group.size() >= 2) {
      TieRecord t;
      t.abs_value = std::abs(s.clusters[c].value);
      for (int g : group) {
        used[g] = 1;
        for (int p = 0; p < m; ++p)
          if (perm[p] == g) t.positions.push_back(p);
      }
      std::sort(t.positions.begin(), t.positions.end());
      o.ties.push_back(std::move(t));
    }
  }
  return o;
}

Partition make_partition(const Spectrum& s, const Ordering& o, int k) {
  const int m = s.m();
  if (k < 1 || k >= m)
    fail(Err::KOutOfRange,
         "k=" + std::to_string(k) + " outside [1, m-1] with m=" + std::to_string(m) + " eigenspaces");

  Partition p;
  p.n = s.n;
  p.k = k;
  p.ordered_clusters = o.perm;
  p.ordering_id = o.id();
  p.s_k = 0;
  for (int pos = 0; pos < k; ++pos) p.s_k += s.clusters[o.perm[pos]].mult;

  p.uk = Mat<double>(0, s.n);
  p.uk_exact = Mat<Rat>(0, s.n);
  p.uk_exact_ok = true;
  for (int pos = 1; pos < k; ++pos) {
    const Cluster& c = s.clusters[o.perm[pos]];
    p.uk.append_rows(c.basis);
    for (int r = 0; r < c.mult; ++r) p.uk_row_cluster.push_back(o.perm[pos]);
    if (c.exact && p.uk_exact_ok)
      p.uk_exact.append_rows(c.basis_exact);
    else
      p.uk_exact_ok = false;
  }
  if (!p.uk_exact_ok) p.uk_exact = Mat<Rat>(0, s.n);
  // When U_k is exact, use the exact rows (converted) on the floating side
  // too, so both views describe the same basis.
  if (p.uk_exact_ok && p.uk.rows > 0) p.uk = to_double_mat(p.uk_exact);

  Mat<Rat> ones(1, s.n);
  for (int j = 0; j < s.n; ++j) ones(0, j) = 1;
  p.ukbar_exact = ones;
  p.ukbar = to_double_mat(ones);
  p.ukbar_exact_ok = true;
  for (int pos = k; pos < m; ++pos) {
    const Cluster& c = s.clusters[o.perm[pos]];
    p.ukbar.append_rows(c.basis);
    if (c.exact && p.ukbar_exact_ok)
      p.ukbar_exact.append_rows(c.basis_exact);
    else
      p.ukbar_exact_ok = false;
  }
  if (!p.ukbar_exact_ok)
    p.ukbar_exact = Mat<Rat>(0, s.n);
  else
    p.ukbar = to_double_mat(p.ukbar_exact);
  return p;
}

int size_bound_sk(const Spectrum& s, const Ordering& o, int k) {
  int sk = 0;
  if (k < 1 || k >= s.m()) fail(Err::KOutOfRange, "k outside [1, m-1]");
  for (int pos = 0; pos < k; ++pos) sk += s.clusters[o.perm[pos]].mult;
  return sk;
}

}  // namespace gd
