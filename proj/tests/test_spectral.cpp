// test_spectral.cpp -- eigenvalue clustering, exact upgrades, orderings,
// and the eigenspace partitions.

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "galedesign/graphs.hpp"
#include "galedesign/spectral.hpp"

using namespace gd;

namespace {

std::vector<double> values(const Spectrum& s) {
  std::vector<double> v;
  for (const Cluster& c : s.clusters) v.push_back(c.value);
  return v;
}

std::vector<int> mults(const Spectrum& s) {
  std::vector<int> v;
  for (const Cluster& c : s.clusters) v.push_back(c.mult);
  return v;
}

}  // namespace

TEST_CASE("petersen spectrum is fully exact with the known clusters") {
  const Spectrum s = decompose(named_graph("petersen"));
  REQUIRE(s.m() == 3);
  CHECK(s.fully_exact);
  CHECK(s.clusters[0].value_exact == Rat(1));
  CHECK(s.clusters[0].mult == 1);
  CHECK(s.clusters[1].value_exact == Rat(1, 3));
  CHECK(s.clusters[1].mult == 5);
  CHECK(s.clusters[2].value_exact == Rat(-2, 3));
  CHECK(s.clusters[2].mult == 4);
  // Exact bases really are eigenbases: M phi = lambda phi columnwise.
  const Mat<Rat> M = named_graph("petersen").normalized_adjacency();
  for (const Cluster& c : s.clusters) {
    for (int r = 0; r < c.basis_exact.rows; ++r) {
      const Vec<Rat> phi = c.basis_exact.row(r);
      const Vec<Rat> img = mat_vec(M, phi);
      for (int j = 0; j < c.basis_exact.cols; ++j) CHECK(img[j] == c.value_exact * phi[j]);
    }
  }
}

TEST_CASE("octahedron spectrum and frequency order") {
  const Graph g = named_graph("octahedron");
  const Spectrum s = default_spectrum(g);
  REQUIRE(s.m() == 3);
  CHECK(values(s) == std::vector<double>{1.0, 0.0, -0.5});
  CHECK(mults(s) == std::vector<int>{1, 3, 2});
  const Ordering o = frequency_order(s);
  CHECK(o.perm == std::vector<int>{0, 2, 1});  // |1| > |-1/2| > |0|
  CHECK(o.id() == "frequency:positive_first:0,2,1");
  CHECK(o.ties.empty());
}

TEST_CASE("cycle analytic spectra match the closed form and the decomposition") {
  const Spectrum s4 = analytic_spectrum(cycle(4));
  CHECK(values(s4) == std::vector<double>{1.0, 0.0, -1.0});
  CHECK(mults(s4) == std::vector<int>{1, 2, 1});
  CHECK(s4.fully_exact);
  CHECK(s4.source == "analytic");

  for (int n : {5, 6, 8, 12}) {
    const Spectrum a = analytic_spectrum(cycle(n));
    const Spectrum d = decompose(cycle(n));
    REQUIRE(a.m() == d.m());
    for (int i = 0; i < a.m(); ++i) {
      CHECK(a.clusters[i].value == doctest::Approx(d.clusters[i].value).epsilon(1e-12));
      CHECK(a.clusters[i].mult == d.clusters[i].mult);
      // Same row span: stacking the two bases must not raise the rank.
      Mat<double> stack = a.clusters[i].basis;
      stack.append_rows(d.clusters[i].basis);
      CHECK(rank_of(stack, 1e-8) == a.clusters[i].mult);
    }
  }
}

TEST_CASE("hypercube analytic spectrum lists slice eigenvalues") {
  const Spectrum s = analytic_spectrum(hypercube(4));
  REQUIRE(s.m() == 5);
  CHECK(s.fully_exact);
  CHECK(mults(s) == std::vector<int>{1, 4, 6, 4, 1});
  for (int i = 0; i < 5; ++i) CHECK(s.clusters[i].value_exact == Rat(4 - 2 * i, 4));
  CHECK_THROWS_AS(analytic_spectrum(hypercube(11)), Error);
}

TEST_CASE("cocktail party analytic spectrum agrees with the decomposition") {
  for (int d : {2, 3, 4}) {
    const Spectrum a = analytic_spectrum(cocktail_party(d));
    const Spectrum n = decompose(cocktail_party(d));
    REQUIRE(a.m() == 3);
    CHECK(a.clusters[1].value_exact == Rat(0));
    CHECK(a.clusters[1].mult == d);
    CHECK(a.clusters[2].value_exact == Rat(-1, d - 1));
    CHECK(a.clusters[2].mult == d - 1);
    for (int i = 0; i < 3; ++i) {
      CHECK(a.clusters[i].mult == n.clusters[i].mult);
      Mat<Rat> stack = a.clusters[i].basis_exact;
      stack.append_rows(n.clusters[i].basis_exact);
      CHECK(rank_of(stack, 0.0) == a.clusters[i].mult);
    }
  }
}

TEST_CASE("default_spectrum picks the analytic path for the closed-form families") {
  CHECK(default_spectrum(cycle(6)).source == "analytic");
  CHECK(default_spectrum(hypercube(3)).source == "analytic");
  CHECK(default_spectrum(cocktail_party(3)).source == "analytic");
  CHECK(default_spectrum(named_graph("petersen")).source == "decompose");
}

TEST_CASE("icosahedron frequency order records the magnitude tie") {
  const Spectrum s = decompose(named_graph("icosahedron"));
  REQUIRE(s.m() == 4);
  // Descending: 1, 1/sqrt5 (3), -1/5 (5), -1/sqrt5 (3).
  CHECK(s.clusters[1].value == doctest::Approx(1.0 / std::sqrt(5.0)));
  CHECK(s.clusters[2].value == doctest::Approx(-0.2));
  CHECK(s.clusters[3].value == doctest::Approx(-1.0 / std::sqrt(5.0)));
  CHECK(s.clusters[2].exact);  // -1/5 is rational
  CHECK_FALSE(s.clusters[1].exact);

  const Ordering pos = frequency_order(s, TiePolicy::PositiveFirst);
  CHECK(pos.perm == std::vector<int>{0, 1, 3, 2});
  REQUIRE(pos.ties.size() == 1);
  CHECK(pos.ties[0].positions == std::vector<int>{1, 2});  // perm slots of the tied pair

  const Ordering neg = frequency_order(s, TiePolicy::NegativeFirst);
  CHECK(neg.perm == std::vector<int>{0, 3, 1, 2});
}

TEST_CASE("custom_order validates the permutation") {
  const Spectrum s = decompose(named_graph("petersen"));
  CHECK(custom_order(s, {0, 2, 1}).id() == "explicit:0,2,1");
  CHECK_THROWS_AS(custom_order(s, {1, 0, 2}), Error);  // constant cluster must stay first
  CHECK_THROWS_AS(custom_order(s, {0, 1}), Error);
  CHECK_THROWS_AS(custom_order(s, {0, 1, 1}), Error);
}

TEST_CASE("coarse clustering tolerance is rejected as ambiguous") {
  CHECK_THROWS_AS(decompose(named_graph("icosahedron"), 0.2), Error);
}

TEST_CASE("partitions expose U_k and U_kbar with exact paths when available") {
  const Spectrum s = decompose(named_graph("petersen"));
  const Ordering o = frequency_order(s);
  const Partition p = make_partition(s, o, 2);
  CHECK(p.k == 2);
  CHECK(p.s_k == 5);            // 1 + 4
  CHECK(p.uk.rows == 4);        // s_k - 1
  CHECK(p.ukbar.rows == 6);     // n - s_k + 1
  CHECK(p.uk_exact_ok);
  CHECK(p.ukbar_exact_ok);
  for (int j = 0; j < p.ukbar_exact.cols; ++j) CHECK(p.ukbar_exact(0, j) == Rat(1));
  CHECK(size_bound_sk(s, o, 2) == 5);
  CHECK(size_bound_sk(s, o, 1) == 1);
  CHECK_THROWS_AS(make_partition(s, o, 0), Error);
  CHECK_THROWS_AS(make_partition(s, o, 3), Error);  // k = m is out of range
}

TEST_CASE("exact upgrade survives an adversarial near-rational spectrum") {
  // 3-cube spectral values are all rational; decompose must certify each
  // eigenspace dimension exactly rather than trusting the float multiplicity.
  const Spectrum s = decompose(hypercube(3));
  CHECK(s.fully_exact);
  REQUIRE(s.m() == 4);
  CHECK(s.clusters[1].value_exact == Rat(1, 3));
  CHECK(s.clusters[1].basis_exact.rows == 3);
}
