// test_polytope.cpp -- vector configurations, facet enumeration (exact and
// floating, cross-validated against the hyperplane brute force), f-vectors,
// and the face membership test.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "galedesign/gale.hpp"
#include "galedesign/graphs.hpp"
#include "galedesign/polytope.hpp"
#include "galedesign/spectral.hpp"

using namespace gd;

namespace {

VectorConfiguration config_for(const Spectrum& s, const Ordering& o, int k) {
  return configuration_from_partition(make_partition(s, o, k));
}

std::set<std::vector<int>> incident_sets(const std::vector<Facet>& facets) {
  std::set<std::vector<int>> out;
  for (const Facet& f : facets) out.insert(f.incident);
  return out;
}

}  // namespace

TEST_CASE("petersen extremal eigenpolytope: facets and f-vector") {
  const Graph g = named_graph("petersen");
  const Spectrum s = decompose(g);
  const Ordering o = frequency_order(s);
  const VectorConfiguration c = config_for(s, o, 2);
  CHECK(c.exact);
  CHECK(c.dim == 6);  // polytope dimension 5
  CHECK(c.n_classes() == 10);

  const std::vector<Facet> facets = enumerate_facets(c);
  REQUIRE(facets.size() == 22);
  int six = 0;
  int five = 0;
  for (const Facet& f : facets) {
    CHECK(f.exact);
    CHECK(f.certificate == "exact");
    if (f.incident.size() == 6) ++six;
    if (f.incident.size() == 5) ++five;
  }
  CHECK(six == 10);
  CHECK(five == 12);

  CHECK(f_vector(c, facets) == std::vector<long long>{10, 45, 90, 75, 22});

  // Canonical order: ascending lexicographic on incident label sets.
  for (size_t i = 1; i < facets.size(); ++i) CHECK(facets[i - 1].incident < facets[i].incident);

  // Independent oracle agreement.
  CHECK(incident_sets(brute_force_facets(c)) == incident_sets(facets));

  // The ten 6-label facets hold the most columns.
  const std::vector<Facet> biggest = max_vertex_facets(c, facets);
  CHECK(biggest.size() == 10);
  for (const Facet& f : biggest) CHECK(f.incident.size() == 6);
}

TEST_CASE("octahedron eigenpolytopes: crosspolytope and triangle") {
  const Graph g = named_graph("octahedron");
  const Spectrum s = default_spectrum(g);

  // Frequency order puts lambda=0 last; the polytope is the octahedron itself.
  const Ordering freq = frequency_order(s);
  const VectorConfiguration oct = config_for(s, freq, 2);
  CHECK(oct.dim == 4);
  CHECK(oct.n_classes() == 6);
  const std::vector<Facet> oct_facets = enumerate_facets(oct);
  CHECK(oct_facets.size() == 8);
  CHECK(f_vector(oct, oct_facets) == std::vector<long long>{6, 12, 8});
  CHECK(incident_sets(brute_force_facets(oct)) == incident_sets(oct_facets));

  // lambda = -1/2 last: the polytope collapses to a triangle of antipodal
  // pair classes.
  const Ordering swapped = custom_order(s, {0, 1, 2});
  const VectorConfiguration tri = config_for(s, swapped, 2);
  CHECK(tri.dim == 3);
  CHECK(tri.n_classes() == 3);
  for (const auto& cls : tri.classes) CHECK(cls.size() == 2);
  const std::vector<Facet> tri_facets = enumerate_facets(tri);
  CHECK(tri_facets.size() == 3);
  CHECK(f_vector(tri, tri_facets) == std::vector<long long>{3, 3});
}

TEST_CASE("truncated tetrahedron extremal polytope is a labeled triangle") {
  const Graph g = named_graph("truncated_tetrahedron");
  const Spectrum s = decompose(g);
  const Ordering o = frequency_order(s);
  REQUIRE(s.m() == 5);
  const VectorConfiguration c = config_for(s, o, 4);
  CHECK(c.dim == 3);
  REQUIRE(c.n_classes() == 3);
  CHECK(c.classes[0] == std::vector<int>{0, 5, 6, 10});
  CHECK(c.classes[1] == std::vector<int>{1, 4, 7, 9});
  CHECK(c.classes[2] == std::vector<int>{2, 3, 8, 11});
  CHECK(enumerate_facets(c).size() == 3);
}

TEST_CASE("icosahedron floating path agrees with the hyperplane brute force") {
  const Graph g = named_graph("icosahedron");
  const Spectrum s = decompose(g);
  const Ordering o = custom_order(s, {0, 2, 1, 3});
  const VectorConfiguration c3 = config_for(s, o, 3);
  CHECK_FALSE(c3.exact);
  CHECK(c3.dim == 4);
  CHECK(c3.n_classes() == 12);
  const std::vector<Facet> facets = enumerate_facets(c3);
  REQUIRE(facets.size() == 20);
  for (const Facet& f : facets) {
    CHECK(f.certificate == "lp-certified");
    CHECK(f.margin > 0.0);
    CHECK(f.incident.size() == 3);
  }
  CHECK(incident_sets(brute_force_facets(c3)) == incident_sets(facets));
  CHECK(f_vector(c3, facets) == std::vector<long long>{12, 30, 20});
}

TEST_CASE("configuration_from_matrix validates its input") {
  Mat<Rat> no_ones{{1, 2}, {0, 1}};
  CHECK_THROWS_AS(configuration_from_matrix(no_ones), Error);
  Mat<Rat> deficient{{1, 1, 1}, {1, 1, 1}};
  CHECK_THROWS_AS(configuration_from_matrix(deficient), Error);
  Mat<Rat> segment{{1, 1, 1, 1}, {1, 1, -1, -1}};
  const VectorConfiguration c = configuration_from_matrix(segment);
  CHECK(c.n_classes() == 2);
  CHECK(c.classes[0] == std::vector<int>{0, 1});
  CHECK(enumerate_facets(c).size() == 2);  // two endpoint facets
}

TEST_CASE("is_face certifies faces, non-faces, and the improper face") {
  const Graph g = named_graph("petersen");
  const Spectrum s = decompose(g);
  const Ordering o = frequency_order(s);
  const Partition p = make_partition(s, o, 2);
  const VectorConfiguration c = configuration_from_partition(p);
  const std::vector<Facet> facets = enumerate_facets(c);

  // Every facet's label set is a face with a strictly positive witness.
  const FaceCheck yes = is_face(c, p.uk_exact, facets[0].incident);
  REQUIRE(yes.is_face);
  CHECK_FALSE(yes.improper);
  CHECK(yes.exact);
  Rat total = 0;
  for (const Rat& w : yes.witness_exact) {
    CHECK(w > 0);
    total += w;
  }
  CHECK(total == Rat(1));

  // All labels: the improper face carries no design.
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  const FaceCheck imp = is_face(c, p.uk_exact, all);
  CHECK(imp.is_face);
  CHECK(imp.improper);

  // Nine labels would leave a single-vertex design, which cannot average a
  // nowhere-vanishing eigenspace; the separator refutes it.
  std::vector<int> nine(all.begin(), all.begin() + 9);
  const FaceCheck no = is_face(c, p.uk_exact, nine);
  CHECK_FALSE(no.is_face);
  bool some_positive = false;
  REQUIRE(no.separator_exact.size() == p.uk_exact.rows);
  const Vec<Rat> u9 = p.uk_exact.col(9);
  const Rat val = dot(no.separator_exact, u9);
  CHECK(val > 0);
  some_positive = val > 0;
  CHECK(some_positive);

  // The empty face: its complement is everything, and the uniform weights
  // average every eigenspace, so the witness is exactly uniform.
  const FaceCheck empty = is_face(c, p.uk_exact, {});
  REQUIRE(empty.is_face);
  CHECK_FALSE(empty.improper);
  REQUIRE(empty.witness_exact.size() == 10);
  for (const Rat& w : empty.witness_exact) CHECK(w == Rat(1, 10));
}

TEST_CASE("facet label sets are invariant under row recombination") {
  const Graph g = named_graph("petersen");
  const Spectrum s = decompose(g);
  const Ordering o = frequency_order(s);
  const Partition p = make_partition(s, o, 2);
  const std::set<std::vector<int>> reference =
      incident_sets(enumerate_facets(configuration_from_partition(p)));

  std::mt19937 rng(20260822);
  std::uniform_int_distribution<int> coef(-2, 2);
  const int rows = p.ukbar_exact.rows;
  for (int trial = 0; trial < 5; ++trial) {
    // Recombine the non-ones rows by a random invertible integer matrix.
    Mat<Rat> t(rows, rows);
    do {
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) t(i, j) = (i == 0) ? Rat(j == 0 ? 1 : 0) : Rat(coef(rng));
    } while (rank_of(t, 0.0) != rows);
    const Mat<Rat> recombined = mat_mul(t, p.ukbar_exact);
    const VectorConfiguration c = configuration_from_matrix(recombined);
    CHECK(incident_sets(enumerate_facets(c)) == reference);
  }
}

TEST_CASE("thread_count is at least one") { CHECK(thread_count() >= 1); }
