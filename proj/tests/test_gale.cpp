// test_gale.cpp -- designs from faces, facet enumeration to design lists,
// verification, brute-force circuits, complements, adjacency, stable sets.

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "galedesign/gale.hpp"
#include "galedesign/graphs.hpp"
#include "galedesign/spectral.hpp"

using namespace gd;

namespace {

std::set<std::vector<int>> supports_of(const std::vector<Design>& designs) {
  std::set<std::vector<int>> out;
  for (const Design& d : designs) out.insert(d.support);
  return out;
}

Err code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a typed error");
}

}  // namespace

TEST_CASE("petersen extremal designs: ten combinatorial of size 4, twelve of size 5") {
  const Graph g = named_graph("petersen");
  const Spectrum s = decompose(g);
  const Ordering o = frequency_order(s);
  const DesignEnumeration en = enumerate_minimal_designs(s, o, 2);
  REQUIRE(en.designs.size() == 22);

  int size4 = 0;
  int size5 = 0;
  int combinatorial = 0;
  for (size_t i = 0; i < en.designs.size(); ++i) {
    const Design& d = en.designs[i];
    CHECK(d.exact);
    CHECK(d.from_facet == static_cast<int>(i));
    CHECK(d.k == 2);
    CHECK(d.ordering_id == o.id());
    if (d.support.size() == 4) ++size4;
    if (d.support.size() == 5) ++size5;
    if (d.kind == DesignKind::Combinatorial) ++combinatorial;

    // Bijection: the support is exactly the complement of the facet labels.
    std::vector<int> expect;
    for (int v = 0; v < g.n; ++v)
      if (!std::binary_search(en.facets[i].incident.begin(), en.facets[i].incident.end(), v))
        expect.push_back(v);
    CHECK(d.support == expect);

    const VerifyReport rep = verify_design(d, s, o);
    CHECK(rep.pass);
    CHECK(rep.exact);
    CHECK(rep.message.empty());
  }
  CHECK(size4 == 10);
  CHECK(size5 == 12);
  CHECK(combinatorial == 10);

  // The size bound s_2 = 5 holds with equality on the larger designs.
  CHECK(size_bound(s, o, 2) == 5);

  // Independent route: positive circuits of U_2 give exactly these supports.
  const Partition p = make_partition(s, o, 2);
  const std::vector<std::vector<int>> circuits = brute_force_positive_circuits(p.uk_exact);
  CHECK(std::set<std::vector<int>>(circuits.begin(), circuits.end()) == supports_of(en.designs));
}

TEST_CASE("design_from_face inverts the facet complements") {
  const Graph g = named_graph("petersen");
  const Spectrum s = decompose(g);
  const Ordering o = frequency_order(s);
  const DesignEnumeration en = enumerate_minimal_designs(s, o, 2);
  const Design expect = en.designs[0];
  const Design got = design_from_face(en.facets[0].incident, en.partition);
  CHECK(got.support == expect.support);
  REQUIRE(got.exact);
  for (size_t i = 0; i < got.weights_exact.size(); ++i)
    CHECK(got.weights_exact[i] == expect.weights_exact[i]);
}

TEST_CASE("truncated tetrahedron: the three size-4 designs of the triangle") {
  const Graph g = named_graph("truncated_tetrahedron");
  const Spectrum s = decompose(g);
  const Ordering o = frequency_order(s);
  const std::vector<Design> designs = minimal_positive_designs(s, o, 4);
  REQUIRE(designs.size() == 3);
  std::set<std::vector<int>> expect = {{0, 5, 6, 10}, {1, 4, 7, 9}, {2, 3, 8, 11}};
  CHECK(supports_of(designs) == expect);
  for (const Design& d : designs) {
    CHECK(d.kind == DesignKind::Combinatorial);
    CHECK(verify_design(d, s, o).pass);
  }

  // A face given by the union of two coincidence classes yields the design
  // supported on the third class.
  const Partition p = make_partition(s, o, 4);
  std::vector<int> face = {2, 3, 8, 11, 0, 5, 6, 10};
  std::sort(face.begin(), face.end());
  const Design d = design_from_face(face, p);
  CHECK(d.support == std::vector<int>{1, 4, 7, 9});
  CHECK(d.kind == DesignKind::Combinatorial);
  REQUIRE(d.exact);
  for (const Rat& w : d.weights_exact) CHECK(w == Rat(1, 4));

  // A single class is a vertex of the triangle: a proper face whose design
  // spans the other two classes.
  const Design vertex_design = design_from_face({0, 5, 6, 10}, p);
  CHECK(vertex_design.support.size() == 8);
  CHECK(verify_design(vertex_design, s, o).pass);

  // Partial classes are not faces, and the improper face carries no design.
  CHECK(code_of([&] { design_from_face({0, 1}, p); }) == Err::NotAFace);
  std::vector<int> all(12);
  for (int i = 0; i < 12; ++i) all[i] = i;
  CHECK(code_of([&] { design_from_face(all, p); }) == Err::NotAFace);
}

TEST_CASE("octahedron designs under both orderings") {
  const Graph g = named_graph("octahedron");
  const Spectrum s = default_spectrum(g);

  // Frequency (lambda=0 last): the 2^3 combinatorial designs picking one
  // vertex from each antipodal pair.
  const Ordering freq = frequency_order(s);
  const std::vector<Design> eight = minimal_positive_designs(s, freq, 2);
  REQUIRE(eight.size() == 8);
  for (const Design& d : eight) {
    CHECK(d.support.size() == 3);
    CHECK(d.kind == DesignKind::Combinatorial);
    CHECK(verify_design(d, s, freq).pass);
    for (int pair = 0; pair < 3; ++pair) {
      const bool lo = std::binary_search(d.support.begin(), d.support.end(), 2 * pair);
      const bool hi = std::binary_search(d.support.begin(), d.support.end(), 2 * pair + 1);
      CHECK(lo != hi);
    }
  }

  // lambda=-1/2 last: three antipodal-pair designs.
  const Ordering swapped = custom_order(s, {0, 1, 2});
  const std::vector<Design> three = minimal_positive_designs(s, swapped, 2);
  REQUIRE(three.size() == 3);
  CHECK(supports_of(three) == std::set<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
  for (const Design& d : three) CHECK(d.kind == DesignKind::Combinatorial);
}

TEST_CASE("combinatorial complements are again designs") {
  const Graph g = named_graph("octahedron");
  const Spectrum s = default_spectrum(g);
  const Ordering freq = frequency_order(s);
  const std::vector<Design> designs = minimal_positive_designs(s, freq, 2);
  const std::set<std::vector<int>> all = supports_of(designs);
  for (const Design& d : designs) {
    const Design c = complement(d);
    CHECK(c.support.size() == 3);
    CHECK(all.count(c.support) == 1);
    CHECK(verify_design(c, s, freq).pass);
  }

  // Non-combinatorial designs have no complement; full supports leave nothing.
  Design weighted;
  weighted.n = 6;
  weighted.k = 2;
  weighted.support = {0, 2};
  weighted.weights = {2.0, -1.0};
  weighted.kind = DesignKind::Weighted;
  CHECK(code_of([&] { complement(weighted); }) == Err::NotCombinatorial);

  Design full;
  full.n = 4;
  full.k = 1;
  full.support = {0, 1, 2, 3};
  full.weights = Vec<double>(4, 0.25);
  full.weights_exact = Vec<Rat>(4, Rat(1, 4));
  full.exact = true;
  full.kind = DesignKind::Combinatorial;
  CHECK(code_of([&] { complement(full); }) == Err::BadInput);
}

TEST_CASE("cycle designs: C_8 quarter supports and C_5 size n-2") {
  const Graph c8 = cycle(8);
  const Spectrum s8 = default_spectrum(c8);
  const Ordering o8 = frequency_order(s8);
  const std::vector<Design> d8 = minimal_positive_designs(s8, o8, s8.m() - 1);
  REQUIRE(d8.size() == 4);
  CHECK(supports_of(d8) == std::set<std::vector<int>>{
                               {0, 1, 4, 5}, {1, 2, 5, 6}, {2, 3, 6, 7}, {0, 3, 4, 7}});
  for (const Design& d : d8) CHECK(verify_design(d, s8, o8).pass);

  const Graph c5 = cycle(5);
  const Spectrum s5 = default_spectrum(c5);
  const Ordering o5 = frequency_order(s5);
  const std::vector<Design> d5 = minimal_positive_designs(s5, o5, s5.m() - 1);
  REQUIRE(d5.size() == 5);
  for (const Design& d : d5) {
    CHECK(d.support.size() == 3);
    CHECK(verify_design(d, s5, o5).pass);
  }
}

TEST_CASE("verify_design failure modes") {
  const Graph g = named_graph("octahedron");
  const Spectrum s = default_spectrum(g);
  const Ordering o = frequency_order(s);
  const std::vector<Design> designs = minimal_positive_designs(s, o, 2);
  REQUIRE(!designs.empty());

  SUBCASE("ordering mismatch is reported, not recomputed") {
    const Ordering other = custom_order(s, {0, 1, 2});
    const VerifyReport rep = verify_design(designs[0], s, other);
    CHECK_FALSE(rep.pass);
    CHECK(rep.message.find("ordering mismatch") != std::string::npos);
  }

  SUBCASE("zeroed weight is a support mismatch") {
    Design d = designs[0];
    d.weights[0] = 0.0;
    d.weights_exact[0] = 0;
    const VerifyReport rep = verify_design(d, s, o);
    CHECK_FALSE(rep.pass);
    CHECK(rep.message.find("support mismatch") != std::string::npos);
  }

  SUBCASE("weights summing to zero fail the ones condition without throwing") {
    Design d;
    d.n = 6;
    d.k = 2;
    d.support = {4, 5};
    d.weights = {1.0, -1.0};
    d.weights_exact = {1, -1};
    d.exact = true;
    d.kind = DesignKind::Weighted;
    const VerifyReport rep = verify_design(d, s, o);
    CHECK_FALSE(rep.pass);
    CHECK(rep.ones_sum_exact == Rat(0));
  }

  SUBCASE("kind claims stronger than the weights are rejected") {
    Design d = designs[0];  // combinatorial, size 3
    d.weights_exact = {Rat(1, 2), Rat(1, 4), Rat(1, 4)};
    d.weights = {0.5, 0.25, 0.25};
    const VerifyReport rep = verify_design(d, s, o);
    CHECK_FALSE(rep.kind_ok);  // still claims Combinatorial
    CHECK_FALSE(rep.pass);
  }

  SUBCASE("structural errors throw typed exceptions") {
    Design d = designs[0];
    d.k = 99;
    CHECK(code_of([&] { verify_design(d, s, o); }) == Err::KOutOfRange);
    Design bad = designs[0];
    bad.support = {5, 4, 3};
    CHECK(code_of([&] { verify_design(bad, s, o); }) == Err::BadInput);
    CHECK(code_of([&] { verify_design(designs[0], s, o, 0.0); }) == Err::BadInput);
  }
}

TEST_CASE("icosahedron circuits: twelve weighted designs of size 7") {
  const Graph g = named_graph("icosahedron");
  const Spectrum s = decompose(g);
  const Ordering o = custom_order(s, {0, 2, 1, 3});
  const Partition p = make_partition(s, o, 3);
  const CircuitDesigns cd = weighted_circuit_designs(p, 7);
  CHECK(cd.non_designs.empty());
  REQUIRE(cd.designs.size() == 12);
  for (const Design& d : cd.designs) {
    CHECK(d.support.size() == 7);
    CHECK(d.kind == DesignKind::Weighted);
    CHECK(d.k == 3);
    CHECK(d.ordering_id == o.id());
    CHECK(verify_design(d, s, o).pass);
  }
}

TEST_CASE("cocktail party circuits split into designs and zero-sum circuits") {
  const Graph g = cocktail_party(4);
  const Spectrum s = default_spectrum(g);
  const Ordering o = frequency_order(s);
  const Partition p = make_partition(s, o, 2);
  const CircuitDesigns cd = weighted_circuit_designs(p, 8);
  REQUIRE(cd.designs.size() == 16);
  for (const Design& d : cd.designs) {
    CHECK(d.support.size() == 4);
    CHECK(d.kind == DesignKind::Combinatorial);
  }
  REQUIRE(cd.non_designs.size() == 4);
  for (const NonDesignCircuit& c : cd.non_designs) {
    CHECK(c.support.size() == 2);
    CHECK(c.weights[0] > 0.0);
  }
}

TEST_CASE("circuit scans respect their budgets") {
  Mat<Rat> wide(1, 21);
  for (int j = 0; j < 21; ++j) wide(0, j) = 1;
  CHECK(code_of([&] { brute_force_positive_circuits(wide); }) == Err::BudgetExceeded);
  Mat<Rat> empty(0, 0);
  CHECK(code_of([&] { brute_force_positive_circuits(empty); }) == Err::BadInput);
  Mat<Rat> ok(1, 3);
  for (int j = 0; j < 3; ++j) ok(0, j) = 1;
  CHECK(code_of([&] { brute_force_positive_circuits(ok, 0); }) == Err::BadInput);
}

TEST_CASE("design adjacency: triangle, segment, and petersen union designs") {
  // Triangle: every pair of the three facets meets in a vertex.
  const Graph tt = named_graph("truncated_tetrahedron");
  const Spectrum ts = decompose(tt);
  const Ordering to = frequency_order(ts);
  const DesignEnumeration ten = enumerate_minimal_designs(ts, to, 4);
  const DesignAdjacency ta = design_adjacency(ten.designs, ten.facets, ten.config);
  CHECK(ta.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  for (const Design& u : ta.union_designs) {
    CHECK(u.support.size() == 8);
    CHECK(verify_design(u, ts, to).pass);
  }

  // Segment: C_4 with the lambda=-1 cluster unaveraged has two facet designs
  // joined by the empty ridge.
  const Graph c4 = cycle(4);
  const Spectrum s4 = default_spectrum(c4);
  const Ordering o4 = custom_order(s4, {0, 2, 1});
  const DesignEnumeration en4 = enumerate_minimal_designs(s4, o4, 2);
  REQUIRE(en4.designs.size() == 2);
  const DesignAdjacency a4 = design_adjacency(en4.designs, en4.facets, en4.config);
  CHECK(a4.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(a4.union_designs[0].support.size() == 4);

  // Petersen: every union design averages two adjacent facets' designs and
  // remains a positive design.
  const Graph pg = named_graph("petersen");
  const Spectrum ps = decompose(pg);
  const Ordering po = frequency_order(ps);
  const DesignEnumeration pen = enumerate_minimal_designs(ps, po, 2);
  const DesignAdjacency pa = design_adjacency(pen.designs, pen.facets, pen.config);
  CHECK(!pa.edges.empty());
  for (size_t e = 0; e < pa.edges.size(); ++e) {
    const auto& [i, j] = pa.edges[e];
    CHECK(i < j);
    const VerifyReport rep = verify_design(pa.union_designs[e], ps, po);
    CHECK(rep.pass);
    CHECK(pa.union_designs[e].support.size() >= 5);
  }
}

TEST_CASE("stable sets attaining the ratio bound give extremal designs") {
  const Graph g = named_graph("petersen");
  const StableSetReport rep = check_stable_set_design(g, {1, 3, 5, 9});
  CHECK(rep.k == 2);
  CHECK(rep.hoffman_ratio == doctest::Approx(0.4));
  CHECK(rep.fraction == doctest::Approx(0.4));
  CHECK(rep.ratio_attained);
  CHECK(rep.report.pass);
  CHECK(rep.design.kind == DesignKind::Combinatorial);

  // A single vertex is stable but not a design for this strength.
  const StableSetReport one = check_stable_set_design(g, {0});
  CHECK_FALSE(one.ratio_attained);
  CHECK_FALSE(one.report.pass);

  CHECK(code_of([&] { check_stable_set_design(g, {0, 1}); }) == Err::NotStable);
}
