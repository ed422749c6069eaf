// test_graphs.cpp -- construction, validation, and the named graphs.

#include <doctest.h>

#include <algorithm>

#include "galedesign/graphs.hpp"

using namespace gd;

TEST_CASE("edge list validation names the failure") {
  CHECK_THROWS_AS(from_edge_list(0, {}), Error);
  CHECK(from_edge_list(2, {{0, 1}}).degree == 1);

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Err::BadInput;
  };
  CHECK(code_of([] { from_edge_list(3, {{0, 0}, {0, 1}, {1, 2}}); }) == Err::LoopEdge);
  CHECK(code_of([] { from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}}); }) == Err::DuplicateEdge);
  CHECK(code_of([] { from_edge_list(4, {{0, 1}, {2, 3}}); }) == Err::Disconnected);
  CHECK(code_of([] { from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }) ==
        Err::NotRegular);
}

TEST_CASE("cycle, cocktail party, hypercube invariants") {
  const Graph c8 = cycle(8);
  CHECK(c8.n == 8);
  CHECK(c8.degree == 2);
  CHECK(c8.edges.size() == 8);
  CHECK(c8.family == "cycle");

  const Graph k222 = cocktail_party(3);
  CHECK(k222.n == 6);
  CHECK(k222.degree == 4);
  CHECK_FALSE(k222.adjacent(0, 1));  // antipodal pair carries labels 2i, 2i+1
  CHECK(k222.adjacent(0, 3));

  const Graph q4 = hypercube(4);
  CHECK(q4.n == 16);
  CHECK(q4.degree == 4);
  CHECK(q4.adjacent(0, 8));
  CHECK_FALSE(q4.adjacent(0, 3));
  CHECK_THROWS_AS(cycle(2), Error);
  CHECK_THROWS_AS(cocktail_party(1), Error);
}

TEST_CASE("cayley_cyclic validates the connection set") {
  const Graph g = cayley_cyclic(8, {1, 7, 4});
  CHECK(g.n == 8);
  CHECK(g.degree == 3);
  CHECK_THROWS_AS(cayley_cyclic(8, {1}), Error);        // 1 without -1
  CHECK_THROWS_AS(cayley_cyclic(8, {2, 6}), Error);     // generates index-2 subgroup
  CHECK_THROWS_AS(cayley_cyclic(8, {0, 1, 7}), Error);  // loop generator
}

TEST_CASE("cocktail party matches the circulant construction") {
  // K_{2d} minus a perfect matching is the circulant on Z_{2d} whose
  // connection set omits exactly the element d.
  const int d = 4;
  std::vector<int> gens;
  for (int x = 1; x < 2 * d; ++x) {
    if (x != d) gens.push_back(x);
  }
  const Graph a = cayley_cyclic(2 * d, gens);
  const Graph b = cocktail_party(d);
  CHECK(a.n == b.n);
  CHECK(a.degree == b.degree);
  // Not label-identical (the matching differs), but degree sequence plus
  // vertex count pins the graph here; spectra are compared in spectral tests.
}

TEST_CASE("named graphs have the advertised shapes") {
  for (const std::string& name : named_graph_names()) {
    const Graph g = named_graph(name);
    CHECK(g.n > 0);
    CHECK(g.degree > 0);
  }
  CHECK(named_graph("petersen").n == 10);
  CHECK(named_graph("petersen").degree == 3);
  CHECK(named_graph("octahedron").n == 6);
  CHECK(named_graph("octahedron").degree == 4);
  CHECK(named_graph("icosahedron").n == 12);
  CHECK(named_graph("icosahedron").degree == 5);
  CHECK(named_graph("truncated_tetrahedron").n == 12);
  CHECK(named_graph("truncated_tetrahedron").degree == 3);
  CHECK(named_graph("truncated_cuboctahedron").n == 48);
  CHECK(named_graph("truncated_cuboctahedron").degree == 3);
  CHECK_THROWS_AS(named_graph("durer"), Error);
}

TEST_CASE("petersen is the Kneser graph on 2-subsets of a 5-set") {
  const Graph g = named_graph("petersen");
  int triangles = 0;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++triangles;
  CHECK(triangles == 0);  // girth 5
  // Any two nonadjacent vertices share exactly one neighbor.
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      if (g.adjacent(a, b)) continue;
      int common = 0;
      for (int c = 0; c < g.n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) ++common;
      CHECK(common == 1);
    }
  }
}

TEST_CASE("normalized adjacency rows sum to one") {
  const Graph g = named_graph("icosahedron");
  const Mat<Rat> m = g.normalized_adjacency();
  for (int i = 0; i < m.rows; ++i) {
    Rat s = 0;
    for (int j = 0; j < m.cols; ++j) s += m(i, j);
    CHECK(s == Rat(1));
  }
}
