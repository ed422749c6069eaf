// graphs.hpp -- construction and validation of connected regular graphs.
//
// Everything downstream assumes a simple, connected, delta-regular graph, so
// every constructor routes through the same validator. Vertices are 0-indexed
// internally; file and CLI layers translate to 1-indexed on request.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galedesign/matrix.hpp"

namespace gd {

struct Graph {
  int n = 0;
  int degree = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted lexicographically
  std::vector<std::vector<int>> adj;       // sorted neighbor lists
  std::string family = "custom";           // generator tag ("cycle", "hypercube", ...)
  std::vector<long long> params;           // generator parameters, e.g. {n} or {d}

  bool adjacent(int u, int v) const;
  Mat<Rat> adjacency() const;             // 0/1 entries
  Mat<Rat> normalized_adjacency() const;  // entries 1/degree on edges
};

// Validates and canonicalizes an edge list (errors name the offender):
// LoopEdge, DuplicateEdge, Disconnected, NotRegular, BadInput (range).
Graph from_edge_list(int n, std::vector<std::pair<int, int>> edges);

Graph cycle(int n);
Graph cocktail_party(int d);
Graph hypercube(int d);
// Circulant Cayley graph of Z_n with connection set S (symmetric, generating).
Graph cayley_cyclic(int n, std::vector<int> gens);

// Named graphs with the fixed vertex labelings used throughout: petersen,
// octahedron, icosahedron, truncated_tetrahedron, truncated_cuboctahedron.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

}  // namespace gd
