#include "galedesign/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace gd {

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Mat<Rat> Graph::adjacency() const {
  Mat<Rat> a(n, n);
  for (const auto& [u, v] : edges) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

Mat<Rat> Graph::normalized_adjacency() const {
  Mat<Rat> a(n, n);
  const Rat w = Rat(1) / degree;
  for (const auto& [u, v] : edges) {
    a(u, v) = w;
    a(v, u) = w;
  }
  return a;
}

Graph from_edge_list(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) fail(Err::BadInput, "vertex count must be positive, got " + std::to_string(n));
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Err::BadInput, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
    if (u == v) fail(Err::LoopEdge, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      fail(Err::DuplicateEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") appears twice");
  }

  Graph g;
  g.n = n;
  g.edges.assign(seen.begin(), seen.end());
  g.adj.assign(n, {});
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

  // Connectivity (BFS from 0).
  std::vector<char> vis(n, 0);
  std::vector<int> queue = {0};
  vis[0] = 1;
  for (size_t h = 0; h < queue.size(); ++h) {
    for (int w : g.adj[queue[h]]) {
      if (!vis[w]) {
        vis[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!vis[v]) fail(Err::Disconnected, "vertex " + std::to_string(v) + " unreachable from vertex 0");

  g.degree = static_cast<int>(g.adj[0].size());
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(g.adj[v].size()) != g.degree)
      fail(Err::NotRegular, "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.adj[v].size()) + ", expected " + std::to_string(g.degree));
  }
  if (g.degree == 0) fail(Err::Disconnected, "graph has no edges");
  return g;
}

Graph cycle(int n) {
  if (n < 3) fail(Err::BadInput, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  Graph g = from_edge_list(n, std::move(e));
  g.family = "cycle";
  g.params = {n};
  return g;
}

Graph cocktail_party(int d) {
  if (d < 2) fail(Err::BadInput, "cocktail_party needs d >= 2, got " + std::to_string(d));
  // Vertices 2i and 2i+1 are the antipodal pair +-e_i; each vertex is adjacent
  // to everything except its partner.
  std::vector<std::pair<int, int>> e;
  const int n = 2 * d;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u / 2 == v / 2)) e.push_back({u, v});
  Graph g = from_edge_list(n, std::move(e));
  g.family = "cocktail_party";
  g.params = {d};
  return g;
}

Graph hypercube(int d) {
  if (d < 1) fail(Err::BadInput, "hypercube needs d >= 1, got " + std::to_string(d));
  if (d > 20) fail(Err::BadInput, "hypercube dimension too large: " + std::to_string(d));
  // Vertex y is the bitstring with coordinate b stored in bit b of the label,
  // labels sorted as binary integers.
  const int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int y = 0; y < n; ++y)
    for (int b = 0; b < d; ++b)
      if (!(y >> b & 1)) e.push_back({y, y | (1 << b)});
  Graph g = from_edge_list(n, std::move(e));
  g.family = "hypercube";
  g.params = {d};
  return g;
}

Graph cayley_cyclic(int n, std::vector<int> gens) {
  if (n < 2) fail(Err::BadInput, "cayley_cyclic needs n >= 2");
  std::set<int> s;
  for (int raw : gens) {
    int x = ((raw % n) + n) % n;
    if (x == 0) fail(Err::BadInput, "generator 0 (mod n) would create a loop");
    s.insert(x);
  }
  if (s.empty()) fail(Err::BadInput, "empty generator set");
  for (int x : s)
    if (!s.count(n - x))
      fail(Err::NotSymmetricSet, "generator " + std::to_string(x) + " present without its negation " +
                                     std::to_string(n - x));
  int g_all = n;
  for (int x : s) g_all = std::gcd(g_all, x);
  if (g_all != 1)
    fail(Err::NotGenerating, "connection set generates only the subgroup of index " + std::to_string(g_all));
  std::set<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) {
    for (int x : s) {
      int w = (v + x) % n;
      e.insert({std::min(v, w), std::max(v, w)});
    }
  }
  Graph g = from_edge_list(n, std::vector<std::pair<int, int>>(e.begin(), e.end()));
  g.family = "cayley_cyclic";
  g.params = {n};
  for (int x : s) g.params.push_back(x);
  return g;
}

}  // namespace gd
