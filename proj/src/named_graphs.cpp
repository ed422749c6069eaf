// named_graphs.cpp -- embedded adjacency data for the named example graphs.
//
// Labelings are part of the contract: downstream tests and documented outputs
// (coincidence classes, design supports) refer to these exact vertex numbers.
// Edge lists are stored 1-indexed to match the documented labelings and
// shifted on load.
#include <algorithm>

#include "galedesign/graphs.hpp"

namespace gd {

namespace {

Graph from_one_indexed(const char* family, int n, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    --u;
    --v;
  }
  Graph g = from_edge_list(n, std::move(edges));
  g.family = family;
  return g;
}

// Petersen graph: outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on
// 6..10 stepping by two (6-8-10-7-9-6).
const std::vector<std::pair<int, int>> kPetersen = {
    {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},   // outer cycle
    {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},  // spokes
    {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},  // pentagram
};

// Truncated tetrahedron: four triangles {1,2,3}, {4,5,6}, {7,8,9}, {10,11,12}
// joined by a perfect matching. Labels are chosen so that {2,5,8,10} and its
// two companion classes are the columns' coincidence classes in the k=4
// eigenpolytope quotient.
const std::vector<std::pair<int, int>> kTruncatedTetrahedron = {
    {1, 2}, {1, 3}, {2, 3},     // triangle A
    {4, 5}, {4, 6}, {5, 6},     // triangle B
    {7, 8}, {7, 9}, {8, 9},     // triangle C
    {10, 11}, {10, 12}, {11, 12},  // triangle D
    {1, 11}, {2, 8}, {3, 4}, {5, 10}, {6, 7}, {9, 12},  // matching
};

// Icosahedron with antipodal pairs {1,2}, {3,4}, {5,8}, {6,7}, {9,12},
// {10,11}; each vertex is adjacent to all but its antipode and the antipodes
// of its neighbors.
const std::vector<std::pair<int, int>> kIcosahedron = {
    {1, 3}, {1, 5}, {1, 6}, {1, 9}, {1, 10},
    {2, 4}, {2, 7}, {2, 8}, {2, 11}, {2, 12},
    {3, 7}, {3, 8}, {3, 9}, {3, 10},
    {4, 5}, {4, 6}, {4, 11}, {4, 12},
    {5, 6}, {5, 9}, {5, 11},
    {6, 10}, {6, 12},
    {7, 8}, {7, 9}, {7, 11},
    {8, 10}, {8, 12},
    {9, 11}, {10, 12},
};

// Truncated cuboctahedron: the Cayley graph of the order-48 full octahedral
// reflection group with its three simple reflections (generator products of
// orders 3, 4, 2). Labels are chosen so that vertices congruent mod 6 form
// the coincidence classes of the extremal eigenpolytope: the kernel of the
// adjacency matrix has dimension 4, and stacking the all-ones row on a kernel
// basis gives a column matrix with exactly six distinct columns, constant on
// each residue class {j, j+6, j+12, ...}.
const std::vector<std::pair<int, int>> kTruncatedCuboctahedron = {
    {1, 2},   {1, 3},   {1, 6},   {2, 4},   {2, 5},   {3, 10},  {3, 29},  {4, 9},
    {4, 30},  {5, 6},   {5, 27},  {6, 28},  {7, 8},   {7, 9},   {7, 12},  {8, 10},
    {8, 11},  {9, 35},  {10, 36}, {11, 12}, {11, 33}, {12, 34}, {13, 14}, {13, 15},
    {13, 18}, {14, 16}, {14, 17}, {15, 22}, {15, 41}, {16, 21}, {16, 42}, {17, 18},
    {17, 39}, {18, 40}, {19, 20}, {19, 21}, {19, 24}, {20, 22}, {20, 23}, {21, 47},
    {22, 48}, {23, 24}, {23, 45}, {24, 46}, {25, 27}, {25, 30}, {25, 38}, {26, 28},
    {26, 29}, {26, 37}, {27, 40}, {28, 39}, {29, 36}, {30, 35}, {31, 33}, {31, 36},
    {31, 44}, {32, 34}, {32, 35}, {32, 43}, {33, 46}, {34, 45}, {37, 39}, {37, 42},
    {38, 40}, {38, 41}, {41, 48}, {42, 47}, {43, 45}, {43, 48}, {44, 46}, {44, 47},
};

}  // namespace

Graph named_graph(const std::string& name) {
  if (name == "petersen") return from_one_indexed("petersen", 10, kPetersen);
  if (name == "octahedron") {
    // The octahedron is the d=3 cocktail party graph; antipodal pairs are
    // {1,2}, {3,4}, {5,6} in 1-indexed labels, matching cocktail_party(3).
    Graph g = cocktail_party(3);
    g.family = "octahedron";
    g.params = {};
    return g;
  }
  if (name == "icosahedron") return from_one_indexed("icosahedron", 12, kIcosahedron);
  if (name == "truncated_tetrahedron")
    return from_one_indexed("truncated_tetrahedron", 12, kTruncatedTetrahedron);
  if (name == "truncated_cuboctahedron")
    return from_one_indexed("truncated_cuboctahedron", 48, kTruncatedCuboctahedron);
  fail(Err::UnknownName, "no named graph '" + name + "'; known: petersen, octahedron, icosahedron, " +
                             "truncated_tetrahedron, truncated_cuboctahedron");
}

std::vector<std::string> named_graph_names() {
  return {"icosahedron", "octahedron", "petersen", "truncated_cuboctahedron", "truncated_tetrahedron"};
}

}  // namespace gd
