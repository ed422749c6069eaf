// io.hpp -- file formats and renderers: graph files (JSON or plain text),
// design files, JSON exports of spectra / design lists / verification
// reports, the bound table, and DOT output.
//
// Every JSON document carries a top-level "schema": 1.  Vertex labels are
// written 1-indexed when one_indexed is set, matching the figures most
// users compare against; internal labels are always 0-indexed.
#pragma once

#include <string>
#include <vector>

#include "galedesign/cubes_codes.hpp"
#include "galedesign/gale.hpp"
#include "galedesign/graphs.hpp"
#include "galedesign/spectral.hpp"

namespace gd {

// Reads a whole file; fails with BadInput when it cannot be opened.
std::string read_text_file(const std::string& path);

// Graph files.  JSON: {"n": count, "edges": [[u,v], ...], "one_indexed":
// bool (default false)}.  Plain text: comment lines starting with '#' or
// 'c', then a header "p <n> <m>", then m lines "u v" with 1-indexed labels.
// The format is sniffed from the first non-space character.
Graph parse_graph_json(const std::string& text);
Graph parse_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);

// Design files: {"n", "k", "support", "weights", "kind", "ordering_id",
// "one_indexed"}.  Weights may be numbers (floating design), strings like
// "1/3" (exact design), or absent (uniform, exact).  Kind defaults to the
// classification of the weights.
Design parse_design_json(const std::string& text);
Design read_design_file(const std::string& path);

std::string design_to_json(const Design& d, bool one_indexed);

// Context for rendering a design listing: which route produced it and the
// polytope summary when the facet route ran.
struct DesignListContext {
  std::string graph_label;  // family name or file path
  std::string mode;         // facets | code | cut | brute
  std::string ordering_id;
  std::vector<TieRecord> ties;  // annotated whenever the ordering had ties
  int k = 0;
  int s_k = -1;             // size bound when known, else -1
  bool has_polytope = false;
  int polytope_dim = 0;
  long long classes = 0;
  long long facet_count = 0;
};

std::string designs_to_json(const std::vector<Design>& designs, const DesignListContext& ctx,
                            bool one_indexed);
std::string designs_to_text(const std::vector<Design>& designs, const DesignListContext& ctx,
                            bool one_indexed);

std::string spectrum_to_json(const Spectrum& s, const Ordering& o, const std::string& graph_label);
std::string spectrum_to_text(const Spectrum& s, const Ordering& o, const std::string& graph_label);

std::string verify_to_json(const VerifyReport& rep, const Design& d, bool one_indexed);
std::string verify_to_text(const VerifyReport& rep, const Design& d, bool one_indexed);

std::string table1_to_json(int d_min, int d_max);

// DOT rendering: design vertices are filled red with opacity proportional
// to weight / max weight (solid for the maximum), negative weights blue by
// the same rule, all other vertices white.  Node order is by label.
std::string design_to_dot(const Graph& g, const Design& d, bool one_indexed);

}  // namespace gd
