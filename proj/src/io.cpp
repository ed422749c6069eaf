// io.cpp -- parsers and renderers for graph files, design files, and the
// JSON / text / DOT outputs of the command line tool.

#include "galedesign/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "galedesign/errors.hpp"

namespace gd {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// rational parsing (declared in rational.hpp)

Rat parse_rational(const std::string& s) {
  auto bad = [&]() -> void {
    fail(Err::BadInput, "cannot parse '" + s + "' as a rational number");
  };
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty()) bad();

  auto parse_int = [&](const std::string& u) -> BigInt {
    std::size_t start = 0;
    if (u[0] == '+' || u[0] == '-') start = 1;
    if (start == u.size()) bad();
    for (std::size_t i = start; i < u.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) bad();
    }
    return BigInt(u);
  };

  const std::size_t slash = t.find('/');
  if (slash != std::string::npos) {
    if (t.find('/', slash + 1) != std::string::npos) bad();
    const BigInt num = parse_int(t.substr(0, slash));
    const BigInt den = parse_int(t.substr(slash + 1));
    if (den == 0) fail(Err::BadInput, "zero denominator in '" + s + "'");
    return Rat(num, den);
  }

  const std::size_t dot = t.find('.');
  if (dot != std::string::npos) {
    if (t.find('.', dot + 1) != std::string::npos) bad();
    std::string head = t.substr(0, dot);
    const std::string frac = t.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      negative = head[0] == '-';
      head = head.substr(1);
    }
    if (head.empty() && frac.empty()) bad();
    for (char c : head + frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    }
    BigInt num = head.empty() ? BigInt(0) : BigInt(head);
    BigInt den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rat r(num, den);
    return negative ? -r : r;
  }

  return Rat(parse_int(t));
}

// ---------------------------------------------------------------------------
// file and graph input

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::BadInput, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

Json parse_json_or_fail(const std::string& text, const std::string& what) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Err::BadInput, "malformed JSON in " + what);
  if (!doc.is_object()) fail(Err::BadInput, what + " must be a JSON object");
  return doc;
}

int require_int(const Json& doc, const std::string& key, const std::string& what) {
  if (!doc.contains(key)) fail(Err::BadInput, what + " is missing the '" + key + "' field");
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) fail(Err::BadInput, "'" + key + "' in " + what + " must be an integer");
  return v.get<int>();
}

}  // namespace

Graph parse_graph_json(const std::string& text) {
  const Json doc = parse_json_or_fail(text, "graph file");
  const int n = require_int(doc, "n", "graph file");
  const bool one_indexed = doc.value("one_indexed", false);
  if (!doc.contains("edges") || !doc.at("edges").is_array()) {
    fail(Err::BadInput, "graph file needs an 'edges' array");
  }
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      fail(Err::BadInput, "each edge must be a pair of integer labels");
    }
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (one_indexed) {
      u -= 1;
      v -= 1;
    }
    edges.emplace_back(u, v);
  }
  return from_edge_list(n, std::move(edges));
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == 'c') continue;
    std::istringstream ls(line.substr(first));
    if (n < 0) {
      std::string tag;
      ls >> tag >> n >> m;
      if (ls.fail() || tag != "p" || n <= 0 || m < 0) {
        fail(Err::BadInput, "graph text line " + std::to_string(lineno) +
                                ": expected header 'p <vertices> <edges>'");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    ls >> u >> v;
    if (ls.fail()) {
      fail(Err::BadInput, "graph text line " + std::to_string(lineno) +
                              ": expected an edge 'u v' with 1-indexed labels");
    }
    edges.emplace_back(u - 1, v - 1);
  }
  if (n < 0) fail(Err::BadInput, "graph text has no 'p <vertices> <edges>' header");
  if (static_cast<long long>(edges.size()) != m) {
    fail(Err::BadInput, "graph text header promises " + std::to_string(m) + " edges but " +
                            std::to_string(edges.size()) + " were listed");
  }
  return from_edge_list(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(Err::BadInput, "graph file '" + path + "' is empty");
  if (text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

// ---------------------------------------------------------------------------
// design input and round-trip output

namespace {

DesignKind kind_from_name(const std::string& name) {
  if (name == "weighted") return DesignKind::Weighted;
  if (name == "positive") return DesignKind::Positive;
  if (name == "combinatorial") return DesignKind::Combinatorial;
  fail(Err::BadInput, "unknown design kind '" + name + "' (expected weighted, positive, or combinatorial)");
}

DesignKind classify(const Design& d) {
  bool positive = true;
  bool uniform = true;
  if (d.exact) {
    for (const Rat& w : d.weights_exact) {
      if (w <= 0) positive = false;
      if (w != d.weights_exact.front()) uniform = false;
    }
  } else {
    double lo = d.weights.front();
    double hi = d.weights.front();
    for (double w : d.weights) {
      if (w <= 0.0) positive = false;
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    if (!(hi - lo <= 1e-9 * std::max(std::abs(hi), 1e-30))) uniform = false;
  }
  if (positive && uniform) return DesignKind::Combinatorial;
  if (positive) return DesignKind::Positive;
  return DesignKind::Weighted;
}

}  // namespace

Design parse_design_json(const std::string& text) {
  const Json doc = parse_json_or_fail(text, "design file");
  Design d;
  d.n = require_int(doc, "n", "design file");
  d.k = require_int(doc, "k", "design file");
  const bool one_indexed = doc.value("one_indexed", false);
  if (doc.contains("ordering_id")) {
    if (!doc.at("ordering_id").is_string()) fail(Err::BadInput, "'ordering_id' must be a string");
    d.ordering_id = doc.at("ordering_id").get<std::string>();
  }
  if (!doc.contains("support") || !doc.at("support").is_array()) {
    fail(Err::BadInput, "design file needs a 'support' array");
  }
  for (const Json& v : doc.at("support")) {
    if (!v.is_number_integer()) fail(Err::BadInput, "'support' entries must be integer labels");
    d.support.push_back(v.get<int>() - (one_indexed ? 1 : 0));
  }
  if (d.support.empty()) fail(Err::BadInput, "design file has an empty support");

  const std::size_t size = d.support.size();
  if (doc.contains("weights")) {
    const Json& ws = doc.at("weights");
    if (!ws.is_array() || ws.size() != size) {
      fail(Err::BadInput, "'weights' must be an array matching the support length");
    }
    const bool exact = std::all_of(ws.begin(), ws.end(),
                                   [](const Json& w) { return w.is_string(); });
    if (exact) {
      d.exact = true;
      for (const Json& w : ws) d.weights_exact.push_back(parse_rational(w.get<std::string>()));
      d.weights.resize(size);
      for (std::size_t i = 0; i < size; ++i) d.weights[i] = to_double(d.weights_exact[i]);
    } else {
      for (const Json& w : ws) {
        if (!w.is_number()) {
          fail(Err::BadInput, "'weights' entries must be all numbers or all rational strings");
        }
        d.weights.push_back(w.get<double>());
      }
    }
  } else {
    d.exact = true;
    d.weights_exact.assign(size, Rat(1, static_cast<long>(size)));
    d.weights.assign(size, 1.0 / static_cast<double>(size));
  }

  // Keep support ascending, carrying the weights along.
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return d.support[a] < d.support[b]; });
  Design sorted = d;
  for (std::size_t i = 0; i < size; ++i) {
    sorted.support[i] = d.support[order[i]];
    sorted.weights[i] = d.weights[order[i]];
    if (d.exact) sorted.weights_exact[i] = d.weights_exact[order[i]];
  }
  d = std::move(sorted);

  d.kind = doc.contains("kind")
               ? kind_from_name(doc.at("kind").get<std::string>())
               : classify(d);
  return d;
}

Design read_design_file(const std::string& path) {
  return parse_design_json(read_text_file(path));
}

namespace {

Json design_json_body(const Design& d, bool one_indexed) {
  Json j;
  j["n"] = d.n;
  j["k"] = d.k;
  j["kind"] = design_kind_name(d.kind);
  j["exact"] = d.exact;
  j["size"] = static_cast<long long>(d.support.size());
  j["one_indexed"] = one_indexed;
  Json support = Json::array();
  for (int v : d.support) support.push_back(v + (one_indexed ? 1 : 0));
  j["support"] = std::move(support);
  Json weights = Json::array();
  if (d.exact) {
    for (const Rat& w : d.weights_exact) weights.push_back(rat_to_string(w));
  } else {
    for (double w : d.weights) weights.push_back(w);
  }
  j["weights"] = std::move(weights);
  if (!d.ordering_id.empty()) j["ordering_id"] = d.ordering_id;
  if (d.from_facet >= 0) j["from_facet"] = d.from_facet;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string support_brace_list(const std::vector<int>& support, bool one_indexed) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) out << ",";
    out << support[i] + (one_indexed ? 1 : 0);
  }
  out << "}";
  return out.str();
}

Json ties_json(const std::vector<TieRecord>& ties) {
  Json arr = Json::array();
  for (const TieRecord& t : ties) {
    Json rec;
    rec["abs_value"] = t.abs_value;
    rec["positions"] = t.positions;
    arr.push_back(std::move(rec));
  }
  return arr;
}

}  // namespace

std::string design_to_json(const Design& d, bool one_indexed) {
  Json j;
  j["schema"] = 1;
  Json body = design_json_body(d, one_indexed);
  for (auto& [key, value] : body.items()) j[key] = value;
  return dump(j);
}

std::string designs_to_json(const std::vector<Design>& designs, const DesignListContext& ctx,
                            bool one_indexed) {
  Json j;
  j["schema"] = 1;
  j["graph"] = ctx.graph_label;
  j["mode"] = ctx.mode;
  j["k"] = ctx.k;
  Json ordering;
  ordering["id"] = ctx.ordering_id;
  if (!ctx.ties.empty()) ordering["ties"] = ties_json(ctx.ties);
  j["ordering"] = std::move(ordering);
  if (ctx.s_k >= 0) j["size_bound"] = ctx.s_k;
  if (ctx.has_polytope) {
    Json poly;
    poly["dim"] = ctx.polytope_dim;
    poly["classes"] = ctx.classes;
    poly["facets"] = ctx.facet_count;
    j["polytope"] = std::move(poly);
  }
  j["count"] = static_cast<long long>(designs.size());
  Json arr = Json::array();
  for (const Design& d : designs) arr.push_back(design_json_body(d, one_indexed));
  j["designs"] = std::move(arr);
  return dump(j);
}

std::string designs_to_text(const std::vector<Design>& designs, const DesignListContext& ctx,
                            bool one_indexed) {
  std::ostringstream out;
  out << "graph:    " << ctx.graph_label << "\n";
  out << "mode:     " << ctx.mode << "\n";
  out << "k:        " << ctx.k << "\n";
  out << "ordering: " << ctx.ordering_id << "\n";
  for (const TieRecord& t : ctx.ties) {
    out << "tie:      |lambda| = " << std::setprecision(12) << t.abs_value << " at positions";
    for (int p : t.positions) out << " " << p;
    out << " (broken by the stated policy)\n";
  }
  if (ctx.s_k >= 0) out << "bound:    minimal positive designs have size <= " << ctx.s_k << "\n";
  if (ctx.has_polytope) {
    out << "polytope: dim " << ctx.polytope_dim << ", " << ctx.classes << " point classes, "
        << ctx.facet_count << " facets\n";
  }
  out << "designs:  " << designs.size() << "\n";
  std::size_t min_size = 0;
  std::size_t n_min = 0;
  for (std::size_t i = 0; i < designs.size(); ++i) {
    const Design& d = designs[i];
    out << "[" << i << "] size=" << d.support.size() << " kind=" << design_kind_name(d.kind);
    if (d.from_facet >= 0) out << " facet=" << d.from_facet;
    out << " support=" << support_brace_list(d.support, one_indexed) << "\n";
    if (min_size == 0 || d.support.size() < min_size) {
      min_size = d.support.size();
      n_min = 1;
    } else if (d.support.size() == min_size) {
      ++n_min;
    }
  }
  if (!designs.empty()) {
    out << "smallest: size " << min_size << " (" << n_min
        << (n_min == 1 ? " design)" : " designs)") << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// spectrum rendering

std::string spectrum_to_json(const Spectrum& s, const Ordering& o, const std::string& graph_label) {
  Json j;
  j["schema"] = 1;
  j["graph"] = graph_label;
  j["n"] = s.n;
  j["degree"] = s.degree;
  j["source"] = s.source;
  j["fully_exact"] = s.fully_exact;
  Json ordering;
  ordering["id"] = o.id();
  ordering["policy"] = o.policy;
  if (!o.ties.empty()) ordering["ties"] = ties_json(o.ties);
  j["ordering"] = std::move(ordering);
  Json arr = Json::array();
  for (std::size_t p = 0; p < o.perm.size(); ++p) {
    const Cluster& c = s.clusters[o.perm[p]];
    Json rec;
    rec["position"] = static_cast<long long>(p + 1);
    rec["value"] = c.value;
    if (c.exact) rec["value_exact"] = rat_to_string(c.value_exact);
    rec["multiplicity"] = c.mult;
    rec["exact"] = c.exact;
    arr.push_back(std::move(rec));
  }
  j["clusters"] = std::move(arr);
  return dump(j);
}

std::string spectrum_to_text(const Spectrum& s, const Ordering& o, const std::string& graph_label) {
  std::ostringstream out;
  out << "graph:    " << graph_label << "\n";
  out << "n:        " << s.n << "  degree: " << s.degree << "\n";
  out << "source:   " << s.source << (s.fully_exact ? " (all clusters exact)" : "") << "\n";
  out << "ordering: " << o.id() << "\n";
  for (const TieRecord& t : o.ties) {
    out << "tie:      |lambda| = " << std::setprecision(12) << t.abs_value << " at positions";
    for (int p : t.positions) out << " " << p;
    out << " (broken by the stated policy)\n";
  }
  for (std::size_t p = 0; p < o.perm.size(); ++p) {
    const Cluster& c = s.clusters[o.perm[p]];
    out << "  [" << p + 1 << "] lambda = " << std::setprecision(12) << c.value;
    if (c.exact) out << " = " << rat_to_string(c.value_exact);
    out << "  mult " << c.mult << (c.exact ? "  exact" : "") << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verification rendering

std::string verify_to_json(const VerifyReport& rep, const Design& d, bool one_indexed) {
  Json j;
  j["schema"] = 1;
  j["pass"] = rep.pass;
  j["exact"] = rep.exact;
  j["design"] = design_json_body(d, one_indexed);
  if (rep.exact) {
    j["ones_sum"] = rat_to_string(rep.ones_sum_exact);
  } else {
    j["ones_sum"] = rep.ones_sum;
  }
  Json res = Json::array();
  for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
    Json rec;
    rec["cluster"] = rep.residual_clusters[i];
    rec["residual"] = rep.residuals[i];
    res.push_back(std::move(rec));
  }
  j["residuals"] = std::move(res);
  j["observed_kind"] = design_kind_name(rep.observed_kind);
  j["kind_ok"] = rep.kind_ok;
  if (!rep.message.empty()) j["message"] = rep.message;
  return dump(j);
}

std::string verify_to_text(const VerifyReport& rep, const Design& d, bool one_indexed) {
  std::ostringstream out;
  out << "verify:   " << (rep.pass ? "PASS" : "FAIL") << (rep.exact ? " (exact)" : "") << "\n";
  out << "design:   k=" << d.k << " size=" << d.support.size()
      << " support=" << support_brace_list(d.support, one_indexed) << "\n";
  if (rep.exact) {
    out << "ones sum: " << rat_to_string(rep.ones_sum_exact) << "\n";
  } else {
    out << "ones sum: " << std::setprecision(12) << rep.ones_sum << "\n";
  }
  for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
    out << "residual: cluster " << rep.residual_clusters[i] << " -> " << std::setprecision(3)
        << std::scientific << rep.residuals[i] << std::defaultfloat << "\n";
  }
  out << "kind:     declared " << design_kind_name(d.kind) << ", observed "
      << design_kind_name(rep.observed_kind) << (rep.kind_ok ? "" : " (MISMATCH)") << "\n";
  if (!rep.message.empty()) out << "message:  " << rep.message << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// bound table

std::string table1_to_json(int d_min, int d_max) {
  Json j;
  j["schema"] = 1;
  Json arr = Json::array();
  for (int d = d_min; d <= d_max; ++d) {
    const Table1Row r = table1(d);
    Json rec;
    rec["d"] = r.d;
    rec["m"] = r.m;
    rec["dim"] = r.dim;
    rec["vertices"] = r.doubled ? 2 * r.distinct : r.distinct;
    rec["distinct_columns"] = r.distinct;
    rec["doubled"] = r.doubled;
    rec["design_size_bound"] = r.bound;
    rec["facet_vertex_bound"] = r.facet_lower;
    arr.push_back(std::move(rec));
  }
  j["rows"] = std::move(arr);
  return dump(j);
}

// ---------------------------------------------------------------------------
// DOT output

std::string design_to_dot(const Graph& g, const Design& d, bool one_indexed) {
  if (d.support.empty()) fail(Err::BadInput, "cannot render an empty design");
  if (d.n != g.n) fail(Err::BadInput, "design and graph disagree on the vertex count");
  std::vector<double> weight(g.n, 0.0);
  double max_abs = 0.0;
  for (std::size_t i = 0; i < d.support.size(); ++i) {
    weight[d.support[i]] = d.weights[i];
    max_abs = std::max(max_abs, std::abs(d.weights[i]));
  }
  if (max_abs <= 0.0) fail(Err::BadInput, "cannot render a design whose weights are all zero");

  auto color = [&](int v) -> std::string {
    const double w = weight[v];
    if (w == 0.0) return "#ffffff";
    const int alpha = static_cast<int>(std::lround(255.0 * std::abs(w) / max_abs));
    std::ostringstream c;
    c << (w > 0.0 ? "#ff0000" : "#0000ff");
    c << std::hex << std::setw(2) << std::setfill('0') << std::min(std::max(alpha, 0), 255);
    return c.str();
  };

  std::ostringstream out;
  out << "graph design {\n";
  out << "  node [shape=circle, style=filled];\n";
  const int off = one_indexed ? 1 : 0;
  for (int v = 0; v < g.n; ++v) {
    out << "  v" << v + off << " [fillcolor=\"" << color(v) << "\"];\n";
  }
  for (const auto& [u, v] : g.edges) {
    out << "  v" << u + off << " -- v" << v + off << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gd
