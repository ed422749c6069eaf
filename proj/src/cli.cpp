// cli.cpp -- subcommand dispatch: spectrum, designs, verify, table1,
// export-dot, families. Thin glue over the library; every command is
// deterministic, so identical invocations produce byte-identical output.

#include "galedesign/cli.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galedesign/cubes_codes.hpp"
#include "galedesign/errors.hpp"
#include "galedesign/gale.hpp"
#include "galedesign/graphs.hpp"
#include "galedesign/io.hpp"
#include "galedesign/polytope.hpp"
#include "galedesign/spectral.hpp"

namespace gd {
namespace {

struct GraphOpts {
  std::string family;
  std::string file;
  int n = 0;
  int d = 0;
};

void add_graph_options(CLI::App* cmd, GraphOpts& g) {
  auto* fam = cmd->add_option(
      "--family", g.family,
      "graph family: petersen, octahedron, icosahedron, truncated_tetrahedron, "
      "truncated_cuboctahedron, cycle (needs --n), cocktail (needs --d), hypercube (needs --d)");
  auto* file = cmd->add_option("--graph-file", g.file,
                               "graph file, JSON {\"n\",\"edges\"} or text 'p n m' header plus edges");
  fam->excludes(file);
  file->excludes(fam);
  cmd->add_option("--n", g.n, "vertex count for --family cycle");
  cmd->add_option("--d", g.d, "parameter for --family cocktail or hypercube");
}

Graph resolve_graph(const GraphOpts& g, std::string& label) {
  if (!g.file.empty()) {
    label = g.file;
    return read_graph_file(g.file);
  }
  if (g.family.empty()) fail(Err::BadInput, "choose a graph with --family or --graph-file");
  if (g.family == "cycle") {
    if (g.n <= 0) fail(Err::BadInput, "--family cycle needs --n <vertices>");
    label = "cycle(" + std::to_string(g.n) + ")";
    return cycle(g.n);
  }
  if (g.family == "cocktail" || g.family == "cocktail_party") {
    if (g.d <= 0) fail(Err::BadInput, "--family cocktail needs --d <pairs>");
    label = "cocktail_party(" + std::to_string(g.d) + ")";
    return cocktail_party(g.d);
  }
  if (g.family == "hypercube") {
    if (g.d <= 0) fail(Err::BadInput, "--family hypercube needs --d <dimension>");
    label = "hypercube(" + std::to_string(g.d) + ")";
    return hypercube(g.d);
  }
  label = g.family;
  return named_graph(g.family);
}

int parse_positive_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    fail(Err::BadInput, what + ": '" + s + "' is not an integer");
  }
  if (pos != s.size() || v <= 0) fail(Err::BadInput, what + ": '" + s + "' must be a positive integer");
  return v;
}

// Grammar: "frequency" (|lambda| descending, positive sign first on ties),
// "frequency:negative_first", "last=lambdaJ" (move the cluster listed at
// 1-indexed position J of the positive-first frequency order to the end),
// "perm=p1,p2,..." (positions of the positive-first frequency order; p1 = 1).
Ordering resolve_order(const Spectrum& s, const std::string& spec) {
  if (spec.empty() || spec == "frequency" || spec == "frequency:positive_first") {
    return frequency_order(s, TiePolicy::PositiveFirst);
  }
  if (spec == "frequency:negative_first") {
    return frequency_order(s, TiePolicy::NegativeFirst);
  }
  const Ordering freq = frequency_order(s, TiePolicy::PositiveFirst);
  const int m = s.m();
  const std::string last_prefix = "last=lambda";
  if (spec.rfind(last_prefix, 0) == 0) {
    const int j = parse_positive_int(spec.substr(last_prefix.size()), "--order " + spec);
    if (j < 2 || j > m) {
      fail(Err::BadInput, "--order " + spec + ": position must lie in [2, " + std::to_string(m) +
                              "] (position 1 is the constant eigenvector, which stays first)");
    }
    std::vector<int> perm;
    perm.reserve(m);
    for (int p = 0; p < m; ++p) {
      if (p != j - 1) perm.push_back(freq.perm[p]);
    }
    perm.push_back(freq.perm[j - 1]);
    return custom_order(s, perm);
  }
  const std::string perm_prefix = "perm=";
  if (spec.rfind(perm_prefix, 0) == 0) {
    std::vector<int> perm;
    std::stringstream ss(spec.substr(perm_prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const int p = parse_positive_int(item, "--order " + spec);
      if (p > m) {
        fail(Err::BadInput, "--order " + spec + ": position " + item + " exceeds the cluster count " +
                                std::to_string(m));
      }
      perm.push_back(freq.perm[p - 1]);
    }
    return custom_order(s, perm);
  }
  fail(Err::BadInput, "unrecognized --order '" + spec +
                          "' (use frequency, frequency:negative_first, last=lambdaJ, or perm=p1,p2,...)");
}

int resolve_k(const std::string& spec, int m) {
  if (spec == "extremal") return m - 1;
  return parse_positive_int(spec, "--k");
}

Spectrum resolve_spectrum(const Graph& g, bool tol_given, double tol) {
  if (tol_given) return decompose(g, tol);
  return default_spectrum(g);
}

int hypercube_dimension(const Graph& g, const std::string& mode) {
  if (g.family != "hypercube" || g.params.empty()) {
    fail(Err::BadInput, "--mode " + mode + " applies to --family hypercube only");
  }
  return static_cast<int>(g.params[0]);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphical designs in regular graphs via eigenpolytope faces"};
  app.require_subcommand(1);

  GraphOpts spectrum_graph;
  std::string spectrum_order = "frequency";
  double spectrum_tol = 1e-9;
  std::string spectrum_format = "text";
  CLI::App* cmd_spectrum = app.add_subcommand(
      "spectrum", "eigenvalue clusters of the normalized adjacency matrix, in the chosen order");
  add_graph_options(cmd_spectrum, spectrum_graph);
  cmd_spectrum->add_option("--order", spectrum_order,
                           "frequency | frequency:negative_first | last=lambdaJ | perm=p1,p2,...");
  CLI::Option* spectrum_tol_opt =
      cmd_spectrum->add_option("--tol-cluster", spectrum_tol,
                               "eigenvalue clustering tolerance (forces numeric decomposition)");
  cmd_spectrum->add_option("--format", spectrum_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  GraphOpts designs_graph;
  std::string designs_order = "frequency";
  std::string designs_k = "extremal";
  std::string designs_mode = "facets";
  std::string designs_format = "text";
  double designs_tol_cluster = 1e-9;
  double designs_tol_facet = 1e-8;
  int designs_max_support = 10;
  bool designs_one_indexed = true;
  CLI::App* cmd_designs =
      app.add_subcommand("designs", "enumerate minimal positive k-designs (or code / cut / circuit designs)");
  add_graph_options(cmd_designs, designs_graph);
  cmd_designs->add_option("--order", designs_order,
                          "frequency | frequency:negative_first | last=lambdaJ | perm=p1,p2,...");
  cmd_designs->add_option("--k", designs_k, "design strength: an integer or 'extremal' (all but one cluster)");
  cmd_designs->add_option("--mode", designs_mode,
                          "facets: facet enumeration; brute: positive circuits by subset scan; "
                          "code: hypercube linear-code design; cut: hypercube cut-polytope designs")
      ->check(CLI::IsMember({"facets", "brute", "code", "cut"}));
  CLI::Option* designs_tol_cluster_opt =
      cmd_designs->add_option("--tol-cluster", designs_tol_cluster,
                              "eigenvalue clustering tolerance (forces numeric decomposition)");
  cmd_designs->add_option("--tol-facet", designs_tol_facet, "floating facet sign tolerance");
  cmd_designs->add_option("--max-support", designs_max_support,
                          "largest circuit support searched in --mode brute");
  cmd_designs->add_option("--format", designs_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_designs->add_flag("--one-indexed,!--zero-indexed", designs_one_indexed,
                        "write vertex labels 1-indexed (default) or 0-indexed");

  GraphOpts verify_graph;
  std::string verify_order = "frequency";
  std::string verify_design_path;
  double verify_tol_cluster = 1e-9;
  double verify_tol = 1e-8;
  std::string verify_format = "text";
  bool verify_one_indexed = true;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check a design file against a graph");
  add_graph_options(cmd_verify, verify_graph);
  cmd_verify->add_option("--design", verify_design_path, "design file (JSON)")->required();
  cmd_verify->add_option("--order", verify_order,
                         "frequency | frequency:negative_first | last=lambdaJ | perm=p1,p2,...");
  CLI::Option* verify_tol_cluster_opt =
      cmd_verify->add_option("--tol-cluster", verify_tol_cluster,
                             "eigenvalue clustering tolerance (forces numeric decomposition)");
  cmd_verify->add_option("--tol-verify", verify_tol, "residual tolerance on the floating path");
  cmd_verify->add_option("--format", verify_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_verify->add_flag("--one-indexed,!--zero-indexed", verify_one_indexed,
                       "write vertex labels 1-indexed (default) or 0-indexed");

  int table_min_d = 2;
  int table_max_d = 11;
  std::string table_format = "text";
  CLI::App* cmd_table = app.add_subcommand(
      "table1", "hypercube design size bounds per dimension: m, C(d,m), vertex count, |W*| bound");
  cmd_table->add_option("--min-d", table_min_d, "first dimension (default 2)");
  cmd_table->add_option("--max-d", table_max_d, "last dimension (default 11)");
  cmd_table->add_option("--format", table_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  GraphOpts dot_graph;
  std::string dot_design_path;
  bool dot_one_indexed = true;
  CLI::App* cmd_dot = app.add_subcommand(
      "export-dot", "render a design on its graph as DOT (red fill scaled by weight)");
  add_graph_options(cmd_dot, dot_graph);
  cmd_dot->add_option("--design", dot_design_path, "design file (JSON)")->required();
  cmd_dot->add_flag("--one-indexed,!--zero-indexed", dot_one_indexed,
                    "write vertex labels 1-indexed (default) or 0-indexed");

  std::string families_format = "text";
  CLI::App* cmd_families = app.add_subcommand("families", "list the built-in graph families");
  cmd_families->add_option("--format", families_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_spectrum)) {
      std::string label;
      const Graph g = resolve_graph(spectrum_graph, label);
      const Spectrum s = resolve_spectrum(g, spectrum_tol_opt->count() > 0, spectrum_tol);
      const Ordering o = resolve_order(s, spectrum_order);
      out << (spectrum_format == "json" ? spectrum_to_json(s, o, label)
                                        : spectrum_to_text(s, o, label));
      return 0;
    }

    if (app.got_subcommand(cmd_designs)) {
      std::string label;
      const Graph g = resolve_graph(designs_graph, label);
      DesignListContext ctx;
      ctx.graph_label = label;
      ctx.mode = designs_mode;
      std::vector<Design> designs;
      if (designs_mode == "code") {
        const CodeDesign cd = code_design(hypercube_dimension(g, designs_mode));
        designs.push_back(cd.design);
        ctx.k = cd.design.k;
        ctx.ordering_id = cd.design.ordering_id;
      } else if (designs_mode == "cut") {
        designs = cut_polytope_designs(hypercube_dimension(g, designs_mode));
        ctx.k = designs.front().k;
        ctx.ordering_id = designs.front().ordering_id;
      } else {
        const Spectrum s =
            resolve_spectrum(g, designs_tol_cluster_opt->count() > 0, designs_tol_cluster);
        const Ordering o = resolve_order(s, designs_order);
        const int k = resolve_k(designs_k, s.m());
        ctx.k = k;
        ctx.ordering_id = o.id();
        ctx.ties = o.ties;
        ctx.s_k = size_bound_sk(s, o, k);
        if (designs_mode == "facets") {
          DesignEnumeration en = enumerate_minimal_designs(s, o, k, designs_tol_facet);
          ctx.has_polytope = true;
          ctx.polytope_dim = en.config.dim - 1;
          ctx.classes = en.config.n_classes();
          ctx.facet_count = static_cast<long long>(en.facets.size());
          designs = std::move(en.designs);
        } else {
          const Partition p = make_partition(s, o, k);
          designs = weighted_circuit_designs(p, designs_max_support).designs;
        }
      }
      out << (designs_format == "json" ? designs_to_json(designs, ctx, designs_one_indexed)
                                       : designs_to_text(designs, ctx, designs_one_indexed));
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      std::string label;
      const Graph g = resolve_graph(verify_graph, label);
      const Design d = read_design_file(verify_design_path);
      const Spectrum s = resolve_spectrum(g, verify_tol_cluster_opt->count() > 0, verify_tol_cluster);
      const Ordering o = resolve_order(s, verify_order);
      const VerifyReport rep = verify_design(d, s, o, verify_tol);
      out << (verify_format == "json" ? verify_to_json(rep, d, verify_one_indexed)
                                      : verify_to_text(rep, d, verify_one_indexed));
      return rep.pass ? 0 : 1;
    }

    if (app.got_subcommand(cmd_table)) {
      out << (table_format == "json" ? table1_to_json(table_min_d, table_max_d)
                                     : table1_text(table_min_d, table_max_d));
      return 0;
    }

    if (app.got_subcommand(cmd_dot)) {
      std::string label;
      const Graph g = resolve_graph(dot_graph, label);
      const Design d = read_design_file(dot_design_path);
      out << design_to_dot(g, d, dot_one_indexed);
      return 0;
    }

    if (app.got_subcommand(cmd_families)) {
      if (families_format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["named"] = named_graph_names();
        nlohmann::ordered_json params = nlohmann::ordered_json::array();
        params.push_back({{"name", "cycle"}, {"parameter", "--n"}});
        params.push_back({{"name", "cocktail"}, {"parameter", "--d"}});
        params.push_back({{"name", "hypercube"}, {"parameter", "--d"}});
        j["parameterized"] = std::move(params);
        out << j.dump(2) << "\n";
      } else {
        for (const std::string& name : named_graph_names()) out << name << "\n";
        out << "cycle --n <vertices>\n";
        out << "cocktail --d <pairs>\n";
        out << "hypercube --d <dimension>\n";
      }
      return 0;
    }

    err << "error: no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Err::BudgetExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gd
