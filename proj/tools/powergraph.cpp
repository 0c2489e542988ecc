// Command-line surface for the power-graph toolkit: build Cayley tables,
// run graph property checks, execute the verification suite, export graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgraph/graph.hpp"
#include "pgraph/graph_algorithms.hpp"
#include "pgraph/group.hpp"
#include "pgraph/planarity.hpp"
#include "pgraph/power_graph.hpp"
#include "pgraph/theorem_suite.hpp"

namespace {

constexpr int kUsageError = 2;

pgraph::Group load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  return pgraph::load_cayley_table(in);
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::vector<int> parse_cycles(const std::string& text, int& max_point) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool open = false;
  std::string token;
  auto flush_token = [&] {
    if (token.empty()) return;
    current.push_back(std::stoi(token));
    max_point = std::max(max_point, current.back());
    token.clear();
  };
  for (char c : text) {
    if (c == '(') {
      if (open) throw std::runtime_error("nested '(' in cycle notation");
      open = true;
      current.clear();
    } else if (c == ')') {
      flush_token();
      if (!open) throw std::runtime_error("unmatched ')' in cycle notation");
      open = false;
      cycles.push_back(current);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (c == ' ' || c == ',' || c == '\t') {
      flush_token();
    } else {
      throw std::runtime_error(std::string("unexpected character '") + c +
                               "' in cycle notation");
    }
  }
  if (open) throw std::runtime_error("unterminated cycle");
  std::vector<int> perm;  // resized by the caller once the domain is known
  perm.resize(max_point + 1);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i)
      perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return perm;
}

pgraph::Group build_family(const std::string& family, const std::vector<std::string>& args) {
  using namespace pgraph;
  auto want = [&](std::size_t count, const std::string& usage) {
    if (args.size() != count)
      throw std::runtime_error("build " + family + " expects " + usage);
  };
  auto num = [&](std::size_t i) { return std::stoi(args.at(i)); };
  Group g = [&]() -> Group {
    if (family == "cyclic") {
      want(1, "<n>");
      return build_cyclic(num(0));
    }
    if (family == "elemab") {
      want(2, "<p> <k>");
      return build_elementary_abelian(num(0), num(1));
    }
    if (family == "genq") {
      want(1, "<m> (group order 4m)");
      return build_generalized_quaternion(num(0));
    }
    if (family == "dihedral") {
      want(1, "<m> (group order 2m)");
      return build_dihedral(num(0));
    }
    if (family == "heisenberg") {
      want(1, "<p>");
      return build_heisenberg(num(0));
    }
    if (family == "sym") {
      want(1, "<m>");
      return build_symmetric(num(0));
    }
    if (family == "alt") {
      want(1, "<m>");
      return build_alternating(num(0));
    }
    if (family == "perm") {
      if (args.empty()) throw std::runtime_error("build perm expects cycle strings");
      int max_point = 0;
      std::vector<std::vector<int>> gens;
      for (const auto& a : args) {
        int local = max_point;
        gens.push_back(parse_cycles(a, local));
        max_point = local;
      }
      for (auto& perm : gens)  // pad to the common domain
        for (int v = static_cast<int>(perm.size()); v <= max_point; ++v) perm.push_back(v);
      return build_from_permutations(gens);
    }
    if (family == "product") {
      want(2, "<a.tbl> <b.tbl>");
      return direct_product(load_group_file(args[0]), load_group_file(args[1]));
    }
    if (family == "table") {
      want(1, "<in.tbl>");
      return load_group_file(args[0]);
    }
    throw std::runtime_error("unknown family: " + family);
  }();
  return g;
}

int cmd_build(const std::string& family, const std::vector<std::string>& args,
              const std::string& out_path, const std::string& label) {
  pgraph::Group g = build_family(family, args);
  std::ostringstream buf;
  if (label.empty()) {
    pgraph::save_cayley_table(g, buf);
  } else {
    buf << "# label: " << label << "\n" << g.order() << "\n";
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) {
        if (b) buf << ' ';
        buf << g.mul(a, b);
      }
      buf << "\n";
    }
  }
  write_output(buf.str(), out_path);
  return 0;
}

int cmd_check(const std::string& property, const std::string& group_path, bool full) {
  using namespace pgraph;
  Group g = load_group_file(group_path);
  if (property == "eppo") {
    std::cout << (is_eppo(g) ? "true" : "false") << "\n";
    return 0;
  }
  UndirectedGraph graph = full ? build_undirected(g) : build_punctured(g);
  nlohmann::json witness;
  if (property == "connected") {
    auto comps = connected_components(graph);
    std::cout << (comps.size() <= 1 ? "true" : "false") << "\n";
    witness["components"] = comps.size();
  } else if (property == "bipartite") {
    BipartitenessResult r = is_bipartite(graph);
    std::cout << (r.bipartite ? "true" : "false") << "\n";
    if (r.bipartite)
      witness["coloring"] = r.side;
    else
      witness["odd_cycle"] = r.odd_cycle;
  } else if (property == "planar") {
    PlanarityResult r = is_planar(graph);
    std::cout << (r.planar ? "true" : "false") << "\n";
    if (r.planar) {
      witness["faces"] = r.face_count;
    } else {
      witness["kuratowski_kind"] = r.kuratowski_kind;
      witness["kuratowski_edges"] = nlohmann::json::array();
      for (auto [u, v] : r.kuratowski_edges)
        witness["kuratowski_edges"].push_back({graph.label(u), graph.label(v)});
    }
  } else if (property == "eulerian") {
    std::cout << (is_eulerian(graph) ? "true" : "false") << "\n";
  } else if (property == "complete") {
    std::int64_t n = graph.vertex_count();
    std::cout << (graph.edge_count() == n * (n - 1) / 2 ? "true" : "false") << "\n";
  } else if (property == "tree") {
    bool tree = is_connected(graph) && graph.edge_count() == graph.vertex_count() - 1;
    std::cout << (tree ? "true" : "false") << "\n";
  } else if (property == "srg") {
    SrgCheck r = srg_parameters(graph);
    if (r.params) {
      auto opt = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("-");
      };
      std::cout << "(" << r.params->n << ", " << r.params->k << ", " << opt(r.params->lambda)
                << ", " << opt(r.params->mu) << ")\n";
    } else {
      std::cout << "refused: " << r.refusal << "\n";
      witness["pair"] = {graph.label(r.witness_pair[0]), graph.label(r.witness_pair[1])};
    }
  } else if (property == "bridges") {
    for (auto [u, v] : find_bridges(graph))
      std::cout << graph.label(u) << " " << graph.label(v) << "\n";
  } else {
    throw CLI::ValidationError("check", "unknown property: " + property);
  }
  if (!witness.empty()) std::cout << witness.dump() << "\n";
  return 0;
}

int cmd_verify(std::vector<std::string> ids, int max_order, const std::string& report_path) {
  using namespace pgraph;
  TheoremReport report;
  if (ids.size() == 1 && ids[0] == "all") {
    report = run_all(max_order);
  } else {
    for (const auto& id : ids) theorem_description(id);  // rejects unknown ids
    report = run_selected(ids, max_order);
  }
  std::string json = report.to_json().dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << json;
  } else {
    write_output(json, report_path);
    std::cout << "pass " << report.pass_count << " fail " << report.fail_count << "\n";
  }
  return report.fail_count == 0 ? 0 : 1;
}

int cmd_export(const std::string& group_path, const std::string& format, bool directed,
               bool punctured, const std::string& out_path) {
  using namespace pgraph;
  Group g = load_group_file(group_path);
  std::string content;
  if (directed) {
    DirectedPowerGraph d = build_directed(g);
    if (punctured) d = puncture(d);
    content = format == "dot" ? to_dot(d, "PG") : to_edge_list(d);
  } else {
    UndirectedGraph u = build_undirected(g);
    if (punctured) u = puncture(u);
    content = format == "dot" ? to_dot(u, "PG") : to_edge_list(u);
  }
  write_output(content, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-graph toolkit: finite groups, their power graphs, and a "
               "verification suite for the structural facts relating them"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a group and emit its Cayley table");
  std::string family, build_out, build_label;
  std::vector<std::string> build_args;
  build->add_option("family", family,
                    "cyclic|elemab|genq|dihedral|heisenberg|sym|alt|perm|product|table")
      ->required();
  build->add_option("args", build_args, "family parameters");
  build->add_option("-o,--out", build_out, "output file (default: stdout)");
  build->add_option("--label", build_label, "override the stored label");

  // check
  auto* check = app.add_subcommand("check", "run a property check on a stored group");
  std::string property, check_file;
  bool check_full = false;
  check->add_option("property", property,
                    "connected|bipartite|planar|eulerian|srg|bridges|complete|tree|eppo")
      ->required();
  check->add_option("group", check_file, "Cayley-table file")->required();
  check->add_flag("--full", check_full,
                  "check the full power graph instead of the punctured one");

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::vector<std::string> ids;
  int max_order = 0;
  std::string report_path;
  verify->add_option("ids", ids, "theorem ids, or 'all'")->required();
  verify->add_option("--max-order", max_order,
                     "catalog bound (default: POWERGRAPH_MAX_ORDER or 60)");
  verify->add_option("--report", report_path, "write the JSON report to this file");

  // export
  auto* exp = app.add_subcommand("export", "export a group's power graph");
  std::string export_file, format, export_out;
  bool directed = false, punctured = false;
  exp->add_option("group", export_file, "Cayley-table file")->required();
  exp->add_option("--format", format, "dot|edges")->required()
      ->check(CLI::IsMember({"dot", "edges"}));
  exp->add_flag("--directed", directed, "export the directed power graph");
  exp->add_flag("--punctured", punctured, "drop the identity vertex");
  exp->add_option("-o,--out", export_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (build->parsed()) return cmd_build(family, build_args, build_out, build_label);
    if (check->parsed()) return cmd_check(property, check_file, check_full);
    if (verify->parsed()) {
      if (max_order == 0) {
        const char* env = std::getenv("POWERGRAPH_MAX_ORDER");
        max_order = env ? std::atoi(env) : 60;
        if (max_order <= 0) max_order = 60;
      }
      return cmd_verify(ids, max_order, report_path);
    }
    if (exp->parsed()) return cmd_export(export_file, format, directed, punctured, export_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
