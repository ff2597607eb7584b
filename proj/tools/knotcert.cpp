// knotcert: build graphs by triangle/star moves and certify spatial-graph
// diagrams knotless (or find their knots and links).
//
// Exit codes: 0 property holds, 1 property refuted, 2 input or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "knotcert/certify.hpp"
#include "knotcert/diagram_io.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/graph_io.hpp"
#include "knotcert/isomorphism.hpp"
#include "knotcert/symmetry.hpp"

namespace fs = std::filesystem;
using namespace knotcert;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string diagram_id(const fs::path& path) { return path.stem().string(); }

struct ConstructArgs {
  std::string input;
  std::string script;
  std::string out;
  std::string trace;
};

int run_construct(const ConstructArgs& a) {
  Graph start = a.input.empty() ? k7() : graph_from_json(read_json_file(a.input));
  MoveScript script = a.script.empty() ? g7_script() : script_from_json(read_json_file(a.script));
  ScriptResult result;
  try {
    result = apply_script(start, script);
  } catch (const ScriptError& e) {
    std::cerr << "construct: failed at step " << e.step() << ": " << e.what() << "\n";
    return kInputError;
  }
  const Graph& g = result.final_graph;
  std::cout << "applied " << script.steps.size() << " moves: " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges\n";
  std::cout << "degrees:";
  for (const auto& v : g.vertices()) std::cout << " " << v << ":" << g.degree(v);
  std::cout << "\n";
  if (!a.out.empty()) write_file(a.out, dump_json(graph_to_json(g)));
  else std::cout << dump_json(graph_to_json(g));
  if (!a.trace.empty()) {
    json steps = json::array();
    steps.push_back(graph_to_json(start));
    for (const auto& h : result.intermediates) steps.push_back(graph_to_json(h));
    write_file(a.trace, dump_json(json{{"schema", kReportSchema}, {"kind", "construct"}, {"graphs", steps}}));
  }
  return kHolds;
}

int run_validate(const std::string& path, const std::string& expect) {
  Diagram d = read_diagram(path);
  auto report = validate(d);
  if (!report.ok()) {
    std::cout << "INVALID " << path << "\n";
    for (const auto& v : report.violations) std::cout << "  " << to_string(v.kind) << ": " << v.detail << "\n";
    return kRefuted;
  }
  Graph g = underlying_graph(d);
  std::cout << "valid: " << d.vertices.size() << " vertex nodes, " << d.crossings.size() << " crossings, "
            << g.edge_count() << " edges, V-E+F = " << report.euler_characteristic << "\n";
  if (!expect.empty()) {
    Graph want = graph_from_json(read_json_file(expect));
    auto witness = is_isomorphic(g, want);
    if (!witness) {
      std::cout << "underlying graph is NOT isomorphic to " << expect << "\n";
      return kRefuted;
    }
    std::cout << "underlying graph is isomorphic to " << expect << "\n";
  }
  return kHolds;
}

int run_certify(const std::string& path, int max_crossings, const std::string& report_path) {
  Diagram d = read_diagram(path);
  CertifyOptions options{max_crossings, threads_from_env()};
  auto report = certify(d, diagram_id(path), options);
  std::cout << format_table(report);
  if (!report_path.empty()) write_file(report_path, dump_json(to_json(report)));
  switch (report.summary) {
    case Summary::Knotless: return kHolds;
    case Summary::KnotFound: return kRefuted;
    case Summary::Inconclusive: return kRefuted;
  }
  return kRefuted;
}

int run_links(const std::string& path, const std::string& report_path) {
  Diagram d = read_diagram(path);
  auto report = find_links(d, diagram_id(path), threads_from_env());
  std::cout << format_table(report);
  if (!report_path.empty()) write_file(report_path, dump_json(to_json(report)));
  return report.linked.empty() ? kRefuted : kHolds;
}

int run_symmetry(const std::string& path, const std::string& map_file, const std::string& cycles, bool reflect,
                 bool flip) {
  Diagram d = read_diagram(path);
  require_valid(d);
  VertexMap partial;
  if (!map_file.empty()) {
    json j = read_json_file(map_file);
    if (!j.is_object()) throw FormatError(map_file, "expected an object mapping labels to labels");
    for (auto& [k, v] : j.items()) {
      if (!v.is_string()) throw FormatError(map_file + " /" + k, "expected a label");
      partial[k] = v.get<std::string>();
    }
  }
  for (const auto& [k, v] : parse_cycle_notation(cycles)) partial[k] = v;
  std::set<Label> nodes;
  for (const auto& [v, rot] : d.vertices) nodes.insert(v);
  VertexMap full = complete_on(nodes, partial);
  auto result = check_symmetry(d, full, reflect, flip);
  if (!result.holds) {
    std::cout << "not a symmetry: " << result.reason << "\n";
    return kRefuted;
  }
  std::cout << "symmetry holds; crossing permutation " << result.crossing_cycles() << "\n";
  return kHolds;
}

int run_iso(const std::string& p1, const std::string& p2) {
  Graph g1 = graph_from_json(read_json_file(p1));
  Graph g2 = graph_from_json(read_json_file(p2));
  auto witness = is_isomorphic(g1, g2);
  if (!witness) {
    std::cout << "not isomorphic\n";
    return kRefuted;
  }
  json j = json::object();
  for (const auto& [k, v] : *witness) j[k] = v;
  std::cout << dump_json(j);
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotcert: spatial-graph diagram certification"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "apply a move script (default: K7 -> G7)");
  construct->add_option("--input", construct_args.input, "graph file to start from (default: K7 on a..g)");
  construct->add_option("--script", construct_args.script, "move-script file (default: the K7 -> G7 script)");
  construct->add_option("--out", construct_args.out, "write the final graph here (default: stdout)");
  construct->add_option("--trace", construct_args.trace, "write the start graph and every intermediate here");

  std::string diagram, expect_graph, report_path, map_file, cycles, graph1, graph2;
  int max_crossings = kDefaultMaxCrossings;
  bool reflect = false, flip = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a diagram file");
  validate_cmd->add_option("diagram", diagram, "diagram file")->required();
  validate_cmd->add_option("--expect-graph", expect_graph, "graph file the diagram must be isomorphic to");

  auto* certify_cmd = app.add_subcommand("certify", "classify the knot on every cycle of a diagram");
  certify_cmd->add_option("diagram", diagram, "diagram file")->required();
  certify_cmd->add_option("--max-crossings", max_crossings, "certification bound for trivial Jones polynomial")
      ->check(CLI::Range(0, 24));
  certify_cmd->add_option("--report", report_path, "write the JSON report here");

  auto* links_cmd = app.add_subcommand("links", "list disjoint cycle pairs with nonzero linking number");
  links_cmd->add_option("diagram", diagram, "diagram file")->required();
  links_cmd->add_option("--report", report_path, "write the JSON report here");

  auto* symmetry_cmd = app.add_subcommand("symmetry", "check that a vertex map extends to a diagram symmetry");
  symmetry_cmd->add_option("diagram", diagram, "diagram file")->required();
  symmetry_cmd->add_option("--map", map_file, "JSON object {label: image}; unlisted labels are fixed");
  symmetry_cmd->add_option("--cycles", cycles, "vertex map in cycle notation, e.g. \"(c h)(e i)\"");
  symmetry_cmd->add_flag("--reflect", reflect, "the map reverses the orientation of the projection plane");
  symmetry_cmd->add_flag("--flip", flip, "the map exchanges over and under");

  auto* iso_cmd = app.add_subcommand("iso", "find an isomorphism between two graph files");
  iso_cmd->add_option("graph1", graph1)->required();
  iso_cmd->add_option("graph2", graph2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*construct) return run_construct(construct_args);
    if (*validate_cmd) return run_validate(diagram, expect_graph);
    if (*certify_cmd) return run_certify(diagram, max_crossings, report_path);
    if (*links_cmd) return run_links(diagram, report_path);
    if (*symmetry_cmd) return run_symmetry(diagram, map_file, cycles, reflect, flip);
    if (*iso_cmd) return run_iso(graph1, graph2);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
