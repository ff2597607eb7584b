#include "knotcert/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "knotcert/errors.hpp"

namespace knotcert {

using nlohmann::json;

namespace {

std::string label_at(const json& j, const std::string& where) {
  if (!j.is_string() || j.get<std::string>().empty()) throw FormatError(where, "expected a non-empty string label");
  return j.get<std::string>();
}

Edge edge_at(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw FormatError(where, "expected a pair of labels");
  auto a = label_at(j[0], where + "/0");
  auto b = label_at(j[1], where + "/1");
  if (a == b) throw FormatError(where, "loop edge at '" + a + "'");
  return Edge::of(a, b);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json graph_to_json(const Graph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v);
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  return json{{"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  const json& vs = member(j, "vertices", "");
  const json& es = member(j, "edges", "");
  if (!vs.is_array()) throw FormatError("/vertices", "expected an array");
  if (!es.is_array()) throw FormatError("/edges", "expected an array");
  Graph g;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto where = "/vertices/" + std::to_string(i);
    auto v = label_at(vs[i], where);
    if (g.has_vertex(v)) throw FormatError(where, "duplicate vertex '" + v + "'");
    g.add_vertex(v);
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto where = "/edges/" + std::to_string(i);
    Edge e = edge_at(es[i], where);
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second)) throw FormatError(where, "unknown endpoint");
    if (g.has_edge(e.first, e.second)) throw FormatError(where, "duplicate edge " + e.to_string());
    g.add_edge(e.first, e.second);
  }
  return g;
}

json script_to_json(const MoveScript& s) {
  json steps = json::array();
  for (const auto& m : s.steps) {
    std::visit(
        [&](const auto& mv) {
          using T = std::decay_t<decltype(mv)>;
          if constexpr (std::is_same_v<T, DeltaY>)
            steps.push_back({{"op", "deltaY"}, {"triangle", mv.triangle}, {"center", mv.center}});
          if constexpr (std::is_same_v<T, YDelta>) steps.push_back({{"op", "yDelta"}, {"center", mv.center}});
          if constexpr (std::is_same_v<T, DeleteEdge>)
            steps.push_back({{"op", "deleteEdge"}, {"edge", {mv.edge.first, mv.edge.second}}});
          if constexpr (std::is_same_v<T, ContractEdge>)
            steps.push_back({{"op", "contractEdge"}, {"edge", {mv.edge.first, mv.edge.second}}});
        },
        m);
  }
  return json{{"steps", steps}};
}

MoveScript script_from_json(const json& j) {
  const json& steps = member(j, "steps", "");
  if (!steps.is_array()) throw FormatError("/steps", "expected an array");
  MoveScript s;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto where = "/steps/" + std::to_string(i);
    const json& st = steps[i];
    const json& op = member(st, "op", where);
    if (!op.is_string()) throw FormatError(where + "/op", "expected a string");
    auto name = op.get<std::string>();
    if (name == "deltaY") {
      const json& tri = member(st, "triangle", where);
      if (!tri.is_array() || tri.size() != 3) throw FormatError(where + "/triangle", "expected three labels");
      DeltaY mv;
      for (std::size_t k = 0; k < 3; ++k) mv.triangle[k] = label_at(tri[k], where + "/triangle/" + std::to_string(k));
      mv.center = label_at(member(st, "center", where), where + "/center");
      s.steps.emplace_back(mv);
    } else if (name == "yDelta") {
      s.steps.emplace_back(YDelta{label_at(member(st, "center", where), where + "/center")});
    } else if (name == "deleteEdge") {
      s.steps.emplace_back(DeleteEdge{edge_at(member(st, "edge", where), where + "/edge")});
    } else if (name == "contractEdge") {
      s.steps.emplace_back(ContractEdge{edge_at(member(st, "edge", where), where + "/edge")});
    } else {
      throw FormatError(where + "/op", "unknown op '" + name + "'");
    }
  }
  return s;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("byte " + std::to_string(e.byte), e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + " " + e.where(), e.what());
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace knotcert
