#include "knotcert/diagram_io.hpp"

#include <algorithm>
#include <set>

#include "knotcert/errors.hpp"
#include "knotcert/graph_io.hpp"

namespace knotcert {

using nlohmann::json;

namespace {

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string() || j.get<std::string>().empty()) throw FormatError(where, "expected a non-empty string");
  return j.get<std::string>();
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where.empty() ? "/" : where, "expected an object");
  if (!j.contains(key)) throw FormatError(where.empty() ? "/" : where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Diagram diagram_from_json(const json& j) {
  Diagram d;
  const json& vs = member(j, "vertices", "");
  const json& xs = member(j, "crossings", "");
  const json& es = member(j, "edges", "");
  if (!vs.is_object()) throw FormatError("/vertices", "expected an object");
  if (!xs.is_object()) throw FormatError("/crossings", "expected an object");
  if (!es.is_array()) throw FormatError("/edges", "expected an array");

  std::map<ArcId, std::vector<std::string>> seen;  // arc -> locations
  for (auto& [v, rot] : vs.items()) {
    std::string where = "/vertices/" + v;
    if (!rot.is_array()) throw FormatError(where, "expected an array of arc ids");
    auto& list = d.vertices[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      auto at = where + "/" + std::to_string(i);
      list.push_back(string_at(rot[i], at));
      seen[list.back()].push_back(at);
    }
  }
  for (auto& [x, node] : xs.items()) {
    std::string where = "/crossings/" + x;
    const json& ends = member(node, "ends", where);
    if (!ends.is_array() || ends.size() != 4) throw FormatError(where + "/ends", "expected exactly four arc ids");
    CrossingNode c;
    for (std::size_t i = 0; i < 4; ++i) {
      auto at = where + "/ends/" + std::to_string(i);
      c.ends[i] = string_at(ends[i], at);
      seen[c.ends[i]].push_back(at);
    }
    const json& over = member(node, "over", where);
    if (!over.is_number_integer() || (over.get<int>() != 0 && over.get<int>() != 1))
      throw FormatError(where + "/over", "expected 0 or 1");
    c.over = over.get<int>();
    d.crossings.emplace(x, c);
  }
  for (const auto& [arc, where] : seen) {
    if (where.size() != 2) {
      std::string all;
      for (const auto& w : where) all += (all.empty() ? "" : ", ") + w;
      throw AttachmentError(where.front(), "arc '" + arc + "' is attached " + std::to_string(where.size()) +
                                               " times (" + all + "); expected 2");
    }
  }

  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string where = "/edges/" + std::to_string(i);
    const json& ends = member(es[i], "ends", where);
    if (!ends.is_array() || ends.size() != 2) throw FormatError(where + "/ends", "expected two vertex labels");
    EdgePath e{string_at(ends[0], where + "/ends/0"), string_at(ends[1], where + "/ends/1"), {}};
    for (const auto& [k, label] : {std::pair{0, e.from}, std::pair{1, e.to}})
      if (!d.vertices.contains(label))
        throw FormatError(where + "/ends/" + std::to_string(k), "unknown vertex '" + label + "'");
    const json& path = member(es[i], "path", where);
    if (!path.is_array() || path.size() % 2 == 0)
      throw FormatError(where + "/path", "expected an odd-length list: arc, crossing, ..., arc");
    for (std::size_t k = 0; k < path.size(); ++k) {
      auto at = where + "/path/" + std::to_string(k);
      auto token = string_at(path[k], at);
      if (k % 2 == 0 && !seen.contains(token)) throw FormatError(at, "unknown arc '" + token + "'");
      if (k % 2 == 1 && !d.crossings.contains(token)) throw FormatError(at, "unknown crossing '" + token + "'");
      e.path.push_back(std::move(token));
    }
    d.edges.push_back(std::move(e));
  }
  return d;
}

Diagram parse_diagram(const std::string& text) { return diagram_from_json(parse_json_text(text)); }

Diagram read_diagram(const std::filesystem::path& path) {
  auto j = read_json_file(path);
  try {
    return diagram_from_json(j);
  } catch (const AttachmentError& e) {
    throw AttachmentError(path.string() + " " + e.where(), e.what());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + " " + e.where(), e.what());
  }
}

json diagram_to_json(const Diagram& d) {
  json vs = json::object();
  for (const auto& [v, rot] : d.vertices) vs[v] = rot;
  json xs = json::object();
  for (const auto& [x, c] : d.crossings) xs[x] = json{{"ends", c.ends}, {"over", c.over}};
  std::vector<const EdgePath*> order;
  for (const auto& e : d.edges) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(), [](const EdgePath* a, const EdgePath* b) {
    return std::minmax(a->from, a->to) < std::minmax(b->from, b->to);
  });
  json es = json::array();
  for (const auto* e : order) es.push_back(json{{"ends", {e->from, e->to}}, {"path", e->path}});
  return json{{"vertices", vs}, {"crossings", xs}, {"edges", es}};
}

std::string serialize_diagram(const Diagram& d) { return dump_json(diagram_to_json(d)); }

}  // namespace knotcert
