#include "knotcert/symmetry.hpp"

#include <algorithm>
#include <set>

#include "knotcert/errors.hpp"

namespace knotcert {

std::string SymmetryResult::crossing_cycles() const {
  std::string out;
  std::set<CrossingId> done;
  for (const auto& [start, image] : crossing_map) {
    if (done.contains(start) || image == start) continue;
    out += "(";
    CrossingId x = start;
    bool first = true;
    do {
      out += (first ? "" : " ") + x;
      first = false;
      done.insert(x);
      x = crossing_map.at(x);
    } while (x != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

// True if `image` equals `target` up to cyclic rotation, read backwards when `reversed`.
bool cyclic_match(const std::vector<ArcId>& image, const std::vector<ArcId>& target, bool reversed) {
  if (image.size() != target.size()) return false;
  const std::size_t n = image.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::size_t j = reversed ? (shift + n - i) % n : (shift + i) % n;
      ok = image[i] == target[j];
    }
    if (ok) return true;
  }
  return false;
}

SymmetryResult fail(std::string why) { return {false, {}, std::move(why)}; }

}  // namespace

SymmetryResult check_symmetry(const Diagram& d, const VertexMap& vertex_map, bool reflect, bool flip_over_under) {
  std::set<Label> keys, values;
  for (const auto& [k, v] : vertex_map) {
    keys.insert(k);
    values.insert(v);
  }
  std::set<Label> nodes;
  for (const auto& [v, rot] : d.vertices) nodes.insert(v);
  if (keys != nodes || values != nodes) throw InputError("check_symmetry: vertex map is not a bijection on vertex nodes");

  std::map<Edge, const EdgePath*> by_edge;
  for (const auto& e : d.edges) by_edge[e.edge()] = &e;

  std::map<ArcId, ArcId> arc_map;
  std::map<CrossingId, CrossingId> crossing_map;
  auto bind = [](std::map<std::string, std::string>& m, const std::string& from, const std::string& to) {
    auto [it, fresh] = m.emplace(from, to);
    return fresh || it->second == to;
  };

  for (const auto& e : d.edges) {
    const Label& u = vertex_map.at(e.from);
    const Label& v = vertex_map.at(e.to);
    auto target = by_edge.find(Edge::of(u, v));
    if (target == by_edge.end()) return fail("edge " + e.edge().to_string() + " maps to non-edge " + u + "-" + v);
    std::vector<std::string> image_path = target->second->path;
    if (target->second->from != u) std::reverse(image_path.begin(), image_path.end());
    if (image_path.size() != e.path.size())
      return fail("edge " + e.edge().to_string() + " and its image cross different numbers of strands");
    for (std::size_t i = 0; i < e.path.size(); ++i) {
      auto& m = (i % 2 == 0) ? arc_map : crossing_map;
      if (!bind(m, e.path[i], image_path[i]))
        return fail("inconsistent image for '" + e.path[i] + "' along edge " + e.edge().to_string());
    }
  }
  // Injectivity.
  for (const auto* m : {&arc_map, &crossing_map}) {
    std::set<std::string> images;
    for (const auto& [k, v] : *m)
      if (!images.insert(v).second) return fail("two items map to '" + v + "'");
  }

  auto map_list = [&](const auto& list) {
    std::vector<ArcId> out;
    for (const auto& a : list) out.push_back(arc_map.at(a));
    return out;
  };

  for (const auto& [v, rot] : d.vertices) {
    const auto& target = d.vertices.at(vertex_map.at(v));
    if (!cyclic_match(map_list(rot), target, reflect))
      return fail("rotation at vertex " + v + " does not map to rotation at " + vertex_map.at(v));
  }

  for (const auto& [x, node] : d.crossings) {
    auto it = crossing_map.find(x);
    if (it == crossing_map.end()) return fail("crossing " + x + " lies on no edge path");
    const CrossingNode& target = d.crossings.at(it->second);
    auto image = map_list(node.ends);
    bool matched = false;
    // slot k of x goes to slot (+-k + shift) mod 4 of the image crossing
    for (int shift = 0; shift < 4 && !matched; ++shift) {
      bool ok = true;
      for (int k = 0; k < 4 && ok; ++k) {
        int j = reflect ? (shift - k + 8) % 4 : (shift + k) % 4;
        ok = image[k] == target.ends[j];
      }
      if (!ok) continue;
      int image_over = (node.over + shift) % 2;  // parity of the image of the over strand
      int expected = flip_over_under ? 1 - target.over : target.over;
      matched = image_over == expected;
    }
    if (!matched) return fail("crossing " + x + " does not map onto crossing " + it->second);
  }
  return {true, crossing_map, ""};
}

}  // namespace knotcert
