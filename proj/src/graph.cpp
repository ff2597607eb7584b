#include "knotcert/graph.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"

namespace knotcert {

const char* to_string(MoveErrorKind kind) {
  switch (kind) {
    case MoveErrorKind::TriangleAbsent: return "TriangleAbsent";
    case MoveErrorKind::LabelClash: return "LabelClash";
    case MoveErrorKind::DegreeNotThree: return "DegreeNotThree";
    case MoveErrorKind::EdgeAbsent: return "EdgeAbsent";
    case MoveErrorKind::VertexAbsent: return "VertexAbsent";
  }
  return "?";
}

Edge Edge::of(const Label& a, const Label& b) {
  if (a == b) throw InputError("loop edge at '" + a + "'");
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::set<Label> vertices, std::set<Edge> edges) : vertices_(std::move(vertices)) {
  for (const auto& e : edges) add_edge(e.first, e.second);
}

bool Graph::has_edge(const Label& a, const Label& b) const {
  if (a == b) return false;
  return edges_.contains(Edge::of(a, b));
}

std::set<Label> Graph::neighbors(const Label& v) const {
  std::set<Label> out;
  for (const auto& e : edges_)
    if (e.has(v)) out.insert(e.other(v));
  return out;
}

std::size_t Graph::degree(const Label& v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.has(v); }));
}

bool Graph::is_connected() const {
  if (vertices_.empty()) return true;
  std::set<Label> seen{*vertices_.begin()};
  std::vector<Label> stack{*vertices_.begin()};
  while (!stack.empty()) {
    Label v = stack.back();
    stack.pop_back();
    for (const auto& w : neighbors(v))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == vertices_.size();
}

void Graph::add_vertex(const Label& v) {
  if (v.empty()) throw InputError("empty vertex label");
  vertices_.insert(v);
}

void Graph::add_edge(const Label& a, const Label& b) {
  Edge e = Edge::of(a, b);
  if (!has_vertex(a)) throw MoveError(MoveErrorKind::VertexAbsent, "edge endpoint '" + a + "' is not a vertex");
  if (!has_vertex(b)) throw MoveError(MoveErrorKind::VertexAbsent, "edge endpoint '" + b + "' is not a vertex");
  edges_.insert(std::move(e));
}

void Graph::remove_edge(const Label& a, const Label& b) {
  if (a == b || edges_.erase(Edge::of(a, b)) == 0)
    throw MoveError(MoveErrorKind::EdgeAbsent, a + "-" + b + " is not an edge");
}

void Graph::remove_vertex(const Label& v) {
  if (vertices_.erase(v) == 0) throw MoveError(MoveErrorKind::VertexAbsent, "'" + v + "' is not a vertex");
  std::erase_if(edges_, [&](const Edge& e) { return e.has(v); });
}

Graph complete_graph(const std::vector<Label>& labels) {
  if (labels.empty()) throw InputError("complete_graph: need at least one label");
  Graph g;
  for (const auto& l : labels) {
    if (g.has_vertex(l)) throw InputError("complete_graph: duplicate label '" + l + "'");
    g.add_vertex(l);
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) g.add_edge(labels[i], labels[j]);
  return g;
}

Graph delta_y(const Graph& g, const std::array<Label, 3>& triangle, const Label& center) {
  const auto& [x, y, z] = triangle;
  for (const auto& [a, b] : {std::pair{x, y}, std::pair{x, z}, std::pair{y, z}}) {
    if (!g.has_edge(a, b))
      throw MoveError(MoveErrorKind::TriangleAbsent, a + "-" + b + " is not an edge");
  }
  if (g.has_vertex(center)) throw MoveError(MoveErrorKind::LabelClash, "'" + center + "' is already a vertex");

  Graph out = g;
  out.remove_edge(x, y);
  out.remove_edge(x, z);
  out.remove_edge(y, z);
  out.add_vertex(center);
  for (const auto& corner : triangle) out.add_edge(corner, center);
  return out;
}

Graph y_delta(const Graph& g, const Label& center) {
  if (!g.has_vertex(center)) throw MoveError(MoveErrorKind::VertexAbsent, "'" + center + "' is not a vertex");
  auto nbrs = g.neighbors(center);
  if (nbrs.size() != 3)
    throw MoveError(MoveErrorKind::DegreeNotThree,
                    "'" + center + "' has degree " + std::to_string(nbrs.size()));
  Graph out = g;
  out.remove_vertex(center);
  std::vector<Label> n(nbrs.begin(), nbrs.end());
  out.add_edge(n[0], n[1]);
  out.add_edge(n[0], n[2]);
  out.add_edge(n[1], n[2]);
  return out;
}

Graph delete_edge(const Graph& g, const Edge& e) {
  Graph out = g;
  out.remove_edge(e.first, e.second);
  return out;
}

Graph contract_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.first, e.second))
    throw MoveError(MoveErrorKind::EdgeAbsent, e.to_string() + " is not an edge");
  const Label& keep = e.first;  // first < second
  const Label& gone = e.second;
  Graph out = g;
  auto moved = g.neighbors(gone);
  out.remove_vertex(gone);
  for (const auto& w : moved)
    if (w != keep) out.add_edge(keep, w);
  return out;
}

Graph apply_move(const Graph& g, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> Graph {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, DeltaY>) return delta_y(g, mv.triangle, mv.center);
        if constexpr (std::is_same_v<T, YDelta>) return y_delta(g, mv.center);
        if constexpr (std::is_same_v<T, DeleteEdge>) return delete_edge(g, mv.edge);
        if constexpr (std::is_same_v<T, ContractEdge>) return contract_edge(g, mv.edge);
      },
      m);
}

ScriptResult apply_script(const Graph& g, const MoveScript& script) {
  ScriptResult result{g, {}};
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    try {
      result.final_graph = apply_move(result.final_graph, script.steps[i]);
    } catch (const MoveError& e) {
      throw ScriptError(i, e);
    }
    result.intermediates.push_back(result.final_graph);
  }
  return result;
}

Graph k7() { return complete_graph({"a", "b", "c", "d", "e", "f", "g"}); }

MoveScript g7_script() {
  return MoveScript{{
      DeltaY{{"a", "b", "c"}, "h"},
      DeltaY{{"a", "d", "e"}, "i"},
      DeltaY{{"a", "f", "g"}, "j"},
      DeltaY{{"b", "d", "f"}, "k"},
      DeltaY{{"b", "e", "g"}, "l"},
      YDelta{"a"},  // neighbors h, i, j
      YDelta{"b"},  // neighbors h, k, l
  }};
}

Graph construct_g7() { return apply_script(k7(), g7_script()).final_graph; }

}  // namespace knotcert
