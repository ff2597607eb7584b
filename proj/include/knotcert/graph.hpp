#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace knotcert {

using Label = std::string;

/// Unordered vertex pair, stored with first < second.
struct Edge {
  Label first;
  Label second;

  /// Normalizes the order; throws InputError for a loop.
  static Edge of(const Label& a, const Label& b);

  bool has(const Label& v) const { return first == v || second == v; }
  const Label& other(const Label& v) const { return first == v ? second : first; }
  std::string to_string() const { return first + "-" + second; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple labeled graph. Value type; every mutator keeps it simple.
class Graph {
 public:
  Graph() = default;
  Graph(std::set<Label> vertices, std::set<Edge> edges);

  const std::set<Label>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const Label& v) const { return vertices_.contains(v); }
  bool has_edge(const Label& a, const Label& b) const;
  std::set<Label> neighbors(const Label& v) const;
  std::size_t degree(const Label& v) const;
  bool is_connected() const;

  void add_vertex(const Label& v);
  void add_edge(const Label& a, const Label& b);
  void remove_edge(const Label& a, const Label& b);
  void remove_vertex(const Label& v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::set<Label> vertices_;
  std::set<Edge> edges_;
};

Graph complete_graph(const std::vector<Label>& labels);

// Moves ---------------------------------------------------------------------

struct DeltaY {
  std::array<Label, 3> triangle;
  Label center;
};
struct YDelta {
  Label center;
};
struct DeleteEdge {
  Edge edge;
};
struct ContractEdge {
  Edge edge;
};

using Move = std::variant<DeltaY, YDelta, DeleteEdge, ContractEdge>;

struct MoveScript {
  std::vector<Move> steps;
};

/// Triangle-to-star: drop the three triangle edges, join a fresh center to
/// the three corners.
Graph delta_y(const Graph& g, const std::array<Label, 3>& triangle, const Label& center);

/// Star-to-triangle on a degree-3 center. A neighbor pair that is already
/// adjacent keeps its single edge (the parallel copy is discarded).
Graph y_delta(const Graph& g, const Label& center);

Graph delete_edge(const Graph& g, const Edge& e);

/// Merges the endpoints into the lexicographically smaller label. Loops
/// and parallel edges created by the merge are dropped.
Graph contract_edge(const Graph& g, const Edge& e);

Graph apply_move(const Graph& g, const Move& m);

struct ScriptResult {
  Graph final_graph;
  std::vector<Graph> intermediates;  // one per step, last equals final_graph
};

/// Throws ScriptError carrying the index of the first failing step.
ScriptResult apply_script(const Graph& g, const MoveScript& script);

/// K7 on a..g.
Graph k7();

/// Five triangle-to-star moves then two star-to-triangle moves taking K7 to G7.
MoveScript g7_script();

Graph construct_g7();

}  // namespace knotcert
