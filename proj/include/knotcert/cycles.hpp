#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotcert/graph.hpp"

namespace knotcert {

/// Simple cycle in canonical form: starts at its smallest label and runs
/// in the direction whose second vertex is smaller than its last.
struct Cycle {
  std::vector<Label> vertices;

  /// Canonicalizes an arbitrary rotation/direction of a vertex cycle.
  static Cycle canonical(std::vector<Label> cyclic_sequence);

  std::size_t length() const { return vertices.size(); }
  /// Consecutive pairs, oriented along the traversal (last wraps to first).
  std::vector<std::pair<Label, Label>> steps() const;
  bool contains_edge(const Edge& e) const;
  bool shares_vertex(const Cycle& other) const;
  std::string to_string() const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Every simple cycle exactly once, sorted by canonical vertex sequence.
std::vector<Cycle> enumerate_cycles(const Graph& g);

/// Unordered pairs of vertex-disjoint cycles; each pair is (earlier, later)
/// in cycle order and the list is sorted.
std::vector<std::pair<Cycle, Cycle>> disjoint_cycle_pairs(const Graph& g);
std::vector<std::pair<Cycle, Cycle>> disjoint_cycle_pairs(const std::vector<Cycle>& cycles);

}  // namespace knotcert
