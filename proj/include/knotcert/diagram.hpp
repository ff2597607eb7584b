#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "knotcert/graph.hpp"

namespace knotcert {

using ArcId = std::string;
using CrossingId = std::string;

/// Transverse double point of the projection. `ends` lists the four
/// attached arcs counterclockwise; the strand through slots {0,2} is
/// strand 0 and the one through {1,3} is strand 1. `over` names the
/// strand that passes over.
struct CrossingNode {
  std::array<ArcId, 4> ends;
  int over = 0;

  friend bool operator==(const CrossingNode&, const CrossingNode&) = default;
};

/// One abstract edge drawn as arc, crossing, arc, ..., arc from `from` to `to`.
struct EdgePath {
  Label from;
  Label to;
  std::vector<std::string> path;

  Edge edge() const { return Edge::of(from, to); }
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Spatial-graph diagram on the sphere as a combinatorial map: vertex
/// nodes and crossing nodes with counterclockwise rotation lists of arc
/// ids, plus the route of every abstract edge through the crossings.
struct Diagram {
  std::map<Label, std::vector<ArcId>> vertices;
  std::map<CrossingId, CrossingNode> crossings;
  std::vector<EdgePath> edges;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// One end of an arc: rotation-list position `slot` at a vertex or crossing.
struct ArcEnd {
  bool at_crossing = false;
  std::string node;
  int slot = 0;

  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

/// Every arc-end occurrence in the rotation lists, grouped by arc id.
std::map<ArcId, std::vector<ArcEnd>> arc_ends(const Diagram& d);

/// A strand of an edge going through a crossing: enters at `entry`,
/// leaves at (entry + 2) mod 4.
struct Passage {
  CrossingId crossing;
  int entry = 0;

  int exit() const { return (entry + 2) % 4; }
  int strand() const { return entry % 2; }
  Passage reversed() const { return {crossing, exit()}; }
};

/// An edge path resolved into the crossing passages it makes, in path order.
struct EdgeTrace {
  Label from;
  Label to;
  std::vector<Passage> passages;

  Edge edge() const { return Edge::of(from, to); }
};

/// Throws InputError if some edge path cannot be followed.
std::vector<EdgeTrace> trace_edges(const Diagram& d);

enum class ViolationKind {
  Attachment,
  UnknownReference,
  SimpleGraph,
  PathEndpoints,
  StrandThrough,
  PathPartition,
  TwoStrand,
  Planarity,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  int euler_characteristic = 0;  // V - E + F of the map, when computed
  int map_components = 0;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Checks every structural invariant of a diagram and lists the failures.
/// An empty report means the diagram encodes a spatial graph: a spherical
/// map whose crossings are transverse double points of two strands.
ValidationReport validate(const Diagram& d);

/// Throws InputError listing the violations unless validate(d) is clean.
void require_valid(const Diagram& d);

/// Vertex nodes plus one edge per edge path. Throws InputError when the
/// edge paths do not form a simple graph.
Graph underlying_graph(const Diagram& d);

}  // namespace knotcert
