#include "knotcert/diagram.hpp"

#include <numeric>
#include <optional>
#include <set>

#include "knotcert/errors.hpp"

namespace knotcert {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Attachment: return "attachment";
    case ViolationKind::UnknownReference: return "unknown-reference";
    case ViolationKind::SimpleGraph: return "simple-graph";
    case ViolationKind::PathEndpoints: return "path-endpoints";
    case ViolationKind::StrandThrough: return "strand-through";
    case ViolationKind::PathPartition: return "path-partition";
    case ViolationKind::TwoStrand: return "two-strand";
    case ViolationKind::Planarity: return "planarity";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const {
  for (const auto& v : violations)
    if (v.kind == kind) return true;
  return false;
}

std::map<ArcId, std::vector<ArcEnd>> arc_ends(const Diagram& d) {
  std::map<ArcId, std::vector<ArcEnd>> out;
  for (const auto& [v, rot] : d.vertices)
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) out[rot[i]].push_back({false, v, i});
  for (const auto& [x, node] : d.crossings)
    for (int i = 0; i < 4; ++i) out[node.ends[i]].push_back({true, x, i});
  return out;
}

namespace {

struct TraceFailure {
  ViolationKind kind;
  std::string detail;
};

// Follows one edge path. Requires every arc to have exactly two ends.
std::optional<TraceFailure> follow(const Diagram& d, const std::map<ArcId, std::vector<ArcEnd>>& ends,
                                   const EdgePath& e, EdgeTrace& out, std::vector<ArcId>& arcs_used) {
  std::string name = "edge " + e.from + "-" + e.to;
  out = EdgeTrace{e.from, e.to, {}};
  if (e.path.empty() || e.path.size() % 2 == 0)
    return TraceFailure{ViolationKind::PathEndpoints, name + ": path must alternate arc, crossing, ..., arc"};
  if (!d.vertices.contains(e.from) || !d.vertices.contains(e.to))
    return TraceFailure{ViolationKind::UnknownReference, name + ": endpoint is not a vertex node"};

  auto lookup = [&](const ArcId& a) -> const std::vector<ArcEnd>* {
    auto it = ends.find(a);
    return it == ends.end() ? nullptr : &it->second;
  };

  // Departure end of the first arc.
  const auto* first = lookup(e.path.front());
  if (first == nullptr) return TraceFailure{ViolationKind::UnknownReference, name + ": unknown arc '" + e.path.front() + "'"};
  std::optional<ArcEnd> depart;
  for (const auto& end : *first)
    if (!end.at_crossing && end.node == e.from) depart = end;
  if (!depart) return TraceFailure{ViolationKind::PathEndpoints, name + ": first arc is not attached to " + e.from};

  for (std::size_t i = 0; i < e.path.size(); i += 2) {
    const ArcId& arc = e.path[i];
    const auto* attach = lookup(arc);
    if (attach == nullptr) return TraceFailure{ViolationKind::UnknownReference, name + ": unknown arc '" + arc + "'"};
    auto it = std::find(attach->begin(), attach->end(), *depart);
    if (it == attach->end()) {
      return TraceFailure{ViolationKind::StrandThrough,
                          name + ": arc '" + arc + "' does not leave " + depart->node + " at slot " +
                              std::to_string(depart->slot)};
    }
    ArcEnd arrive = (*attach)[it == attach->begin() ? 1 : 0];
    arcs_used.push_back(arc);
    bool last = i + 1 == e.path.size();
    if (last) {
      if (arrive.at_crossing || arrive.node != e.to)
        return TraceFailure{ViolationKind::PathEndpoints, name + ": last arc '" + arc + "' does not reach " + e.to};
      break;
    }
    const CrossingId& x = e.path[i + 1];
    if (!d.crossings.contains(x)) return TraceFailure{ViolationKind::UnknownReference, name + ": unknown crossing '" + x + "'"};
    if (!arrive.at_crossing || arrive.node != x)
      return TraceFailure{ViolationKind::StrandThrough, name + ": arc '" + arc + "' does not reach crossing " + x};
    Passage p{x, arrive.slot};
    out.passages.push_back(p);
    depart = ArcEnd{true, x, p.exit()};
  }
  return std::nullopt;
}

}  // namespace

std::vector<EdgeTrace> trace_edges(const Diagram& d) {
  auto ends = arc_ends(d);
  for (const auto& [arc, list] : ends)
    if (list.size() != 2) throw InputError("arc '" + arc + "' has " + std::to_string(list.size()) + " attachments");
  std::vector<EdgeTrace> out;
  std::vector<ArcId> used;
  for (const auto& e : d.edges) {
    EdgeTrace t;
    if (auto fail = follow(d, ends, e, t, used)) throw InputError(fail->detail);
    out.push_back(std::move(t));
  }
  return out;
}

ValidationReport validate(const Diagram& d) {
  ValidationReport report;
  auto add = [&](ViolationKind k, std::string s) { report.violations.push_back({k, std::move(s)}); };

  auto ends = arc_ends(d);
  bool attachment_ok = true;
  for (const auto& [arc, list] : ends) {
    if (list.size() != 2) {
      attachment_ok = false;
      add(ViolationKind::Attachment, "arc '" + arc + "' appears " + std::to_string(list.size()) + " times");
    }
  }
  for (const auto& [x, node] : d.crossings)
    if (node.over != 0 && node.over != 1) add(ViolationKind::UnknownReference, "crossing " + x + ": over must be 0 or 1");

  // Simple underlying graph.
  std::set<Edge> seen_edges;
  for (const auto& e : d.edges) {
    if (e.from == e.to) {
      add(ViolationKind::SimpleGraph, "edge path from " + e.from + " to itself");
      continue;
    }
    if (!seen_edges.insert(e.edge()).second) add(ViolationKind::SimpleGraph, "duplicate edge " + e.edge().to_string());
  }

  if (!attachment_ok) return report;  // tracing and face counting need two ends per arc

  // Paths, partition, two-strand rule.
  std::map<ArcId, int> arc_use;
  std::map<CrossingId, std::vector<Passage>> passages;
  for (const auto& e : d.edges) {
    EdgeTrace t;
    std::vector<ArcId> used;
    if (auto fail = follow(d, ends, e, t, used)) add(fail->kind, fail->detail);
    for (const auto& a : used) ++arc_use[a];
    for (const auto& p : t.passages) passages[p.crossing].push_back(p);
  }
  for (const auto& [arc, list] : ends) {
    int n = arc_use.contains(arc) ? arc_use[arc] : 0;
    if (n != 1) add(ViolationKind::PathPartition, "arc '" + arc + "' lies on " + std::to_string(n) + " edge paths");
  }
  for (const auto& [x, node] : d.crossings) {
    const auto& ps = passages[x];
    if (ps.size() != 2) {
      add(ViolationKind::TwoStrand, "crossing " + x + " is passed " + std::to_string(ps.size()) + " times");
    } else if (ps[0].strand() == ps[1].strand()) {
      add(ViolationKind::TwoStrand, "crossing " + x + ": both passages use the same strand");
    }
  }

  // Face tracing on the rotation system; darts are (node, slot) pairs.
  std::vector<std::pair<bool, std::string>> nodes;
  std::map<std::pair<bool, std::string>, int> node_index;
  std::vector<int> degree;
  for (const auto& [v, rot] : d.vertices) {
    node_index[{false, v}] = static_cast<int>(nodes.size());
    nodes.push_back({false, v});
    degree.push_back(static_cast<int>(rot.size()));
  }
  for (const auto& [x, node] : d.crossings) {
    node_index[{true, x}] = static_cast<int>(nodes.size());
    nodes.push_back({true, x});
    degree.push_back(4);
  }
  std::vector<int> offset(nodes.size() + 1, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) offset[i + 1] = offset[i] + degree[i];
  int darts = offset.back();
  std::vector<int> twin(darts, -1);
  std::vector<int> dart_node(darts);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int s = 0; s < degree[i]; ++s) dart_node[offset[i] + s] = static_cast<int>(i);
  for (const auto& [arc, list] : ends) {
    int a = offset[node_index[{list[0].at_crossing, list[0].node}]] + list[0].slot;
    int b = offset[node_index[{list[1].at_crossing, list[1].node}]] + list[1].slot;
    twin[a] = b;
    twin[b] = a;
  }

  // Components over the arcs.
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int dt = 0; dt < darts; ++dt) parent[find(dart_node[dt])] = find(dart_node[twin[dt]]);
  int components = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;

  int faces = 0;
  std::vector<bool> visited(darts, false);
  for (int start = 0; start < darts; ++start) {
    if (visited[start]) continue;
    ++faces;
    int dt = start;
    while (!visited[dt]) {
      visited[dt] = true;
      int arrive = twin[dt];
      int n = dart_node[arrive];
      int slot = arrive - offset[n];
      dt = offset[n] + (slot + 1) % degree[n];
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (degree[i] == 0) ++faces;  // an isolated node sits in a single face

  int arcs = static_cast<int>(ends.size());
  report.euler_characteristic = static_cast<int>(nodes.size()) - arcs + faces;
  report.map_components = components;
  if (report.euler_characteristic != 2 * components) {
    add(ViolationKind::Planarity, "V - E + F = " + std::to_string(report.euler_characteristic) + " over " +
                                      std::to_string(components) + " component(s); a spherical map needs " +
                                      std::to_string(2 * components));
  }
  return report;
}

void require_valid(const Diagram& d) {
  auto report = validate(d);
  if (report.ok()) return;
  std::string msg = "diagram is invalid:";
  for (const auto& v : report.violations) msg += std::string("\n  ") + to_string(v.kind) + ": " + v.detail;
  throw InputError(msg);
}

Graph underlying_graph(const Diagram& d) {
  Graph g;
  for (const auto& [v, rot] : d.vertices) g.add_vertex(v);
  for (const auto& e : d.edges) {
    if (e.from == e.to) throw InputError("edge path from " + e.from + " to itself");
    if (!g.has_vertex(e.from) || !g.has_vertex(e.to))
      throw InputError("edge " + e.from + "-" + e.to + " has an endpoint that is not a vertex node");
    if (g.has_edge(e.from, e.to)) throw InputError("duplicate edge " + e.edge().to_string());
    g.add_edge(e.from, e.to);
  }
  return g;
}

}  // namespace knotcert
