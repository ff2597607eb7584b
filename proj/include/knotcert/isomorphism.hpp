#pragma once

#include <map>
#include <optional>

#include "knotcert/graph.hpp"

namespace knotcert {

using VertexMap = std::map<Label, Label>;

/// Color refinement (starting from degrees) followed by backtracking.
/// Returns the first witness in search order: g1 vertices are placed in
/// (smallest color class, label) order and g2 candidates are tried in
/// label order, so the answer is deterministic. Intended for graphs of
/// up to about 20 vertices.
std::optional<VertexMap> is_isomorphic(const Graph& g1, const Graph& g2);

/// True iff `map` sends edges of g1 exactly onto edges of g2.
bool preserves_edges(const Graph& g1, const Graph& g2, const VertexMap& map);

/// Throws InputError unless `map` is a bijection on V(g).
bool verify_automorphism(const Graph& g, const VertexMap& map);

/// Parses cycle notation such as "(c h)(e i)"; unlisted labels are fixed
/// once completed against a vertex set with `complete_on`.
VertexMap parse_cycle_notation(const std::string& text);
VertexMap complete_on(const std::set<Label>& vertices, VertexMap partial);

}  // namespace knotcert
