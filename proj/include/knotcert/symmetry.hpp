#pragma once

#include <map>
#include <string>

#include "knotcert/diagram.hpp"
#include "knotcert/isomorphism.hpp"

namespace knotcert {

struct SymmetryResult {
  bool holds = false;
  std::map<CrossingId, CrossingId> crossing_map;  // filled when holds
  std::string reason;                             // why it fails otherwise

  /// Cycle notation of the induced crossing permutation, fixed points omitted.
  std::string crossing_cycles() const;
};

/// Checks whether `vertex_map` extends to a symmetry of the diagram.
///
/// Each edge path must map onto the path of the image edge, which fixes
/// the image of every arc and crossing. The symmetry holds when rotation
/// lists go to rotation lists (reversed if `reflect`) and over strands go
/// to over strands (to under strands if `flip_over_under`). A rotation
/// about an axis in the projection plane has reflect = flip = true.
///
/// Throws InputError unless vertex_map is a bijection on the vertex nodes.
SymmetryResult check_symmetry(const Diagram& d, const VertexMap& vertex_map, bool reflect, bool flip_over_under);

}  // namespace knotcert
