#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotcert/cycles.hpp"
#include "knotcert/diagram.hpp"

namespace knotcert {

/// A crossing of an oriented knot or link diagram.
///
/// Segments are listed counterclockwise. Strand 0 runs through slots 0
/// and 2, strand 1 through slots 1 and 3; `forward[s]` means strand s
/// enters at slot s and leaves at slot s + 2.
struct PdCrossing {
  std::array<int, 4> segments{};
  int over = 0;
  std::array<bool, 2> forward{true, true};
  std::array<int, 2> component{0, 0};
  std::string source;  // originating diagram crossing, if any

  friend bool operator==(const PdCrossing&, const PdCrossing&) = default;
};

/// Planar-diagram code of one or two closed curves. Every segment label
/// occurs in exactly two crossing slots. Components that meet no crossing
/// are allowed and contribute a free loop each.
struct ComponentPD {
  int components = 1;
  std::vector<PdCrossing> crossings;

  std::size_t crossing_count() const { return crossings.size(); }
  std::vector<std::string> sources() const;

  friend bool operator==(const ComponentPD&, const ComponentPD&) = default;
};

/// Throws InputError when segment labels do not pair up, an orientation is
/// inconsistent, or a component index is out of range.
void check_pd(const ComponentPD& pd);

/// Over/under swapped at every crossing.
ComponentPD mirror(const ComponentPD& pd);

/// Orientation of one component reversed.
ComponentPD reverse_component(const ComponentPD& pd, int component);

/// Knot (one cycle) or link (two vertex-disjoint cycles) carried by the
/// selected cycles of `d`. A crossing is kept iff both of its strands lie
/// on selected edges; every other crossing is dropped along with the
/// unselected edge. Orientation follows each cycle's traversal order.
ComponentPD extract_component_pd(const Diagram& d, const std::vector<Cycle>& cycles);

/// Same, reusing traces from trace_edges(d).
ComponentPD extract_component_pd(const Diagram& d, const std::vector<EdgeTrace>& traces,
                                 const std::vector<Cycle>& cycles);

}  // namespace knotcert
