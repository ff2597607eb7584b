#include "knotcert/pd.hpp"

#include <map>
#include <set>

#include "knotcert/errors.hpp"

namespace knotcert {

std::vector<std::string> ComponentPD::sources() const {
  std::vector<std::string> out;
  for (const auto& c : crossings) out.push_back(c.source);
  return out;
}

void check_pd(const ComponentPD& pd) {
  if (pd.components < 1) throw InputError("pd: needs at least one component");
  // Each segment: exactly one slot where it arrives and one where it leaves.
  std::map<int, std::pair<int, int>> use;  // segment -> (arrivals, departures)
  std::map<int, int> seg_component;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& c = pd.crossings[i];
    if (c.over != 0 && c.over != 1) throw InputError("pd: crossing " + std::to_string(i) + " has bad over flag");
    for (int slot = 0; slot < 4; ++slot) {
      int strand = slot % 2;
      if (c.component[strand] < 0 || c.component[strand] >= pd.components)
        throw InputError("pd: crossing " + std::to_string(i) + " names an unknown component");
      bool arriving = (slot < 2) == c.forward[strand];
      int seg = c.segments[slot];
      auto& [in, out] = use[seg];
      (arriving ? in : out) += 1;
      auto [it, fresh] = seg_component.emplace(seg, c.component[strand]);
      if (!fresh && it->second != c.component[strand])
        throw InputError("pd: segment " + std::to_string(seg) + " lies on two components");
    }
  }
  for (const auto& [seg, io] : use)
    if (io.first != 1 || io.second != 1)
      throw InputError("pd: segment " + std::to_string(seg) + " must arrive once and leave once");
}

ComponentPD mirror(const ComponentPD& pd) {
  ComponentPD out = pd;
  for (auto& c : out.crossings) c.over = 1 - c.over;
  return out;
}

ComponentPD reverse_component(const ComponentPD& pd, int component) {
  ComponentPD out = pd;
  for (auto& c : out.crossings)
    for (int s = 0; s < 2; ++s)
      if (c.component[s] == component) c.forward[s] = !c.forward[s];
  return out;
}

ComponentPD extract_component_pd(const Diagram& d, const std::vector<Cycle>& cycles) {
  return extract_component_pd(d, trace_edges(d), cycles);
}

ComponentPD extract_component_pd(const Diagram& d, const std::vector<EdgeTrace>& traces,
                                 const std::vector<Cycle>& cycles) {
  if (cycles.empty() || cycles.size() > 2) throw InputError("extract: select one or two cycles");
  if (cycles.size() == 2 && cycles[0].shares_vertex(cycles[1]))
    throw InputError("extract: cycles " + cycles[0].to_string() + " and " + cycles[1].to_string() +
                     " share a vertex");

  std::map<Edge, const EdgeTrace*> by_edge;
  for (const auto& t : traces) by_edge[t.edge()] = &t;

  std::set<Edge> selected;
  for (const auto& c : cycles) {
    for (const auto& [a, b] : c.steps()) {
      Edge e = Edge::of(a, b);
      if (!by_edge.contains(e)) throw InputError("extract: " + e.to_string() + " is not an edge of the diagram");
      selected.insert(e);
    }
  }

  // A crossing survives iff both of its passages are on selected edges.
  std::map<CrossingId, int> selected_passages;
  for (const auto& e : selected)
    for (const auto& p : by_edge[e]->passages) ++selected_passages[p.crossing];

  std::map<CrossingId, PdCrossing> kept;
  int next_segment = 0;
  ComponentPD pd;
  pd.components = static_cast<int>(cycles.size());
  for (int comp = 0; comp < pd.components; ++comp) {
    std::vector<Passage> along;
    for (const auto& [a, b] : cycles[comp].steps()) {
      const EdgeTrace& t = *by_edge[Edge::of(a, b)];
      if (t.from == a) {
        for (const auto& p : t.passages) along.push_back(p);
      } else {
        for (auto it = t.passages.rbegin(); it != t.passages.rend(); ++it) along.push_back(it->reversed());
      }
    }
    std::erase_if(along, [&](const Passage& p) { return selected_passages[p.crossing] != 2; });

    int m = static_cast<int>(along.size());
    for (int i = 0; i < m; ++i) {
      const Passage& p = along[i];
      auto& x = kept[p.crossing];
      x.source = p.crossing;
      x.over = d.crossings.at(p.crossing).over;
      int incoming = next_segment + (i + m - 1) % m;
      int outgoing = next_segment + i;
      x.segments[p.entry] = incoming;
      x.segments[p.exit()] = outgoing;
      x.forward[p.strand()] = p.entry < 2;
      x.component[p.strand()] = comp;
    }
    next_segment += m;
  }
  for (auto& [id, x] : kept) pd.crossings.push_back(std::move(x));
  return pd;
}

}  // namespace knotcert
