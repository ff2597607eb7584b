#include "knotcert/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "knotcert/errors.hpp"

namespace knotcert {

Cycle Cycle::canonical(std::vector<Label> seq) {
  if (seq.size() < 3) throw InputError("a cycle needs at least three vertices");
  auto smallest = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), smallest, seq.end());
  if (seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
  return Cycle{std::move(seq)};
}

std::vector<std::pair<Label, Label>> Cycle::steps() const {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return out;
}

bool Cycle::contains_edge(const Edge& e) const {
  for (const auto& [a, b] : steps())
    if (Edge::of(a, b) == e) return true;
  return false;
}

bool Cycle::shares_vertex(const Cycle& other) const {
  for (const auto& v : vertices)
    if (std::find(other.vertices.begin(), other.vertices.end(), v) != other.vertices.end()) return true;
  return false;
}

std::string Cycle::to_string() const {
  std::string s;
  for (const auto& v : vertices) s += (s.empty() ? "" : "-") + v;
  return s;
}

std::vector<Cycle> enumerate_cycles(const Graph& g) {
  std::vector<Label> labels(g.vertices().begin(), g.vertices().end());
  std::map<Label, int> pos;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) pos[labels[i]] = i;
  std::vector<std::vector<int>> adj(labels.size());
  for (const auto& e : g.edges()) {
    adj[pos[e.first]].push_back(pos[e.second]);
    adj[pos[e.second]].push_back(pos[e.first]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<bool> on_path(labels.size(), false);

  // Each cycle is found from its smallest vertex, using only larger vertices
  // along the way; the direction check keeps one of its two traversals.
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int w : adj[v]) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        std::vector<Label> seq;
        for (int p : path) seq.push_back(labels[p]);
        out.push_back(Cycle{std::move(seq)});
      }
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (int s = 0; s < static_cast<int>(labels.size()); ++s) {
    path = {s};
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Cycle, Cycle>> disjoint_cycle_pairs(const std::vector<Cycle>& cycles) {
  std::vector<std::set<Label>> sets;
  for (const auto& c : cycles) sets.emplace_back(c.vertices.begin(), c.vertices.end());
  std::vector<std::pair<Cycle, Cycle>> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      bool disjoint = std::none_of(sets[i].begin(), sets[i].end(), [&](const Label& v) { return sets[j].contains(v); });
      if (disjoint) out.emplace_back(cycles[i], cycles[j]);
    }
  }
  return out;
}

std::vector<std::pair<Cycle, Cycle>> disjoint_cycle_pairs(const Graph& g) {
  auto cycles = enumerate_cycles(g);
  std::sort(cycles.begin(), cycles.end());
  return disjoint_cycle_pairs(cycles);
}

}  // namespace knotcert
