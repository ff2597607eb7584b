#pragma once

// Test-only helpers and oracles. Nothing here calls into the code paths it
// is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "knotcert/diagram_io.hpp"
#include "knotcert/graph.hpp"
#include "knotcert/pd.hpp"

namespace knotcert::test {

inline std::string data_file(const std::string& name) { return std::string(KNOTCERT_DATA_DIR) + "/" + name; }
inline std::string test_file(const std::string& name) { return std::string(KNOTCERT_TEST_DATA_DIR) + "/" + name; }

inline Diagram fixture(const std::string& name) { return read_diagram(data_file(name)); }

/// PD from KnotTheory-style X[i, j, k, l] codes: i is the incoming under
/// segment, labels run counterclockwise. The over strand's direction is
/// inferred from where its labels arrive and leave elsewhere.
/// `component_of` maps each label to its component (default: all 0).
inline ComponentPD pd_from_x(const std::vector<std::array<int, 4>>& xs, std::map<int, int> component_of = {},
                             int components = 1) {
  ComponentPD pd;
  pd.components = components;
  std::map<int, int> arrivals, departures;
  for (const auto& x : xs) {
    ++arrivals[x[0]];
    ++departures[x[2]];
  }
  std::vector<int> dir(xs.size(), 0);  // +1: j -> l, -1: l -> j
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < xs.size(); ++c) {
      if (dir[c] != 0) continue;
      int j = xs[c][1], l = xs[c][3];
      if (arrivals[j] > 0 || departures[l] > 0) dir[c] = -1;
      else if (departures[j] > 0 || arrivals[l] > 0) dir[c] = +1;
      if (dir[c] != 0) {
        ++(dir[c] > 0 ? arrivals[j] : departures[j]);
        ++(dir[c] > 0 ? departures[l] : arrivals[l]);
        changed = true;
      }
    }
  }
  for (std::size_t c = 0; c < xs.size(); ++c) {
    if (dir[c] == 0) dir[c] = (xs[c][3] == xs[c][1] + 1) ? +1 : -1;
    PdCrossing x;
    x.segments = xs[c];
    x.over = 1;
    x.forward = {true, dir[c] > 0};
    int cu = component_of.contains(xs[c][0]) ? component_of[xs[c][0]] : 0;
    int co = component_of.contains(xs[c][1]) ? component_of[xs[c][1]] : 0;
    x.component = {cu, co};
    x.source = std::to_string(c + 1);
    pd.crossings.push_back(x);
  }
  return pd;
}

// Standard tables (KnotTheory conventions); 3_1 there is left-handed.
inline ComponentPD left_trefoil() { return pd_from_x({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}); }
inline ComponentPD right_trefoil() { return mirror(left_trefoil()); }
inline ComponentPD figure_eight() { return pd_from_x({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}); }
inline ComponentPD hopf_link() {
  return pd_from_x({{4, 1, 3, 2}, {2, 3, 1, 4}}, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}, 2);
}
inline ComponentPD cinquefoil() {
  return pd_from_x({{2, 8, 3, 7}, {4, 10, 5, 9}, {6, 2, 7, 1}, {8, 4, 9, 3}, {10, 6, 1, 5}});
}

/// Round unknot with `n` curls; `positive[i]` picks the handedness of curl i.
inline ComponentPD kinked_unknot(const std::vector<bool>& positive) {
  ComponentPD pd;
  const int n = static_cast<int>(positive.size());
  for (int i = 0; i < n; ++i) {
    int in = 2 * i, loop = 2 * i + 1, out = (2 * i + 2) % (2 * n);
    PdCrossing x;
    x.segments = {in, loop, loop, out};
    x.forward = {true, true};
    x.over = positive[i] ? 0 : 1;
    x.source = std::to_string(i + 1);
    pd.crossings.push_back(x);
  }
  return pd;
}

/// Loops after smoothing every crossing per `use_a`, found by walking
/// slot-to-slot around each curve.
inline int count_loops(const ComponentPD& pd, std::uint64_t a_mask) {
  // Occurrence o = 4 * crossing + slot. Along a segment, an occurrence is
  // linked to the other occurrence of the same label; across a smoothed
  // crossing, to its partner slot.
  const int n = static_cast<int>(pd.crossings.size());
  std::vector<int> along(4 * n, -1), across(4 * n, -1);
  std::map<int, std::vector<int>> where;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) where[pd.crossings[c].segments[s]].push_back(4 * c + s);
  for (auto& [label, occ] : where) {
    along[occ[0]] = occ[1];
    along[occ[1]] = occ[0];
  }
  for (int c = 0; c < n; ++c) {
    bool a = (a_mask >> c) & 1u;
    // Over on slots 0,2: A joins 1-2, 3-0. Over on 1,3: A joins 0-1, 2-3.
    bool pair_12 = (pd.crossings[c].over == 0) == a;
    auto join = [&](int s, int t) {
      across[4 * c + s] = 4 * c + t;
      across[4 * c + t] = 4 * c + s;
    };
    if (pair_12) {
      join(1, 2);
      join(3, 0);
    } else {
      join(0, 1);
      join(2, 3);
    }
  }
  std::vector<bool> seen(4 * n, false);
  int loops = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int o = start;
    do {
      seen[o] = true;
      int next = along[o];
      seen[next] = true;
      o = across[next];
    } while (o != start);
  }
  std::set<int> touched;
  for (const auto& x : pd.crossings) touched.insert(x.component.begin(), x.component.end());
  return loops + (pd.components - static_cast<int>(touched.size()));
}

/// Bracket value at A = 1 straight from the definition: sum of (-2)^(loops-1).
inline std::int64_t bracket_at_one(const ComponentPD& pd) {
  std::int64_t sum = 0;
  const int n = static_cast<int>(pd.crossings.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int loops = count_loops(pd, mask);
    std::int64_t term = 1;
    for (int i = 1; i < loops; ++i) term *= -2;
    sum += term;
  }
  return sum;
}

/// Bracket coefficients {exponent: coefficient} by brute force over states,
/// expanding delta^(loops-1) with binomial coefficients.
inline std::map<int, std::int64_t> bracket_oracle(const ComponentPD& pd) {
  std::map<int, std::int64_t> out;
  const int n = static_cast<int>(pd.crossings.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int a = std::popcount(mask);
    int shift = a - (n - a);
    int m = count_loops(pd, mask) - 1;
    // (-A^2 - A^-2)^m = (-1)^m sum_k C(m,k) A^(2k - 2(m-k))
    std::int64_t binom = 1;
    for (int k = 0; k <= m; ++k) {
      std::int64_t c = (m % 2 == 0 ? 1 : -1) * binom;
      out[shift + 2 * k - 2 * (m - k)] += c;
      binom = binom * (m - k) / (k + 1);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Number of simple cycles by counting, for every vertex subset of size
/// >= 3, the Hamiltonian cycles of the induced subgraph (permutations with
/// the smallest vertex fixed first, each cycle seen twice).
inline std::size_t brute_force_cycle_count(const Graph& g) {
  std::vector<Label> labels(g.vertices().begin(), g.vertices().end());
  const int n = static_cast<int>(labels.size());
  std::size_t total = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    if (std::popcount(subset) < 3) continue;
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (subset & (1u << i)) members.push_back(i);
    std::size_t directed = 0;
    std::vector<int> rest(members.begin() + 1, members.end());
    do {
      bool ok = g.has_edge(labels[members[0]], labels[rest.front()]) &&
                g.has_edge(labels[rest.back()], labels[members[0]]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(labels[rest[i]], labels[rest[i + 1]]);
      if (ok) ++directed;
    } while (std::next_permutation(rest.begin(), rest.end()));
    total += directed / 2;
  }
  return total;
}

inline Graph make_graph(const std::string& vertices, const std::vector<std::string>& edges) {
  Graph g;
  for (char c : vertices) g.add_vertex(std::string(1, c));
  for (const auto& e : edges) g.add_edge(e.substr(0, 1), e.substr(1, 1));
  return g;
}

inline const std::vector<std::string>& g7_edge_names() {
  static const std::vector<std::string> names{"cd", "ce", "cf", "cg", "dg", "ef", "ch", "di", "ei", "fj", "gj",
                                              "dk", "fk", "el", "gl", "hi", "hj", "ij", "hk", "hl", "kl"};
  return names;
}

}  // namespace knotcert::test
