#include "knotcert/isomorphism.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "knotcert/errors.hpp"

namespace knotcert {

namespace {

struct Indexed {
  std::vector<Label> labels;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<int>> nbrs;
};

Indexed index(const Graph& g) {
  Indexed ix;
  ix.labels.assign(g.vertices().begin(), g.vertices().end());
  std::map<Label, int> pos;
  for (int i = 0; i < static_cast<int>(ix.labels.size()); ++i) pos[ix.labels[i]] = i;
  auto n = ix.labels.size();
  ix.adj.assign(n, std::vector<bool>(n, false));
  ix.nbrs.assign(n, {});
  for (const auto& e : g.edges()) {
    int a = pos[e.first], b = pos[e.second];
    ix.adj[a][b] = ix.adj[b][a] = true;
    ix.nbrs[a].push_back(b);
    ix.nbrs[b].push_back(a);
  }
  return ix;
}

// Joint 1-dimensional Weisfeiler-Leman refinement so colors are comparable
// across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const Indexed& a, const Indexed& b) {
  std::vector<int> ca, cb;
  for (const auto& n : a.nbrs) ca.push_back(static_cast<int>(n.size()));
  for (const auto& n : b.nbrs) cb.push_back(static_cast<int>(n.size()));
  std::size_t classes = 0;
  for (;;) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const Indexed& g, const std::vector<int>& c, int v) {
      Signature s{c[v], {}};
      for (int w : g.nbrs[v]) s.second.push_back(c[w]);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Signature, int> names;
    std::vector<Signature> sa, sb;
    for (int v = 0; v < static_cast<int>(ca.size()); ++v) sa.push_back(signature(a, ca, v));
    for (int v = 0; v < static_cast<int>(cb.size()); ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) names.emplace(s, 0);
    for (const auto& s : sb) names.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : names) id = next++;
    for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = names[sa[v]];
    for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = names[sb[v]];
    if (names.size() == classes) break;
    classes = names.size();
  }
  return {ca, cb};
}

bool extend(const Indexed& a, const Indexed& b, const std::vector<int>& ca, const std::vector<int>& cb,
            const std::vector<int>& order, std::size_t depth, std::vector<int>& map, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  int v = order[depth];
  for (int w = 0; w < static_cast<int>(b.labels.size()); ++w) {
    if (used[w] || cb[w] != ca[v]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      int u = order[d];
      ok = a.adj[v][u] == b.adj[w][map[u]];
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(a, b, ca, cb, order, depth + 1, map, used)) return true;
    used[w] = false;
    map[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<VertexMap> is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  Indexed a = index(g1), b = index(g2);
  auto [ca, cb] = refine(a, b);
  auto hist = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (hist(ca) != hist(cb)) return std::nullopt;

  std::map<int, int> class_size;
  for (int c : ca) ++class_size[c];
  std::vector<int> order(a.labels.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return class_size[ca[x]] < class_size[ca[y]]; });

  std::vector<int> map(a.labels.size(), -1);
  std::vector<bool> used(b.labels.size(), false);
  if (!extend(a, b, ca, cb, order, 0, map, used)) return std::nullopt;
  VertexMap out;
  for (std::size_t v = 0; v < map.size(); ++v) out[a.labels[v]] = b.labels[map[v]];
  return out;
}

bool preserves_edges(const Graph& g1, const Graph& g2, const VertexMap& map) {
  if (g1.edge_count() != g2.edge_count()) return false;
  for (const auto& e : g1.edges()) {
    auto i = map.find(e.first), j = map.find(e.second);
    if (i == map.end() || j == map.end()) return false;
    if (!g2.has_edge(i->second, j->second)) return false;
  }
  return true;
}

bool verify_automorphism(const Graph& g, const VertexMap& map) {
  std::set<Label> keys, values;
  for (const auto& [k, v] : map) {
    keys.insert(k);
    values.insert(v);
  }
  if (keys != g.vertices() || values != g.vertices())
    throw InputError("verify_automorphism: map is not a bijection on the vertex set");
  return preserves_edges(g, g, map);
}

VertexMap parse_cycle_notation(const std::string& text) {
  VertexMap out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw FormatError("char " + std::to_string(i), "expected '('");
    ++i;
    std::vector<Label> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw FormatError("char " + std::to_string(i), "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] != ')' && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      cycle.push_back(text.substr(start, i - start));
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto& from = cycle[k];
      const auto& to = cycle[(k + 1) % cycle.size()];
      if (!out.emplace(from, to).second) throw FormatError("", "label '" + from + "' appears twice");
    }
    skip_space();
  }
  return out;
}

VertexMap complete_on(const std::set<Label>& vertices, VertexMap partial) {
  for (const auto& v : vertices) partial.try_emplace(v, v);
  return partial;
}

}  // namespace knotcert
