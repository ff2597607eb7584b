#include "knotcert/invariants.hpp"

#include <map>
#include <numeric>

#include "knotcert/errors.hpp"

namespace knotcert {

namespace {

void check_bound(const ComponentPD& pd, int max_crossings) {
  if (static_cast<int>(pd.crossing_count()) > max_crossings)
    throw BoundExceeded("diagram has " + std::to_string(pd.crossing_count()) + " crossings; bound is " +
                        std::to_string(max_crossings));
}

int free_loops(const ComponentPD& pd) {
  std::vector<bool> touched(pd.components, false);
  for (const auto& c : pd.crossings)
    for (int comp : c.component) touched[comp] = true;
  return static_cast<int>(std::count(touched.begin(), touched.end(), false));
}

// Slot pairs joined by the A- and B-smoothings.
struct Smoothing {
  std::array<std::pair<int, int>, 2> a;
  std::array<std::pair<int, int>, 2> b;
};

Smoothing smoothing_for(int over) {
  const std::array<std::pair<int, int>, 2> adjacent_01{{{0, 1}, {2, 3}}};
  const std::array<std::pair<int, int>, 2> adjacent_12{{{1, 2}, {3, 0}}};
  // Over strand through slots 0,2: turning it counterclockwise sweeps the
  // regions at corners 0-1 and 2-3, which the A-smoothing merges.
  return over == 0 ? Smoothing{adjacent_12, adjacent_01} : Smoothing{adjacent_01, adjacent_12};
}

}  // namespace

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Unknot: return "unknot";
    case VerdictKind::Knotted: return "knotted";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

LaurentPoly kauffman_bracket(const ComponentPD& pd, int max_crossings) {
  check_bound(pd, max_crossings);
  check_pd(pd);
  const int k = static_cast<int>(pd.crossing_count());

  std::map<int, int> dense;
  for (const auto& c : pd.crossings)
    for (int s : c.segments) dense.emplace(s, 0);
  int n = 0;
  for (auto& [label, idx] : dense) idx = n++;

  struct Pairs {
    std::array<std::array<int, 2>, 2> a, b;
  };
  std::vector<Pairs> joins;
  for (const auto& c : pd.crossings) {
    auto sm = smoothing_for(c.over);
    Pairs p;
    for (int i = 0; i < 2; ++i) {
      p.a[i] = {dense[c.segments[sm.a[i].first]], dense[c.segments[sm.a[i].second]]};
      p.b[i] = {dense[c.segments[sm.b[i].first]], dense[c.segments[sm.b[i].second]]};
    }
    joins.push_back(p);
  }

  const int extra = free_loops(pd);
  // tally[(#A - #B, loops)] = number of states
  std::map<std::pair<int, int>, std::int64_t> tally;
  std::vector<int> parent(n);
  const std::uint64_t states = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int loops = n;
    int a_count = 0;
    for (int i = 0; i < k; ++i) {
      bool use_a = ((mask >> i) & 1u) == 0;
      a_count += use_a ? 1 : 0;
      for (const auto& [x, y] : use_a ? joins[i].a : joins[i].b) {
        int rx = find(x), ry = find(y);
        if (rx != ry) {
          parent[rx] = ry;
          --loops;
        }
      }
    }
    ++tally[{a_count - (k - a_count), loops + extra}];
  }

  LaurentPoly result;
  std::map<int, LaurentPoly> delta_powers;
  for (const auto& [key, count] : tally) {
    auto [exponent, loops] = key;
    auto it = delta_powers.find(loops);
    if (it == delta_powers.end()) it = delta_powers.emplace(loops, loop_value().pow(loops - 1)).first;
    result += LaurentPoly::monomial(count, exponent) * it->second;
  }
  return result;
}

int crossing_sign(const PdCrossing& c) {
  // Heading of each strand in quarter turns, slot i sitting at angle i*90deg.
  auto heading = [&](int strand) { return c.forward[strand] ? (strand + 2) % 4 : strand; };
  int over = heading(c.over);
  int under = heading(1 - c.over);
  int turn = ((under - over) % 4 + 4) % 4;  // 1 or 3
  return turn == 1 ? +1 : -1;
}

int writhe(const ComponentPD& pd) {
  int w = 0;
  for (const auto& c : pd.crossings) w += crossing_sign(c);
  return w;
}

LaurentPoly jones_normalized(const ComponentPD& pd, int max_crossings) {
  int w = writhe(pd);
  LaurentPoly factor = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
  return factor * kauffman_bracket(pd, max_crossings);
}

UnknotVerdict classify_knot(const ComponentPD& pd, int max_certified_crossings, int evaluation_limit) {
  if (pd.components != 1) throw InputError("classify_knot: expected a single component");
  const int k = static_cast<int>(pd.crossing_count());
  if (k == 0) return {VerdictKind::Unknot, LaurentPoly(1), "no crossings"};
  if (k > evaluation_limit)
    return {VerdictKind::Inconclusive, {},
            std::to_string(k) + " crossings exceeds the evaluation limit " + std::to_string(evaluation_limit)};
  LaurentPoly v = jones_normalized(pd, evaluation_limit);
  if (!v.is_one()) return {VerdictKind::Knotted, v, "nontrivial Jones polynomial"};
  if (k <= max_certified_crossings) return {VerdictKind::Unknot, v, "trivial Jones polynomial"};
  return {VerdictKind::Inconclusive, v,
          "trivial Jones polynomial but " + std::to_string(k) + " crossings exceeds the certified bound " +
              std::to_string(max_certified_crossings)};
}

int linking_number(const ComponentPD& pd) {
  if (pd.components != 2) throw InputError("linking_number: expected exactly two components");
  int sum = 0;
  for (const auto& c : pd.crossings)
    if (c.component[0] != c.component[1]) sum += crossing_sign(c);
  if (sum % 2 != 0) throw InputError("linking_number: odd signed sum; diagram is inconsistent");
  return sum / 2;
}

}  // namespace knotcert
