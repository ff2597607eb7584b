#include <algorithm>

#include "knotcert/errors.hpp"
#include "knotcert/invariants.hpp"

namespace knotcert {

namespace {

struct Tangle {
  std::vector<std::array<int, 4>> crossings;  // segment labels, counterclockwise
  std::vector<int> over;
  int loops = 0;  // closed curves with no crossing left on them
};

void relabel(Tangle& t, int from, int to) {
  for (auto& c : t.crossings)
    for (auto& s : c)
      if (s == from) s = to;
}

// Joins the segments at two slots of the crossing being removed.
void splice(Tangle& t, std::array<int, 4>& removed, int slot_a, int slot_b) {
  int x = removed[slot_a], y = removed[slot_b];
  if (x == y) {
    ++t.loops;
    return;
  }
  relabel(t, y, x);
  for (auto& s : removed)
    if (s == y) s = x;
}

LaurentPoly expand(Tangle t) {
  if (t.crossings.empty()) return loop_value().pow(static_cast<unsigned>(t.loops - 1));
  std::array<int, 4> last = t.crossings.back();
  int over = t.over.back();
  t.crossings.pop_back();
  t.over.pop_back();

  // over on slots 0,2: A joins 1-2 and 3-0; otherwise A joins 0-1 and 2-3
  Tangle a = t, b = t;
  std::array<int, 4> la = last, lb = last;
  if (over == 0) {
    splice(a, la, 1, 2);
    splice(a, la, 3, 0);
    splice(b, lb, 0, 1);
    splice(b, lb, 2, 3);
  } else {
    splice(a, la, 0, 1);
    splice(a, la, 2, 3);
    splice(b, lb, 1, 2);
    splice(b, lb, 3, 0);
  }
  return LaurentPoly::monomial(1, 1) * expand(std::move(a)) + LaurentPoly::monomial(1, -1) * expand(std::move(b));
}

}  // namespace

LaurentPoly kauffman_bracket_skein(const ComponentPD& pd, int max_crossings) {
  if (static_cast<int>(pd.crossing_count()) > max_crossings)
    throw BoundExceeded("skein: too many crossings");
  check_pd(pd);
  Tangle t;
  std::vector<bool> touched(pd.components, false);
  for (const auto& c : pd.crossings) {
    t.crossings.push_back(c.segments);
    t.over.push_back(c.over);
    touched[c.component[0]] = touched[c.component[1]] = true;
  }
  t.loops = static_cast<int>(std::count(touched.begin(), touched.end(), false));
  return expand(std::move(t));
}

}  // namespace knotcert
