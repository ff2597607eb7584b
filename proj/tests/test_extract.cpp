#include "doctest.h"
#include "knotcert/cycles.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/invariants.hpp"
#include "knotcert/pd.hpp"
#include "support.hpp"

using namespace knotcert;

namespace {

// Which two edges meet at each crossing of the G7 fixture.
const std::map<std::string, std::pair<std::string, std::string>>& g7_crossing_table() {
  static const std::map<std::string, std::pair<std::string, std::string>> table{
      {"1", {"ef", "gl"}}, {"2", {"dk", "ij"}}, {"3", {"ce", "hi"}}, {"4", {"dk", "gl"}},
      {"5", {"cf", "hj"}}, {"6", {"gl", "ij"}}, {"7", {"dk", "ef"}}};
  return table;
}

std::set<std::string> edge_names(const std::vector<Cycle>& cycles) {
  std::set<std::string> names;
  for (const auto& c : cycles)
    for (const auto& [a, b] : c.steps()) {
      auto e = Edge::of(a, b);
      names.insert(e.first + e.second);
    }
  return names;
}

std::vector<std::string> predicted(const std::vector<Cycle>& cycles) {
  auto names = edge_names(cycles);
  std::vector<std::string> kept;
  for (const auto& [id, pair] : g7_crossing_table())
    if (names.contains(pair.first) && names.contains(pair.second)) kept.push_back(id);
  return kept;
}

std::vector<std::string> sorted_sources(const ComponentPD& pd) {
  auto s = pd.sources();
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_SUITE("extract") {
  TEST_CASE("triangle c-e-f keeps no crossing") {
    auto d = test::fixture("g7_figure2.json");
    auto pd = extract_component_pd(d, {Cycle::canonical({"c", "e", "f"})});
    CHECK(pd.crossing_count() == 0);
    CHECK(pd.components == 1);
    CHECK(kauffman_bracket(pd).is_one());
  }

  TEST_CASE("Hamiltonian cycle keeps crossings 1, 2, 4, 6, 7") {
    auto d = test::fixture("g7_figure2.json");
    auto cyc = Cycle::canonical({"c", "d", "k", "f", "e", "l", "g", "j", "i", "h"});
    auto pd = extract_component_pd(d, {cyc});
    CHECK(sorted_sources(pd) == std::vector<std::string>{"1", "2", "4", "6", "7"});
    check_pd(pd);
    std::set<int> segs;
    for (const auto& c : pd.crossings) segs.insert(c.segments.begin(), c.segments.end());
    CHECK(segs.size() == 2 * pd.crossing_count());
  }

  TEST_CASE("every G7 cycle keeps exactly the predicted crossings") {
    auto d = test::fixture("g7_figure2.json");
    auto traces = trace_edges(d);
    std::size_t with_dk_gl = 0;
    for (const auto& cyc : enumerate_cycles(construct_g7())) {
      CAPTURE(cyc.to_string());
      auto pd = extract_component_pd(d, traces, {cyc});
      CHECK(sorted_sources(pd) == predicted({cyc}));
      check_pd(pd);
      for (const auto& c : pd.crossings) CHECK(c.component == std::array<int, 2>{0, 0});
      auto names = edge_names({cyc});
      if (names.contains("dk") && names.contains("gl")) {
        ++with_dk_gl;
        auto src = pd.sources();
        CHECK(std::find(src.begin(), src.end(), "4") != src.end());
      }
    }
    CHECK(with_dk_gl > 0);
  }

  TEST_CASE("disjoint pairs keep the predicted crossings") {
    auto d = test::fixture("g7_figure2.json");
    auto traces = trace_edges(d);
    for (const auto& [a, b] : disjoint_cycle_pairs(construct_g7())) {
      auto pd = extract_component_pd(d, traces, {a, b});
      CHECK(pd.components == 2);
      CHECK(sorted_sources(pd) == predicted({a, b}));
      check_pd(pd);
    }
    auto pd = extract_component_pd(d, traces, {Cycle::canonical({"c", "e", "f"}),
                                               Cycle::canonical({"d", "g", "l", "h", "k"})});
    // 4 is a self-crossing of d-g-l-h-k; 1 and 7 join the two components.
    CHECK(sorted_sources(pd) == std::vector<std::string>{"1", "4", "7"});
    for (const auto& c : pd.crossings) CHECK((c.component[0] != c.component[1]) == (c.source != "4"));
  }

  TEST_CASE("invalid selections are rejected") {
    auto d = test::fixture("g7_figure2.json");
    auto a = Cycle::canonical({"c", "e", "f"});
    auto b = Cycle::canonical({"c", "d", "g"});
    CHECK_THROWS_AS(extract_component_pd(d, {a, b}), InputError);
    CHECK_THROWS_AS(extract_component_pd(d, {}), InputError);
    CHECK_THROWS_AS(extract_component_pd(d, {a, a, a}), InputError);
    CHECK_THROWS_AS(extract_component_pd(d, {Cycle::canonical({"c", "d", "e"})}), InputError);
  }

  TEST_CASE("fixtures extract to the expected knots") {
    auto tref = test::fixture("trefoil.json");
    auto cycles = enumerate_cycles(underlying_graph(tref));
    REQUIRE(cycles.size() == 1);
    auto pd = extract_component_pd(tref, cycles);
    CHECK(pd.crossing_count() == 3);
    CHECK(writhe(pd) == 3);

    auto hopf = test::fixture("hopf.json");
    auto pairs = disjoint_cycle_pairs(underlying_graph(hopf));
    REQUIRE(pairs.size() == 1);
    auto link = extract_component_pd(hopf, {pairs[0].first, pairs[0].second});
    CHECK(link.components == 2);
    CHECK(link.crossing_count() == 2);
  }

  TEST_CASE("mirror and reversal keep PDs well formed") {
    auto d = test::fixture("g7_figure2.json");
    auto pd = extract_component_pd(d, {Cycle::canonical({"c", "d", "k", "f", "e", "l", "g", "j", "i", "h"})});
    auto m = mirror(pd);
    check_pd(m);
    CHECK(mirror(m) == pd);
    auto r = reverse_component(pd, 0);
    check_pd(r);
    CHECK(writhe(r) == writhe(pd));
  }

  TEST_CASE("check_pd rejects unpaired segments") {
    auto pd = test::right_trefoil();
    pd.crossings[0].segments[0] = 99;
    CHECK_THROWS_AS(check_pd(pd), InputError);
  }
}
