#include <algorithm>
#include <map>

#include "doctest.h"
#include "knotcert/errors.hpp"
#include "knotcert/graph.hpp"
#include "knotcert/graph_io.hpp"
#include "support.hpp"

using namespace knotcert;
using test::make_graph;

namespace {

// Independent replay of the K7 -> G7 moves on a plain adjacency matrix.
std::set<std::string> hand_applied_g7_edges(bool stop_after_five = false, std::map<char, std::set<char>>* g5 = nullptr) {
  bool adj[12][12] = {};
  bool alive[12] = {};
  for (int i = 0; i < 7; ++i) {
    alive[i] = true;
    for (int j = 0; j < 7; ++j) adj[i][j] = i != j;
  }
  auto id = [](char c) { return c - 'a'; };
  auto delta_y = [&](char x, char y, char z, char v) {
    int a = id(x), b = id(y), c = id(z), n = id(v);
    adj[a][b] = adj[b][a] = adj[a][c] = adj[c][a] = adj[b][c] = adj[c][b] = false;
    alive[n] = true;
    for (int t : {a, b, c}) adj[t][n] = adj[n][t] = true;
  };
  auto y_delta = [&](char v) {
    int n = id(v);
    std::vector<int> nb;
    for (int t = 0; t < 12; ++t)
      if (adj[n][t]) nb.push_back(t);
    REQUIRE(nb.size() == 3);
    for (int t = 0; t < 12; ++t) adj[n][t] = adj[t][n] = false;
    alive[n] = false;
    for (int p : nb)
      for (int q : nb)
        if (p != q) adj[p][q] = true;
  };
  delta_y('a', 'b', 'c', 'h');
  delta_y('a', 'd', 'e', 'i');
  delta_y('a', 'f', 'g', 'j');
  delta_y('b', 'd', 'f', 'k');
  delta_y('b', 'e', 'g', 'l');
  if (g5 != nullptr) {
    for (char v : std::string("ab"))
      for (int t = 0; t < 12; ++t)
        if (adj[id(v)][t]) (*g5)[v].insert(static_cast<char>('a' + t));
  }
  if (!stop_after_five) {
    y_delta('a');
    y_delta('b');
  }
  std::set<std::string> out;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (alive[i] && alive[j] && adj[i][j]) out.insert(std::string{char('a' + i), char('a' + j)});
  return out;
}

std::set<std::string> edge_names(const Graph& g) {
  std::set<std::string> out;
  for (const auto& e : g.edges()) out.insert(e.first + e.second);
  return out;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("complete graphs") {
    auto k7 = complete_graph({"a", "b", "c", "d", "e", "f", "g"});
    CHECK(k7.vertex_count() == 7);
    CHECK(k7.edge_count() == 21);
    auto k1 = complete_graph({"a"});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(complete_graph({"a", "b", "c"}) == make_graph("abc", {"ab", "ac", "bc"}));
    CHECK_THROWS_AS(complete_graph({"a", "b", "a"}), InputError);
    CHECK_THROWS_AS(complete_graph({}), InputError);
  }

  TEST_CASE("graphs stay simple") {
    Graph g = make_graph("ab", {"ab"});
    g.add_edge("b", "a");
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge("a", "a"), InputError);
    CHECK_THROWS_AS(g.add_edge("a", "z"), MoveError);
  }

  TEST_CASE("delta_y on a triangle gives a star") {
    auto star = delta_y(complete_graph({"a", "b", "c"}), {"a", "b", "c"}, "v");
    CHECK(star == make_graph("abcv", {"av", "bv", "cv"}));
  }

  TEST_CASE("delta_y on K7") {
    auto g = delta_y(k7(), {"a", "b", "c"}, "h");
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 21);
    for (const char* v : {"a", "b", "c"}) CHECK(g.degree(v) == 5);
    CHECK(g.degree("h") == 3);
  }

  TEST_CASE("delta_y errors") {
    auto c4 = make_graph("abcd", {"ab", "bc", "cd", "da"});
    try {
      delta_y(c4, {"a", "b", "c"}, "v");
      FAIL("expected TriangleAbsent");
    } catch (const MoveError& e) {
      CHECK(e.kind() == MoveErrorKind::TriangleAbsent);
    }
    try {
      delta_y(k7(), {"a", "b", "c"}, "d");
      FAIL("expected LabelClash");
    } catch (const MoveError& e) {
      CHECK(e.kind() == MoveErrorKind::LabelClash);
    }
  }

  TEST_CASE("y_delta") {
    CHECK(y_delta(make_graph("abcv", {"av", "bv", "cv"}), "v") == complete_graph({"a", "b", "c"}));
    auto k4 = complete_graph({"a", "b", "c", "v"});
    auto tri = y_delta(k4, "v");
    CHECK(tri.edge_count() == 3);
    CHECK(tri == complete_graph({"a", "b", "c"}));
  }

  TEST_CASE("y_delta needs degree exactly three") {
    auto k5 = complete_graph({"a", "b", "c", "d", "e"});
    auto path = make_graph("abc", {"ab", "bc"});
    for (auto [g, v] : {std::pair{k5, "a"}, std::pair{path, "b"}}) {
      try {
        y_delta(g, v);
        FAIL("expected DegreeNotThree");
      } catch (const MoveError& e) {
        CHECK(e.kind() == MoveErrorKind::DegreeNotThree);
      }
    }
  }

  TEST_CASE("delete and contract") {
    auto path = make_graph("abc", {"ab", "bc"});
    auto cut = delete_edge(path, Edge::of("a", "b"));
    CHECK(cut.vertex_count() == 3);
    CHECK(cut.edge_count() == 1);
    CHECK_FALSE(cut.is_connected());

    auto single = contract_edge(complete_graph({"a", "b", "c"}), Edge::of("b", "a"));
    CHECK(single == make_graph("ac", {"ac"}));

    auto k5 = complete_graph({"a", "b", "c", "d", "e"});
    for (const auto& e : k5.edges()) {
      auto k4 = contract_edge(k5, e);
      CHECK(k4.vertex_count() == 4);
      CHECK(k4.edge_count() == 6);
      CHECK(k4.has_vertex(e.first));
      CHECK_FALSE(k4.has_vertex(e.second));
    }
    CHECK_THROWS_AS(delete_edge(path, Edge::of("a", "c")), MoveError);
    CHECK_THROWS_AS(contract_edge(path, Edge::of("a", "c")), MoveError);
  }

  TEST_CASE("y_delta undoes delta_y on every triangle of small graphs") {
    std::vector<Graph> samples{k7(), complete_graph({"p", "q", "r", "s"}),
                               make_graph("abcde", {"ab", "bc", "ac", "cd", "de", "ce", "ae"})};
    for (const auto& g : samples) {
      for (const auto& x : g.vertices())
        for (const auto& y : g.vertices())
          for (const auto& z : g.vertices()) {
            if (!(x < y && y < z) || !g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z)) continue;
            Graph copy = g;
            auto star = delta_y(g, {x, y, z}, "zz");
            CHECK(copy == g);  // inputs untouched
            CHECK(star.edge_count() == g.edge_count());
            CHECK(star.vertex_count() == g.vertex_count() + 1);
            CHECK(y_delta(star, "zz") == g);
          }
    }
  }

  TEST_CASE("y_delta edge bookkeeping") {
    // |E'| = |E| - 3 + number of neighbor pairs not already adjacent
    auto g = make_graph("abcvx", {"av", "bv", "cv", "ab", "cx"});
    auto h = y_delta(g, "v");
    CHECK(h.edge_count() == g.edge_count() - 3 + 2);
  }

  TEST_CASE("script application") {
    auto r = apply_script(k7(), MoveScript{});
    CHECK(r.final_graph == k7());
    CHECK(r.intermediates.empty());

    MoveScript bad{{DeltaY{{"a", "b", "c"}, "h"}, YDelta{"d"}}};
    try {
      apply_script(k7(), bad);
      FAIL("expected ScriptError");
    } catch (const ScriptError& e) {
      CHECK(e.step() == 1);
      CHECK(e.kind() == MoveErrorKind::DegreeNotThree);
    }
  }

  TEST_CASE("G7 construction matches an independent replay") {
    auto r = apply_script(k7(), g7_script());
    REQUIRE(r.intermediates.size() == 7);
    const Graph& g7 = r.final_graph;
    CHECK(g7 == construct_g7());
    CHECK(g7.vertex_count() == 10);
    CHECK(g7.edge_count() == 21);
    CHECK(edge_names(g7) == hand_applied_g7_edges());
    std::set<std::string> listed(test::g7_edge_names().begin(), test::g7_edge_names().end());
    CHECK(edge_names(g7) == listed);
    for (const auto& v : g7.vertices()) CHECK(g7.degree(v) == ((v == "c" || v == "h") ? 5u : 4u));
    CHECK(g7.is_connected());

    std::map<char, std::set<char>> g5;
    hand_applied_g7_edges(true, &g5);
    const Graph& five = r.intermediates[4];
    CHECK(five.neighbors("a") == std::set<Label>{"h", "i", "j"});
    CHECK(five.neighbors("b") == std::set<Label>{"h", "k", "l"});
    CHECK(g5['a'] == std::set<char>{'h', 'i', 'j'});

    const Graph& six = r.intermediates[5];
    CHECK(six.vertex_count() == 11);
    CHECK(six.edge_count() == 21);
    for (auto [x, y] : {std::pair{"h", "i"}, std::pair{"h", "j"}, std::pair{"i", "j"}}) CHECK(six.has_edge(x, y));
  }

  TEST_CASE("graph and script files round-trip") {
    auto g = construct_g7();
    auto j = graph_to_json(g);
    CHECK(j["vertices"].front() == "c");
    CHECK(j["edges"].front() == nlohmann::json::array({"c", "d"}));
    CHECK(graph_from_json(j) == g);
    auto s = script_from_json(script_to_json(g7_script()));
    CHECK(apply_script(k7(), s).final_graph == g);
    MoveScript mixed{{DeleteEdge{Edge::of("a", "b")}, ContractEdge{Edge::of("c", "d")}}};
    CHECK(script_to_json(script_from_json(script_to_json(mixed))) == script_to_json(mixed));
  }

  TEST_CASE("bundled script file matches the built-in script") {
    auto s = script_from_json(read_json_file(test::data_file("g7_script.json")));
    CHECK(script_to_json(s) == script_to_json(g7_script()));
  }

  TEST_CASE("bad graph files are rejected with a location") {
    auto bad = [](const char* text) {
      try {
        graph_from_json(parse_json_text(text));
      } catch (const FormatError& e) {
        return e.where();
      }
      return std::string("accepted");
    };
    CHECK(bad(R"({"vertices":["a","b"],"edges":[["a","c"]]})") == "/edges/0");
    CHECK(bad(R"({"vertices":["a","a"],"edges":[]})") == "/vertices/1");
    CHECK(bad(R"({"vertices":["a"],"edges":[["a","a"]]})") == "/edges/0");
    CHECK(bad(R"({"vertices":["a"]})") == "");
    CHECK(bad(R"({"vertices":["a"],)") != "accepted");
    CHECK_THROWS_AS(script_from_json(parse_json_text(R"({"steps":[{"op":"twist"}]})")), FormatError);
  }
}
