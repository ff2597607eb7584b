#include "doctest.h"
#include "knotcert/certify.hpp"
#include "knotcert/cycles.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/graph_io.hpp"
#include "support.hpp"

using namespace knotcert;

TEST_SUITE("certify") {
  TEST_CASE("G7 fixture is knotless") {
    auto d = test::fixture("g7_figure2.json");
    auto report = certify(d, "g7_figure2");
    CHECK(report.summary == Summary::Knotless);
    CHECK(report.cycle_count() == enumerate_cycles(construct_g7()).size());
    std::set<std::string> seen;
    for (const auto& r : report.records) {
      CHECK(r.verdict.kind == VerdictKind::Unknot);
      CHECK(r.verdict.polynomial.is_one());
      CHECK(r.crossings.size() <= 7);
      seen.insert(r.cycle.to_string());
    }
    CHECK(seen.size() == report.cycle_count());
  }

  TEST_CASE("K7 control contains a knot") {
    auto report = certify(test::fixture("k7_control.json"), "k7_control");
    CHECK(report.summary == Summary::KnotFound);
    CHECK(report.cycle_count() == 1172);
    auto knotted = std::count_if(report.records.begin(), report.records.end(),
                                 [](const CycleRecord& r) { return r.verdict.kind == VerdictKind::Knotted; });
    CHECK(knotted >= 1);
  }

  TEST_CASE("toy diagrams") {
    auto tref = certify(test::fixture("trefoil.json"), "trefoil");
    CHECK(tref.summary == Summary::KnotFound);
    REQUIRE(tref.records.size() == 1);
    CHECK(tref.records[0].verdict.polynomial.to_t_string() == "-t^4 + t^3 + t");
    CHECK(certify(test::fixture("figure8.json"), "figure8").summary == Summary::KnotFound);
    CHECK(certify(test::fixture("split_triangles.json"), "split").summary == Summary::Knotless);
  }

  TEST_CASE("a low bound leaves large cycles inconclusive") {
    auto report = certify(test::fixture("g7_figure2.json"), "g7", {.max_crossings = 2, .threads = 1});
    CHECK(report.summary == Summary::Inconclusive);
    CHECK(to_json(report)["max_crossings"] == 2);
  }

  TEST_CASE("reports are identical across thread counts") {
    auto d = test::fixture("g7_figure2.json");
    auto one = dump_json(to_json(certify(d, "g7", {.threads = 1})));
    auto many = dump_json(to_json(certify(d, "g7", {.threads = 4})));
    CHECK(one == many);
    auto j = nlohmann::json::parse(one);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["summary"] == "KNOTLESS");
    CHECK(j["cycle_count"] == j["cycles"].size());
    CHECK_FALSE(j.contains("wall_seconds"));

    auto l1 = dump_json(to_json(find_links(d, "g7", 1)));
    auto l4 = dump_json(to_json(find_links(d, "g7", 4)));
    CHECK(l1 == l4);
  }

  TEST_CASE("invalid diagrams are rejected") {
    auto d = test::fixture("g7_figure2.json");
    std::reverse(d.vertices["c"].begin(), d.vertices["c"].end());
    CHECK_THROWS_AS(certify(d, "broken"), InputError);
  }

  TEST_CASE("links") {
    auto g7 = find_links(test::fixture("g7_figure2.json"), "g7");
    CHECK(g7.pairs_examined == disjoint_cycle_pairs(construct_g7()).size());
    CHECK(g7.has_odd_pair());
    for (const auto& r : g7.linked) {
      CHECK(r.linking_number != 0);
      CHECK_FALSE(r.first.shares_vertex(r.second));
    }

    auto hopf = find_links(test::fixture("hopf.json"), "hopf");
    REQUIRE(hopf.linked.size() == 1);
    CHECK(std::abs(hopf.linked[0].linking_number) == 1);

    auto split = find_links(test::fixture("split_triangles.json"), "split");
    CHECK(split.pairs_examined == 1);
    CHECK(split.linked.empty());
    CHECK_FALSE(split.has_odd_pair());
  }

  TEST_CASE("thread count from the environment") {
    unsetenv("KNOTCERT_THREADS");
    CHECK(threads_from_env() >= 1);
    setenv("KNOTCERT_THREADS", "3", 1);
    CHECK(threads_from_env() == 3);
    setenv("KNOTCERT_THREADS", "0", 1);
    CHECK(threads_from_env() >= 1);
    setenv("KNOTCERT_THREADS", "many", 1);
    CHECK_THROWS_AS(threads_from_env(), InputError);
    unsetenv("KNOTCERT_THREADS");
  }

  TEST_CASE("parallel_for visits every index once") {
    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), 8, [&](std::size_t i) { ++hits[i]; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}
