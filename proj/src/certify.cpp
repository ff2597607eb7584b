#include "knotcert/certify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "knotcert/errors.hpp"

namespace knotcert {

using nlohmann::json;

unsigned threads_from_env() {
  const char* raw = std::getenv("KNOTCERT_THREADS");
  unsigned n = 0;
  if (raw != nullptr && *raw != '\0') {
    std::string s(raw);
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || v < 0) throw InputError("KNOTCERT_THREADS must be a non-negative integer, got '" + s + "'");
    n = static_cast<unsigned>(v);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  if (error) std::rethrow_exception(error);
}

const char* to_string(Summary s) {
  switch (s) {
    case Summary::Knotless: return "KNOTLESS";
    case Summary::KnotFound: return "KNOT_FOUND";
    case Summary::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

json cycle_json(const Cycle& c) { return json(c.vertices); }

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

}  // namespace

CertificationReport certify(const Diagram& d, const std::string& diagram_id, const CertifyOptions& options) {
  auto start = std::chrono::steady_clock::now();
  require_valid(d);
  auto traces = trace_edges(d);
  auto cycles = enumerate_cycles(underlying_graph(d));

  CertificationReport report;
  report.diagram_id = diagram_id;
  report.max_crossings = options.max_crossings;
  report.records.resize(cycles.size());
  parallel_for(cycles.size(), options.threads, [&](std::size_t i) {
    auto pd = extract_component_pd(d, traces, {cycles[i]});
    report.records[i] = CycleRecord{cycles[i], pd.sources(), classify_knot(pd, options.max_crossings)};
  });

  report.summary = Summary::Knotless;
  for (const auto& r : report.records) {
    if (r.verdict.kind == VerdictKind::Knotted) {
      report.summary = Summary::KnotFound;
      break;
    }
    if (r.verdict.kind == VerdictKind::Inconclusive) report.summary = Summary::Inconclusive;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const CertificationReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    json rec{{"cycle", cycle_json(r.cycle)},
             {"crossings", r.crossings},
             {"verdict", to_string(r.verdict.kind)}};
    if (!r.verdict.polynomial.is_zero() || r.verdict.kind != VerdictKind::Inconclusive) {
      rec["polynomial"] = r.verdict.polynomial.to_json();
      rec["polynomial_text"] = r.verdict.polynomial.to_string();
    }
    if (r.verdict.kind == VerdictKind::Inconclusive) rec["reason"] = r.verdict.reason;
    records.push_back(std::move(rec));
  }
  return json{{"schema", kReportSchema},
              {"kind", "certify"},
              {"diagram", report.diagram_id},
              {"max_crossings", report.max_crossings},
              {"cycle_count", report.cycle_count()},
              {"cycles", records},
              {"summary", to_string(report.summary)}};
}

std::string format_table(const CertificationReport& report) {
  std::ostringstream out;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : report.records) ++counts[static_cast<int>(r.verdict.kind)];
  out << "diagram " << report.diagram_id << ": " << report.cycle_count() << " cycles, bound "
      << report.max_crossings << " crossings\n";
  out << "  unknot " << counts[0] << ", knotted " << counts[1] << ", inconclusive " << counts[2] << "\n";
  for (const auto& r : report.records) {
    if (r.verdict.kind == VerdictKind::Unknot) continue;
    out << "  " << to_string(r.verdict.kind) << "  " << r.cycle.to_string() << "  crossings {"
        << join(r.crossings, ",") << "}";
    if (!r.verdict.polynomial.is_zero()) {
      const auto& p = r.verdict.polynomial;
      out << "  " << (p.has_t_form() ? "V(t) = " + p.to_t_string() : p.to_string());
    }
    out << "\n";
  }
  out << "summary " << to_string(report.summary) << " (" << report.wall_seconds << " s)\n";
  return out.str();
}

bool LinkReport::has_odd_pair() const {
  for (const auto& r : linked)
    if (r.linking_number % 2 != 0) return true;
  return false;
}

LinkReport find_links(const Diagram& d, const std::string& diagram_id, unsigned threads) {
  require_valid(d);
  auto traces = trace_edges(d);
  auto pairs = disjoint_cycle_pairs(underlying_graph(d));
  std::vector<LinkRecord> all(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    auto pd = extract_component_pd(d, traces, {a, b});
    LinkRecord rec{a, b, {}, linking_number(pd)};
    for (const auto& c : pd.crossings)
      if (c.component[0] != c.component[1]) rec.crossings.push_back(c.source);
    all[i] = std::move(rec);
  });
  LinkReport report{diagram_id, pairs.size(), {}};
  for (auto& r : all)
    if (r.linking_number != 0) report.linked.push_back(std::move(r));
  return report;
}

json to_json(const LinkReport& report) {
  json pairs = json::array();
  for (const auto& r : report.linked)
    pairs.push_back(json{{"first", cycle_json(r.first)},
                         {"second", cycle_json(r.second)},
                         {"crossings", r.crossings},
                         {"linking_number", r.linking_number}});
  return json{{"schema", kReportSchema},
              {"kind", "links"},
              {"diagram", report.diagram_id},
              {"pairs_examined", report.pairs_examined},
              {"linked_pairs", pairs}};
}

std::string format_table(const LinkReport& report) {
  std::ostringstream out;
  out << "diagram " << report.diagram_id << ": " << report.pairs_examined << " disjoint cycle pairs, "
      << report.linked.size() << " linked\n";
  for (const auto& r : report.linked)
    out << "  lk = " << r.linking_number << "  " << r.first.to_string() << " | " << r.second.to_string()
        << "  crossings {" << join(r.crossings, ",") << "}\n";
  return out.str();
}

}  // namespace knotcert
