#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotcert/cycles.hpp"
#include "knotcert/diagram.hpp"
#include "knotcert/invariants.hpp"

namespace knotcert {

inline constexpr const char* kReportSchema = "knotcert/1";

/// Worker count from KNOTCERT_THREADS: unset or 0 means one per hardware
/// thread. Malformed values throw InputError.
unsigned threads_from_env();

/// Runs fn(0..n-1) on up to `threads` workers. Results must be written to
/// per-index slots so output order does not depend on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

struct CertifyOptions {
  int max_crossings = kDefaultMaxCrossings;
  unsigned threads = 1;
};

struct CycleRecord {
  Cycle cycle;
  std::vector<CrossingId> crossings;  // retained crossings, diagram ids
  UnknotVerdict verdict;
};

enum class Summary { Knotless, KnotFound, Inconclusive };

const char* to_string(Summary s);

struct CertificationReport {
  std::string diagram_id;
  int max_crossings = kDefaultMaxCrossings;
  std::vector<CycleRecord> records;  // canonical cycle order
  Summary summary = Summary::Inconclusive;
  double wall_seconds = 0.0;

  std::size_t cycle_count() const { return records.size(); }
};

/// Classifies the knot carried by every simple cycle of the diagram's
/// underlying graph. Throws InputError if the diagram does not validate.
CertificationReport certify(const Diagram& d, const std::string& diagram_id, const CertifyOptions& options = {});

/// Report as JSON. Wall time is left out so the report is byte-stable.
nlohmann::json to_json(const CertificationReport& report);
std::string format_table(const CertificationReport& report);

struct LinkRecord {
  Cycle first;
  Cycle second;
  std::vector<CrossingId> crossings;  // crossings between the two cycles
  int linking_number = 0;
};

struct LinkReport {
  std::string diagram_id;
  std::size_t pairs_examined = 0;
  std::vector<LinkRecord> linked;  // pairs with nonzero linking number

  bool has_odd_pair() const;
};

/// Linking number of every vertex-disjoint cycle pair; keeps the nonzero ones.
LinkReport find_links(const Diagram& d, const std::string& diagram_id, unsigned threads = 1);

nlohmann::json to_json(const LinkReport& report);
std::string format_table(const LinkReport& report);

}  // namespace knotcert
