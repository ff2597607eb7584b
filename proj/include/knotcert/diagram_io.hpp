#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "knotcert/diagram.hpp"

namespace knotcert {

/// Diagram file:
///   {"vertices":  {"c": ["a12", "a3", ...], ...},
///    "crossings": {"1": {"ends": ["a5", "a9", "a6", "a10"], "over": 0}, ...},
///    "edges":     [{"ends": ["e", "f"], "path": ["a5", "1", "a6", ...]}, ...]}
///
/// Parsing rejects syntax errors, wrong shapes, references to unknown
/// arcs or crossings, and arcs not attached exactly twice
/// (AttachmentError). Errors carry a JSON-pointer location.
Diagram diagram_from_json(const nlohmann::json& j);
Diagram parse_diagram(const std::string& text);
Diagram read_diagram(const std::filesystem::path& path);

/// Canonical form: sorted object keys, edges sorted by endpoint pair,
/// rotation lists and path directions kept as given.
nlohmann::json diagram_to_json(const Diagram& d);
std::string serialize_diagram(const Diagram& d);

}  // namespace knotcert
