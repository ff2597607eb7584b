#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "knotcert/graph.hpp"

namespace knotcert {

/// {"vertices": [...], "edges": [["c","d"], ...]}, everything lexicographic.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json script_to_json(const MoveScript& s);
MoveScript script_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file. Missing files and syntax errors become
/// FormatError (syntax errors carry the byte offset).
nlohmann::json read_json_file(const std::filesystem::path& path);
nlohmann::json parse_json_text(const std::string& text);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace knotcert
