#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "homcx/classifier.hpp"
#include "homcx/e_f.hpp"
#include "homcx/graph.hpp"
#include "homcx/graph_covers.hpp"
#include "homcx/pi_graph.hpp"

namespace homcx {

using json = nlohmann::json;

/// Named graphs: C<k> (k >= 3), P<k> (k >= 1), K<k>, K<a>,<b>, petersen.
std::optional<Graph> preset_graph(std::string_view name);

/// {"n": int, "edges": [[u, v], ...]}. Parse errors carry line and column;
/// validation errors name the offending edge. Throws Parse or InvalidGraph.
Graph parse_graph_json(std::string_view text, std::string_view origin = "<input>");

/// A preset name, else a path to a graph JSON file. Throws Io, Parse or
/// InvalidGraph.
Graph load_graph(const std::string& source);

/// Comma-separated vertex list such as "0,1,2". Throws Parse.
std::vector<Vertex> parse_vertex_list(std::string_view text);

/// A vertex map given inline ("0,1"), as a JSON file holding an array, or as
/// {"map": [...]}. Throws Io or Parse.
std::vector<Vertex> load_vertex_map(const std::string& source);

json to_json(const Graph& g);
json to_json(const Walk& w);
json to_json(const SetValuedHom& phi);
json to_json(const EfElement& phi);
json to_json(const CoveringReport& r);
json to_json(const HomotopyType& t);
json to_json(const CaseReport& r);
json to_json(const std::vector<ComponentSummary>& census);
json to_json(const PiWindow& w);
json to_json(const TreeCover& c);
json to_json(const K2ProductReport& r);

/// Compact serialization with sorted keys and a trailing newline.
std::string dump_report(const json& report);

/// Writes dump_report(report) to `path` through a temporary file and a
/// rename, so readers never see partial output. Throws Io.
void emit_report(const json& report, const std::filesystem::path& path);

}  // namespace homcx
