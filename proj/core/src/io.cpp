#include "homcx/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "homcx/error.hpp"

namespace homcx {

namespace {

std::optional<std::size_t> parse_size(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "cannot read " + path.string());
  return ss.str();
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Line of the k-th element of the "edges" array, found by bracket depth.
std::size_t edge_line(std::string_view text, std::size_t k) {
  auto key = text.find("\"edges\"");
  if (key == std::string_view::npos) return 0;
  auto open = text.find('[', key);
  if (open == std::string_view::npos) return 0;
  int depth = 0;
  std::size_t seen = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == '[') {
      if (++depth == 2 && seen++ == k) return line_col(text, i).first;
    } else if (text[i] == ']') {
      if (--depth == 0) break;
    }
  }
  return 0;
}

}  // namespace

std::optional<Graph> preset_graph(std::string_view name) {
  if (name == "petersen") return make_petersen();
  if (name.size() < 2) return std::nullopt;
  const char kind = name[0];
  const auto rest = name.substr(1);
  if (kind == 'K') {
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      auto a = parse_size(rest.substr(0, comma));
      auto b = parse_size(rest.substr(comma + 1));
      if (!a || !b || *a == 0 || *b == 0) return std::nullopt;
      return make_complete_bipartite(*a, *b);
    }
  }
  auto k = parse_size(rest);
  if (!k) return std::nullopt;
  switch (kind) {
    case 'C': return *k >= 3 ? std::optional<Graph>(make_cycle(*k)) : std::nullopt;
    case 'P': return *k >= 1 ? std::optional<Graph>(make_path(*k)) : std::nullopt;
    case 'K': return *k >= 1 ? std::optional<Graph>(make_complete(*k)) : std::nullopt;
    default: return std::nullopt;
  }
}

Graph parse_graph_json(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(ErrorCode::Parse, where + ":" + std::to_string(line) + ":" + std::to_string(col) +
                               ": malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    fail(ErrorCode::Parse, where + ": expected an object with \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_unsigned()) fail(ErrorCode::Parse, where + ": \"n\" must be a nonnegative integer");
  const auto n = doc["n"].get<std::size_t>();
  if (!doc["edges"].is_array()) fail(ErrorCode::Parse, where + ": \"edges\" must be an array");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  const auto& arr = doc["edges"];
  for (std::size_t k = 0; k < arr.size(); ++k) {
    auto bad = [&](const std::string& why) -> void {
      const auto line = edge_line(text, k);
      fail(ErrorCode::InvalidGraph,
           where + (line ? ":" + std::to_string(line) : std::string()) + ": edge " + std::to_string(k) +
               ": " + why);
    };
    const auto& e = arr[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      bad("expected a pair of vertex indices");
    }
    const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u >= n || v >= n) bad("vertex out of range");
    if (u == v) bad("loop");
    const Edge canon{Vertex(std::min(u, v)), Vertex(std::max(u, v))};
    if (!seen.insert(canon).second) bad("duplicate edge");
    edges.push_back(canon);
  }
  return Graph(n, edges);
}

Graph load_graph(const std::string& source) {
  if (auto g = preset_graph(source)) return std::move(*g);
  const std::filesystem::path p(source);
  if (!std::filesystem::exists(p)) fail(ErrorCode::Io, "no preset or file named " + source);
  return parse_graph_json(read_file(p), source);
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    auto v = parse_size(piece);
    if (!v || *v > 0xffffffffu) fail(ErrorCode::Parse, "bad vertex list \"" + std::string(text) + "\"");
    out.push_back(Vertex(*v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<Vertex> load_vertex_map(const std::string& source) {
  const std::filesystem::path p(source);
  if (!std::filesystem::exists(p)) return parse_vertex_list(source);
  const auto text = read_file(p);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(ErrorCode::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
  if (doc.is_object() && doc.contains("map")) doc = doc["map"];
  if (!doc.is_array()) fail(ErrorCode::Parse, source + ": expected an array of vertices");
  std::vector<Vertex> out;
  for (const auto& x : doc) {
    if (!x.is_number_unsigned()) fail(ErrorCode::Parse, source + ": vertices must be nonnegative integers");
    out.push_back(x.get<Vertex>());
  }
  return out;
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

json to_json(const Walk& w) { return w.vertices(); }

json to_json(const SetValuedHom& phi) { return phi.sets(); }

json to_json(const EfElement& phi) {
  json sets = json::object();
  for (std::size_t u = 0; u < phi.sets().size(); ++u) {
    json walks = json::array();
    for (const auto& w : phi.sets()[u]) walks.push_back(to_json(w));
    sets[std::to_string(u)] = std::move(walks);
  }
  return {{"f", phi.base().map()}, {"phi", std::move(sets)}};
}

json to_json(const CoveringReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"direction", v.direction},
                          {"phi", to_json(v.phi)},
                          {"psi", to_json(v.psi)},
                          {"lifts", v.lifts}});
  }
  return {{"max_norm", r.max_norm},       {"window", r.window},
          {"elements", r.elements},       {"tested", r.tested},
          {"down_checks", r.down_checks}, {"up_checks", r.up_checks},
          {"formula_checks", r.formula_checks}, {"violations", std::move(violations)}};
}

json to_json(const HomotopyType& t) {
  return {{"betti", json::array({t.betti.at(0), t.betti.at(1), t.betti.at(2)})},
          {"case", to_string(t.case_tag)},
          {"expected_rank", t.expected_rank},
          {"circles", t.circles},
          {"elements", t.elements},
          {"homs", t.homs},
          {"dimension", t.dimension},
          {"euler", t.euler},
          {"representative", {{"map", t.representative}}}};
}

json to_json(const CaseReport& r) {
  json comps = json::array();
  for (const auto& t : r.components) comps.push_back(to_json(t));
  return {{"kind", to_string(r.kind)},
          {"domain_bipartite", r.g_bipartite},
          {"codomain_bipartite", r.h_bipartite},
          {"hxk2_components", r.hxk2_components},
          {"required_hxk2", r.required_hxk2},
          {"components", std::move(comps)}};
}

json to_json(const std::vector<ComponentSummary>& census) {
  json comps = json::array();
  for (const auto& c : census) {
    comps.push_back({{"size", c.size},
                     {"homs", c.homs},
                     {"betti", json::array({c.betti.at(0), c.betti.at(1), c.betti.at(2)})},
                     {"k2_factoring", c.k2_factoring},
                     {"representative", {{"map", c.representative}}},
                     {"dimension", c.dimension},
                     {"euler", c.euler}});
  }
  return comps;
}

json to_json(const PiWindow& w) {
  json vertices = json::array();
  for (std::size_t i = 0; i < w.walks.size(); ++i) {
    vertices.push_back({{"walk", to_json(w.walks[i])}, {"interior", bool(w.interior[i])}});
  }
  json edges = json::array();
  for (auto [u, v] : w.graph.edges()) edges.push_back({u, v});
  return {{"max_length", w.lmax}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json to_json(const TreeCover& c) {
  json vertices = json::array();
  for (const auto& w : c.vertices()) vertices.push_back({{"walk", to_json(w)}, {"projection", w.target()}});
  json edges = json::array();
  for (auto [u, v] : c.tree().edges()) edges.push_back({u, v});
  return {{"basepoint", c.basepoint()},
          {"radius", c.radius()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

json to_json(const K2ProductReport& r) {
  return {{"product", to_json(r.product)},
          {"bipartite", r.bipartite},
          {"components", r.components},
          {"isomorphisms", r.isomorphisms}};
}

std::string dump_report(const json& report) { return report.dump() + "\n"; }

void emit_report(const json& report, const std::filesystem::path& path) {
  const auto text = dump_report(report);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) fail(ErrorCode::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorCode::Io, "cannot move report into place at " + path.string());
  }
}

}  // namespace homcx
