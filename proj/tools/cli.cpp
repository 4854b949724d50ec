#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "homcx/classifier.hpp"
#include "homcx/e_f.hpp"
#include "homcx/error.hpp"
#include "homcx/graph.hpp"
#include "homcx/graph_covers.hpp"
#include "homcx/io.hpp"
#include "homcx/pi_graph.hpp"
#include "homcx/verify.hpp"

namespace homcx::cli {

namespace {

struct Config {
  std::string domain, codomain, graph, seed_hom, out, suite = "all";
  std::size_t max_norm = 6, radius = 4, basepoint = 0;
  std::optional<std::size_t> cap;
  std::uint64_t seed = 0;
  bool covering = false;
};

struct Outcome {
  json report;
  int status = 0;
};

int exit_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvariantViolation: return 2;
    case ErrorCode::NotSquareFree:
    case ErrorCode::EmptyHomSet:
    case ErrorCode::NotConnected: return 3;
    default: return 1;
  }
}

json graph_meta(const Graph& g) {
  return {{"n", g.order()},
          {"m", g.size()},
          {"connected", is_connected(g)},
          {"bipartite", is_bipartite(g).has_value()},
          {"square_free", is_square_free(g)}};
}

std::size_t cap_of(const Config& c) { return c.cap.value_or(default_cap()); }

json rejection(const Error& e) { return {{"rejected", std::string(to_string(e.code()))}, {"message", e.what()}}; }

GraphHom seed_or_least(const Config& c, const Graph& g, const Graph& h) {
  if (!c.seed_hom.empty()) return GraphHom(g, h, load_vertex_map(c.seed_hom));
  auto homs = enumerate_graph_homs(g, h);
  if (homs.empty()) fail(ErrorCode::EmptyHomSet, "no homomorphism from the domain to the codomain");
  return homs.front();
}

Outcome cmd_check(const Config& c) {
  const Graph h = load_graph(c.graph);
  if (auto sq = find_square(h)) return {{{"square_free", false}, {"witness", *sq}}, 3};
  return {{{"square_free", true}}, 0};
}

Outcome cmd_product(const Config& c) {
  if (!c.graph.empty()) return {to_json(times_k2(load_graph(c.graph))), 0};
  const Graph g = load_graph(c.domain), h = load_graph(c.codomain);
  return {{{"product", to_json(product(g, h))}}, 0};
}

Outcome cmd_census(const Config& c) {
  const Graph g = load_graph(c.domain), h = load_graph(c.codomain);
  json meta = {{"domain", graph_meta(g)}, {"codomain", graph_meta(h)}};
  const auto census = component_census(g, h, cap_of(c));
  if (is_connected(g) && is_square_free(h) && !census.empty()) {
    const auto rep = full_case_report(g, h, cap_of(c));
    meta["hxk2_components"] = rep.hxk2_components;
    meta["required_hxk2"] = rep.required_hxk2;
  }
  return {{{"components", to_json(census)}, {"graph_meta", std::move(meta)}}, 0};
}

Outcome cmd_classify(const Config& c) {
  const Graph g = load_graph(c.domain), h = load_graph(c.codomain);
  const auto v = validate_instance(g, h);
  if (v.kind == InstanceKind::ProductDecomposition) {
    return {{{"kind", to_string(v.kind)}, {"domain_components", v.g_components}}, 3};
  }
  if (c.seed_hom.empty()) return {to_json(full_case_report(g, h, cap_of(c))), 0};
  const GraphHom f(g, h, load_vertex_map(c.seed_hom));
  return {{{"kind", to_string(v.kind)},
           {"components", json::array({to_json(classify_component(g, h, f, cap_of(c)))})}},
          0};
}

Outcome cmd_ef(const Config& c) {
  if (c.max_norm % 2 != 0) fail(ErrorCode::Parse, "--max-norm must be even");
  const Graph g = load_graph(c.domain), h = load_graph(c.codomain);
  const GraphHom f = seed_or_least(c, g, h);
  if (!is_square_free(h)) fail(ErrorCode::NotSquareFree, "codomain contains a 4-cycle");
  const auto elements = enumerate_Ef_bounded(f, c.max_norm, cap_of(c));
  json list = json::array();
  for (const auto& phi : elements) list.push_back(to_json(phi));
  json report = {{"f", f.map()}, {"max_norm", c.max_norm}, {"count", elements.size()}, {"elements", list}};
  int status = 0;
  if (c.covering) {
    CoveringOptions opts;
    opts.cap = cap_of(c);
    const auto cov = check_poset_covering_local(f, c.max_norm, opts);
    report["covering"] = to_json(cov);
    if (!cov.violations.empty()) status = 2;
  }
  return {std::move(report), status};
}

Outcome cmd_cover(const Config& c) {
  const Graph g = load_graph(c.graph);
  const TreeCover cover(g, Vertex(c.basepoint), c.radius);
  return {to_json(cover), 0};
}

Outcome cmd_pi(const Config& c) {
  const Graph h = load_graph(c.graph);
  return {to_json(materialize_pi(h, c.radius)), 0};
}

Outcome cmd_verify(const Config& c) {
  const auto results = run_suites(c.suite, c.seed);
  json suites = json::array();
  bool ok = true;
  for (const auto& r : results) {
    suites.push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}});
    ok = ok && r.ok();
  }
  return {{{"seed", c.seed}, {"suites", std::move(suites)}, {"ok", ok}}, ok ? 0 : 2};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homotopy types of Hom complexes into square-free graphs", "homcx"};
  app.require_subcommand(1);
  Config c;

  auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out, "Report path (default: stdout)"); };
  auto add_cap = [&](CLI::App* s) {
    s->add_option("--cap", c.cap, "Explosion cap; overrides HOMCX_CAP");
  };
  auto add_pair = [&](CLI::App* s) {
    s->add_option("--domain", c.domain, "Domain graph: preset or JSON file")->required();
    s->add_option("--codomain", c.codomain, "Codomain graph: preset or JSON file")->required();
  };

  auto* check = app.add_subcommand("check", "Test a graph for 4-cycles");
  check->add_option("--graph", c.graph, "Graph: preset or JSON file")->required();
  add_out(check);

  auto* prod = app.add_subcommand("product", "H x K2 for --graph, or G x H for --domain/--codomain");
  prod->add_option("--graph", c.graph, "Graph to multiply by K2");
  prod->add_option("--domain", c.domain, "Left factor");
  prod->add_option("--codomain", c.codomain, "Right factor");
  add_out(prod);

  auto* census = app.add_subcommand("census", "Every component of Hom(G,H) with Betti numbers");
  add_pair(census);
  add_cap(census);
  add_out(census);

  auto* classify = app.add_subcommand("classify", "Homotopy types of the components of Hom(G,H)");
  add_pair(classify);
  classify->add_option("--seed-hom", c.seed_hom, "Classify only the component of this homomorphism");
  add_cap(classify);
  add_out(classify);

  auto* ef = app.add_subcommand("ef", "Bounded enumeration of E_f");
  add_pair(ef);
  ef->add_option("--seed-hom", c.seed_hom, "Base homomorphism f (default: the least one)");
  ef->add_option("--max-norm", c.max_norm, "Norm bound (even)");
  ef->add_flag("--covering", c.covering, "Also run the local covering check");
  add_cap(ef);
  add_out(ef);

  auto* cover = app.add_subcommand("cover", "Truncated universal cover");
  cover->add_option("--graph", c.graph, "Graph: preset or JSON file")->required();
  cover->add_option("--basepoint", c.basepoint, "Basepoint vertex");
  cover->add_option("--radius", c.radius, "Truncation radius");
  add_out(cover);

  auto* pi = app.add_subcommand("pi", "Window of the graph of reduced walks");
  pi->add_option("--graph", c.graph, "Graph: preset or JSON file")->required();
  pi->add_option("--radius", c.radius, "Maximum walk length");
  add_out(pi);

  auto* verify = app.add_subcommand("verify", "Seeded invariant suites");
  verify->add_option("--suite", c.suite, "core, poset, ef, covers or all");
  verify->add_option("--seed", c.seed, "Random seed");
  add_out(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (prod->parsed() && c.graph.empty() && (c.domain.empty() || c.codomain.empty())) {
    err << "product: give --graph, or both --domain and --codomain\n";
    return 1;
  }

  Outcome result;
  try {
    if (check->parsed()) result = cmd_check(c);
    if (prod->parsed()) result = cmd_product(c);
    if (census->parsed()) result = cmd_census(c);
    if (classify->parsed()) result = cmd_classify(c);
    if (ef->parsed()) result = cmd_ef(c);
    if (cover->parsed()) result = cmd_cover(c);
    if (pi->parsed()) result = cmd_pi(c);
    if (verify->parsed()) result = cmd_verify(c);
  } catch (const Error& e) {
    err << "homcx: " << to_string(e.code()) << ": " << e.what() << "\n";
    const int status = exit_status(e.code());
    if (status != 3) return status;
    result = {rejection(e), status};
  } catch (const std::exception& e) {
    err << "homcx: " << e.what() << "\n";
    return 1;
  }

  try {
    if (c.out.empty()) {
      out << dump_report(result.report);
    } else {
      emit_report(result.report, c.out);
    }
  } catch (const Error& e) {
    err << "homcx: " << e.what() << "\n";
    return 1;
  }
  return result.status;
}

}  // namespace homcx::cli
