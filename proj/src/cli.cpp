#include "clcc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clcc/error.hpp"
#include "clcc/hyperbolicity.hpp"
#include "clcc/io.hpp"

namespace clcc {

namespace {

// Exit status 1 with a report already written.
struct CheckFailed {};

struct Input {
  std::string source;
  json data;
};

Input read_input(const std::string& path, std::istream& in) {
  std::string textual;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    textual = buf.str();
  } else {
    std::ifstream file(path);
    if (!file) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    textual = buf.str();
  }
  try {
    return {path, json::parse(textual)};
  } catch (const json::parse_error& e) {
    throw Error("malformed JSON in '" + path + "': " + e.what());
  }
}

enum class Kind { Pair, Clcc, CubeComplex, Coloured, Simplicial, Pocset };

Kind kind_of(const json& j) {
  if (!j.is_object()) throw Error("input must be a JSON object");
  if (j.contains("a") && j.contains("b")) return Kind::Pair;
  if (j.contains("cubes")) return j.contains("n") ? Kind::Clcc : Kind::CubeComplex;
  if (j.contains("maximal_simplices")) return j.contains("n") ? Kind::Coloured : Kind::Simplicial;
  if (j.contains("pairs")) return Kind::Pocset;
  throw Error("unrecognised input: expected a pair, complex, CLCC or pocset");
}

std::optional<Clcc> as_clcc(const json& j) {
  switch (kind_of(j)) {
    case Kind::Pair: {
      auto [a, b] = pair_from_json(j);
      return build_clcc(std::move(a), std::move(b));
    }
    case Kind::Clcc: return clcc_from_json(j);
    default: return std::nullopt;
  }
}

// Any input with cells: CLCC (from pair or export), cube complex, or simplicial complex.
struct Host {
  std::optional<Clcc> clcc;
  std::optional<CubeComplex> cubes;
  std::optional<SimplicialComplex> simplicial;

  const CellComplex& cells() const {
    if (clcc) return clcc->complex().cells();
    if (cubes) return cubes->cells();
    return simplicial->cells();
  }
  const CubeComplex* cube_complex() const {
    if (clcc) return &clcc->complex();
    if (cubes) return &*cubes;
    return nullptr;
  }
};

Host as_host(const json& j) {
  Host h;
  switch (kind_of(j)) {
    case Kind::Pair:
    case Kind::Clcc: h.clcc = as_clcc(j); break;
    case Kind::CubeComplex: h.cubes = cube_complex_from_json(j); break;
    case Kind::Coloured: h.simplicial = coloured_from_json(j).uncoloured(); break;
    case Kind::Simplicial: h.simplicial = simplicial_from_json(j); break;
    case Kind::Pocset: throw Error("expected a complex, got a pocset");
  }
  return h;
}

SimplicialComplex named_or_file(const std::string& arg, std::istream& in) {
  if (arg == "boundary-tetrahedron") return tetrahedron_boundary();
  if (arg == "seven-vertex-torus") return seven_vertex_torus();
  if (arg == "triangle") return SimplicialComplex::from_simplices({"1", "2", "3"}, {{"1", "2", "3"}});
  if (arg == "edge") return SimplicialComplex::from_simplices({"1", "2"}, {{"1", "2"}});
  const json j = read_input(arg, in).data;
  if (kind_of(j) == Kind::Coloured) return coloured_from_json(j).uncoloured();
  return simplicial_from_json(j);
}

BarycentricColours parse_colours(const std::vector<int>& v) {
  if (v.size() != 3) throw Error("barycentric colours are three integers V,E,F");
  return {v[0], v[1], v[2]};
}

json square_json(const SquareWitness& w) { return {{"ids", w.ids}, {"colours", w.colours}}; }

void write(std::ostream& out, const std::string& path, const json& j) {
  if (path.empty() || path == "-") {
    out << canonical(j);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  file << canonical(j);
}

json betti_json(const std::vector<long long>& b) { return json(b); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cube complexes with coupled links", "clcc"};
  app.require_subcommand(1);
  bool timings = false;
  bool text = false;
  std::string out_path;
  app.add_flag("--timings", timings, "Add timings to the report");
  app.add_flag("--text", text, "Human-readable summary instead of JSON");
  app.add_option("--out,-o", out_path, "Output file (default stdout)");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate an example pair or complex");
  gen->require_subcommand(1);
  int ka = 2, kb = 2, k = 2, n = 0;
  std::vector<int> cycle_colours{1, 2};
  std::string gamma_arg, lambda_arg;
  std::vector<int> gamma_colours{1, 2, 3}, lambda_colours{2, 1, 3};
  auto* g_surface = gen->add_subcommand("surface", "Pair of even cycles");
  g_surface->add_option("--ka", ka)->check(CLI::PositiveNumber);
  g_surface->add_option("--kb", kb)->check(CLI::PositiveNumber);
  auto* g_salvetti = gen->add_subcommand("salvetti", "Salvetti pair of a flag complex");
  g_salvetti->add_option("--gamma", gamma_arg, "Simplicial complex file or built-in name")->required();
  auto* g_racg = gen->add_subcommand("racg", "Right-angled Coxeter pair of a flag complex");
  g_racg->add_option("--gamma", gamma_arg, "Simplicial complex file or built-in name")->required();
  auto* g_bary = gen->add_subcommand("barycentric", "Barycentric pair of two 2-complexes");
  g_bary->add_option("--gamma", gamma_arg)->required();
  g_bary->add_option("--lambda", lambda_arg)->required();
  g_bary->add_option("--gamma-colours", gamma_colours)->delimiter(',')->expected(3);
  g_bary->add_option("--lambda-colours", lambda_colours)->delimiter(',')->expected(3);
  auto* g_cycle = gen->add_subcommand("cycle", "Even cycle on two colours");
  g_cycle->add_option("--k", k)->check(CLI::PositiveNumber);
  g_cycle->add_option("--colours", cycle_colours)->delimiter(',')->expected(2);
  g_cycle->add_option("--n", n, "Colour count (default: largest colour)");
  auto* g_cross = gen->add_subcommand("crosspolytope", "Boundary of the cross-polytope");
  g_cross->add_option("--n", n)->required();

  std::string input = "-";
  auto* build = app.add_subcommand("build", "Build the CLCC of a pair");
  build->add_option("input", input);

  std::vector<std::string> check_args;
  bool c_flag = false, c_large = false, c_obes = false, c_pair = false, c_smart = false, c_npc = false;
  auto* check = app.add_subcommand("check", "Check a predicate (flag|5large|obes|pairwise|smart|npc)");
  check->add_option("args", check_args, "[kind] input");
  check->add_flag("--flag", c_flag);
  check->add_flag("--5large,--five-large", c_large);
  check->add_flag("--obes", c_obes);
  check->add_flag("--pairwise", c_pair);
  check->add_flag("--smart", c_smart);
  check->add_flag("--npc", c_npc);

  std::string cube_id;
  auto* link = app.add_subcommand("link", "Link of a cube, by the join formula and directly");
  link->add_option("input", input);
  link->add_option("--cube", cube_id, "Cube id")->required();

  auto* connect = app.add_subcommand("connect", "Connectedness by both engines");
  connect->add_option("input", input);

  bool i_chi = false, i_dim = false, i_links = false;
  auto* invariants = app.add_subcommand("invariants", "Euler characteristic, dimension, link types");
  invariants->add_option("input", input);
  invariants->add_flag("--chi", i_chi);
  invariants->add_flag("--dim", i_dim);
  invariants->add_flag("--links", i_links);

  bool reduced = false;
  auto* homology = app.add_subcommand("homology", "Z/2 Betti numbers");
  homology->add_option("input", input);
  homology->add_flag("--reduced", reduced, "Show reduced Betti numbers in the summary");

  std::string omega_a, omega_b;
  auto* cycle = app.add_subcommand("cycle", "Cycle of the CLCC from chains on both sides");
  cycle->add_option("input", input);
  cycle->add_option("--omega-a", omega_a, "Chain on the A side (default: all top simplices)");
  cycle->add_option("--omega-b", omega_b, "Chain on the B side (default: all top simplices)");

  auto* planes = app.add_subcommand("hyperplanes", "Hyperplanes, directions, crossing graph");
  planes->add_option("input", input);

  auto* sag = app.add_subcommand("sageev", "Cube complex of a pocset");
  sag->add_option("input", input);

  auto* duality = app.add_subcommand("duality", "Roller duality check");
  duality->add_option("input", input);

  bool moussong_mode = false, bary_mode = false;
  auto* cert = app.add_subcommand("certify", "Hyperbolicity certificate");
  cert->add_option("input", input);
  cert->add_flag("--moussong", moussong_mode, "Input is a flag complex; apply the Coxeter criterion");
  cert->add_flag("--barycentric", bary_mode, "Certify the barycentric pair of --gamma and --lambda");
  cert->add_option("--gamma", gamma_arg);
  cert->add_option("--lambda", lambda_arg);
  cert->add_option("--gamma-colours", gamma_colours)->delimiter(',')->expected(3);
  cert->add_option("--lambda-colours", lambda_colours)->delimiter(',')->expected(3);

  auto* exp = app.add_subcommand("export", "Re-emit any input as canonical JSON");
  exp->add_option("input", input);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  for (auto* sub : gen->get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  std::string summary;
  int status = 0;
  auto finish = [&](const std::string& command, const json& inputs, json result) {
    report = {{"command", command}, {"inputs", inputs}, {"result", std::move(result)}};
  };

  try {
    if (gen->parsed()) {
      json artifact;
      if (g_surface->parsed()) {
        artifact = to_json(gen_surface_pair(ka, kb));
      } else if (g_salvetti->parsed()) {
        artifact = to_json(gen_salvetti_pair(named_or_file(gamma_arg, in)));
      } else if (g_racg->parsed()) {
        artifact = to_json(gen_racg_pair(named_or_file(gamma_arg, in)));
      } else if (g_bary->parsed()) {
        artifact = to_json(gen_barycentric_pair(named_or_file(gamma_arg, in), parse_colours(gamma_colours),
                                                named_or_file(lambda_arg, in), parse_colours(lambda_colours)));
      } else if (g_cycle->parsed()) {
        artifact = to_json(gen_cycle(k, {cycle_colours.at(0), cycle_colours.at(1)}, n));
      } else {
        artifact = to_json(gen_cross_polytope(n));
      }
      write(out, out_path, artifact);
      return 0;
    }

    if (build->parsed()) {
      const Input src = read_input(input, in);
      auto [a, b] = pair_from_json(src.data);
      write(out, out_path, to_json(build_clcc(std::move(a), std::move(b))));
      return 0;
    }

    if (exp->parsed()) {
      const Input src = read_input(input, in);
      json artifact;
      switch (kind_of(src.data)) {
        case Kind::Pair: artifact = to_json(pair_from_json(src.data)); break;
        case Kind::Clcc: artifact = to_json(clcc_from_json(src.data)); break;
        case Kind::CubeComplex: artifact = cube_complex_to_json(cube_complex_from_json(src.data)); break;
        case Kind::Coloured: artifact = to_json(coloured_from_json(src.data)); break;
        case Kind::Simplicial: artifact = to_json(simplicial_from_json(src.data)); break;
        case Kind::Pocset: artifact = to_json(pocset_from_json(src.data)); break;
      }
      write(out, out_path, artifact);
      return 0;
    }

    if (sag->parsed()) {
      const Input src = read_input(input, in);
      const Pocset s = pocset_from_json(src.data);
      const SageevComplex built = sageev(s);
      json artifact = cube_complex_to_json(built.complex);
      write(out, out_path, artifact);
      return 0;
    }

    if (check->parsed()) {
      std::string kind;
      if (c_flag) kind = "flag";
      if (c_large) kind = "5large";
      if (c_obes) kind = "obes";
      if (c_pair) kind = "pairwise";
      if (c_smart) kind = "smart";
      if (c_npc) kind = "npc";
      std::vector<std::string> rest = check_args;
      static const std::set<std::string> kinds{"flag", "5large", "obes", "pairwise", "smart", "npc"};
      if (!rest.empty() && kinds.count(rest.front())) {
        kind = rest.front();
        rest.erase(rest.begin());
      }
      if (kind.empty()) {
        err << "usage error: check needs a kind (flag|5large|obes|pairwise|smart|npc)\n";
        return 2;
      }
      if (rest.size() > 1) {
        err << "usage error: check takes one input\n";
        return 2;
      }
      const Input src = read_input(rest.empty() ? "-" : rest.front(), in);
      json result;
      bool holds = true;
      auto single = [&](const ColoredComplex& c) -> json {
        if (kind == "flag") {
          auto r = is_flag(c);
          holds = holds && r.flag;
          return r.flag ? json{{"holds", true}} : json{{"holds", false}, {"witness", r.witness}};
        }
        auto r = kind == "5large" ? is_5_large(c) : is_obes(c);
        holds = holds && r.holds;
        return r.holds ? json{{"holds", true}} : json{{"holds", false}, {"witness", square_json(*r.witness)}};
      };
      const Kind k_in = kind_of(src.data);
      if (kind == "flag" || kind == "5large" || kind == "obes") {
        if (k_in == Kind::Pair) {
          auto [a, b] = pair_from_json(src.data);
          result = {{"A", single(a)}, {"B", single(b)}};
        } else if (k_in == Kind::Simplicial && kind != "obes") {
          const auto s = simplicial_from_json(src.data);
          if (kind == "flag") {
            auto r = check_flag(s);
            holds = r.flag;
            result = {{"holds", r.flag}};
            if (!r.flag) result["witness"] = s.simplex_labels(r.witness);
          } else {
            auto squares = find_empty_squares(s);
            holds = squares.empty();
            result = {{"holds", holds}};
            if (!holds) {
              std::vector<std::string> ids;
              for (int v : squares.front().cycle) ids.push_back(s.label(v));
              result["witness"] = ids;
            }
          }
        } else {
          result = single(coloured_from_json(src.data));
        }
        result["holds"] = holds;
      } else {
        auto [a, b] = pair_from_json(src.data);
        if (kind == "pairwise") {
          auto r = pairwise_5_large(a, b);
          holds = r.holds;
          result = {{"holds", r.holds}};
          if (!r.holds)
            result["witness"] = {{"colours", {r.colours->first, r.colours->second}},
                                 {"A", square_json(*r.witness_a)},
                                 {"B", square_json(*r.witness_b)}};
        } else if (kind == "smart") {
          auto r = smartly_paired(a, b);
          auto d = doubly_smartly_paired(a, b);
          holds = r.holds;
          result = {{"holds", r.holds}, {"doubly", d.holds}};
          if (!r.holds) result["witness"] = {{"side", std::string(1, r.side)}, {"simplex", r.simplex}};
        } else {
          auto r = is_npc(a, b);
          holds = r.nonpositively_curved;
          result = {{"holds", holds},
                    {"method", r.method == NpcReport::Method::Flagness ? "flagness" : "vertex-links"}};
          if (!holds) result["witness"] = {{"vertex", *r.bad_vertex}, {"clique", r.bad_clique}};
        }
      }
      finish("check " + kind, {{"input", digest(src.data)}}, result);
      summary = kind + ": " + (holds ? "holds" : "fails");
      if (!holds) status = 1;
    } else if (link->parsed()) {
      const Input src = read_input(input, in);
      const Host h = as_host(src.data);
      const CubeComplex* cx = h.cube_complex();
      if (!cx) throw Error("link needs a cube complex");
      std::optional<CubeRef> cube;
      for (int d = 0; d <= cx->dimension() && !cube; ++d)
        if (auto i = cx->find(d, cube_id)) cube = CubeRef{d, *i};
      if (!cube) throw Error("no cube '" + cube_id + "'");
      const SimplicialComplex direct = cx->link(*cube);
      json result = {{"cube", cube_id}, {"dim", cube->dim}, {"link", to_json(direct)},
                     {"type", to_string(classify_link(direct))}};
      if (h.clcc) {
        const SimplicialComplex joined = link_of_cube(*h.clcc, *cube);
        result["join_formula_agrees"] = joined == direct;
      }
      finish("link", {{"input", digest(src.data)}}, result);
      summary = "link of " + cube_id + ": " + std::to_string(direct.vertex_count()) + " vertices, " +
                to_string(classify_link(direct));
    } else if (connect->parsed()) {
      const Input src = read_input(input, in);
      auto [a, b] = pair_from_json(src.data);
      const Clcc x = build_clcc(a, b);
      const bool bfs = is_connected_bfs(x.complex());
      json result = {{"bfs", bfs}, {"smartly_paired", smartly_paired(a, b).holds}};
      auto [pa, pb] = prune_to_smart_pair(a, b);
      const Clcc pruned = build_clcc(pa, pb);
      if (smartly_paired(pa, pb).holds) {
        const ConnGraph g = conn_graph(pruned);
        result["criterion"] = g.connected();
        result["graph"] = {{"nodes", g.nodes.size()}, {"edges", g.edges.size()}};
      } else {
        result["criterion"] = nullptr;
      }
      finish("connect", {{"input", digest(src.data)}}, result);
      summary = std::string("connected: ") + (bfs ? "yes" : "no");
    } else if (invariants->parsed()) {
      const Input src = read_input(input, in);
      const Host h = as_host(src.data);
      const bool all = !i_chi && !i_dim && !i_links;
      json result = json::object();
      if (all || i_chi) result["chi"] = h.cells().euler_characteristic();
      if (all || i_dim) result["dim"] = {{"dim", h.cells().dimension()}, {"pure", h.cells().is_pure()}};
      if ((all || i_links) && h.cube_complex()) {
        std::map<std::string, int> tally;
        for (auto t : classify_vertex_links(*h.cube_complex())) ++tally[to_string(t)];
        result["links"] = tally;
      }
      json counts = json::array();
      for (int d = 0; d <= h.cells().dimension(); ++d) counts.push_back(h.cells().count(d));
      result["cells"] = counts;
      if (h.cube_complex()) result["connected"] = is_connected_bfs(*h.cube_complex());
      finish("invariants", {{"input", digest(src.data)}}, result);
      summary = "cells " + counts.dump() + (result.contains("chi") ? ", chi " + result["chi"].dump() : "");
    } else if (homology->parsed()) {
      const Input src = read_input(input, in);
      const Host h = as_host(src.data);
      const auto unred = betti(h.cells(), false);
      const auto red = betti(h.cells(), true);
      finish("homology", {{"input", digest(src.data)}}, {{"betti", betti_json(unred)}, {"reduced_betti", betti_json(red)}});
      summary = std::string(reduced ? "reduced " : "") + "betti " + betti_json(reduced ? red : unred).dump();
    } else if (cycle->parsed()) {
      const Input src = read_input(input, in);
      auto [a, b] = pair_from_json(src.data);
      const Clcc x = build_clcc(a, b);
      auto side_chain = [&](const ColoredComplex& c, const std::string& path) {
        const CellComplex& cells = c.uncoloured().cells();
        if (path.empty()) return all_cells(cells, cells.dimension());
        return chain_from_json(cells, read_input(path, in).data);
      };
      const Chain ca = side_chain(a, omega_a);
      const Chain cb = side_chain(b, omega_b);
      const Chain c = clcc_cycle(x, ca, cb);
      const CellComplex& host = x.complex().cells();
      const bool cyc = is_cycle(host, c);
      json result = {{"chain", to_json(host, c)},
                     {"inputs_are_cycles", {is_cycle(a.uncoloured().cells(), ca), is_cycle(b.uncoloured().cells(), cb)}},
                     {"is_cycle", cyc}};
      if (cyc) result["nonzero_class"] = !is_boundary(host, c);
      finish("cycle", {{"input", digest(src.data)}}, result);
      summary = "cycle of dimension " + std::to_string(c.dim) + " with " + std::to_string(c.cells.size()) +
                " cubes" + (cyc ? "" : " (not a cycle)");
    } else if (planes->parsed()) {
      const Input src = read_input(input, in);
      const Host h = as_host(src.data);
      const CubeComplex* cx = h.cube_complex();
      if (!cx) throw Error("hyperplanes need a cube complex");
      const auto hs = hyperplanes(*cx);
      json list = json::array();
      for (const auto& p : hs) {
        std::vector<std::string> ids;
        for (int e : p.edges) ids.push_back(cx->id({1, e}));
        list.push_back({{"id", p.id}, {"edges", ids}});
      }
      json result = {{"hyperplanes", list}, {"crossing", crossing_graph(*cx, hs)}};
      if (cx->has_origin()) {
        const auto d = directions(*cx, hs);
        result["directions"] = {{"colour", d.colour}, {"valid", d.valid}};
      }
      finish("hyperplanes", {{"input", digest(src.data)}}, result);
      summary = std::to_string(hs.size()) + " hyperplanes";
    } else if (duality->parsed()) {
      const Input src = read_input(input, in);
      const Host h = as_host(src.data);
      const CubeComplex* cx = h.cube_complex();
      if (!cx) throw Error("duality needs a cube complex");
      const auto r = roller_duality_check(*cx);
      json result = {{"holds", r.holds}};
      if (!r.holds) result["reason"] = r.reason;
      finish("duality", {{"input", digest(src.data)}}, result);
      summary = std::string("duality: ") + (r.holds ? "holds" : "fails (" + r.reason + ")");
      if (!r.holds) status = 1;
    } else if (cert->parsed()) {
      Certificate c;
      json inputs;
      if (bary_mode) {
        if (gamma_arg.empty() || lambda_arg.empty()) {
          err << "usage error: --barycentric needs --gamma and --lambda\n";
          return 2;
        }
        c = certify_barycentric(named_or_file(gamma_arg, in), parse_colours(gamma_colours),
                                named_or_file(lambda_arg, in), parse_colours(lambda_colours));
        inputs = {{"gamma", gamma_arg}, {"lambda", lambda_arg}};
      } else {
        const Input src = read_input(input, in);
        inputs = {{"input", digest(src.data)}};
        if (moussong_mode) {
          const Kind k_in = kind_of(src.data);
          c = moussong(k_in == Kind::Coloured ? coloured_from_json(src.data).uncoloured()
                                              : simplicial_from_json(src.data));
        } else {
          auto [a, b] = pair_from_json(src.data);
          c = certify(a, b);
        }
      }
      finish("certify", inputs, c.to_json());
      summary = to_string(c.verdict) + (c.rule.empty() ? "" : " (" + c.rule + ")");
    }
  } catch (const Error& e) {
    err << canonical(json{{"error", e.what()}});
    return 1;
  } catch (const json::exception& e) {
    err << canonical(json{{"error", std::string("bad JSON input: ") + e.what()}});
    return 1;
  }

  if (timings) {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["timings"] = {{"seconds", elapsed}};
  }
  const bool to_file = !out_path.empty() && out_path != "-";
  if (to_file) write(out, out_path, report);
  if (text) out << summary << "\n";
  else if (!to_file) write(out, out_path, report);
  return status;
}

}  // namespace clcc
