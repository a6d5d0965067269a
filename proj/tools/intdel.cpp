// intdel: exact minimum interval vertex deletion, plus the recognition,
// obstruction, and enumeration subcommands built on the same library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "intdel/intdel.hpp"

using json = nlohmann::json;
using namespace intdel;

namespace {

enum ExitCode {
  ExitOk = 0,
  ExitNo = 1,
  ExitUsage = 2,
  ExitParse = 3,
  ExitInvariant = 4,
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_graph(in);
}

json witness_json(const WitnessClassification& cls) {
  if (cls.tag == WitnessClassification::IsHole)
    return json{{"kind", "hole"}, {"cycle", cls.hole->cycle}};
  if (cls.tag == WitnessClassification::IsAW) {
    const AsteroidalWitness& w = *cls.aw;
    return json{{"kind", aw_kind_name(w.kind)}, {"s", w.s},       {"centers", w.centers},
                {"l", w.l},                     {"r", w.r},       {"base", w.base}};
  }
  return json{{"kind", "not-minimal"}};
}

json report_skeleton(const std::string& command, const std::string& input) {
  return json{{"schema", "intdel/1"}, {"command", command}, {"input", input}};
}

void emit(const json& report, int code) {
  std::cout << report.dump(2) << "\n";
  std::exit(code);
}

int cmd_solve(const std::string& path, int k, bool as_json, bool prune, bool want_stats,
              int threads) {
  Graph g = load_graph(path);
  SolveOptions opts;
  opts.threads = threads;
  opts.prune = prune;
  auto t0 = std::chrono::steady_clock::now();
  auto [sol, stats] = solve(g, k, opts);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  if (as_json) {
    json rep = report_skeleton("solve", path);
    rep["k"] = k;
    if (sol.is_no)
      rep["result"] = {{"status", "no"}};
    else
      rep["result"] = {{"status", "solved"}, {"size", sol.q.size()}, {"vertices", sol.q}};
    rep["stats"] = {{"nodes", stats.nodes},
                    {"leaves", stats.leaves},
                    {"holeCoverFanout", stats.hole_cover_fanout},
                    {"wallMs", ms}};
    rep["exit"] = sol.is_no ? ExitNo : ExitOk;
    emit(rep, sol.is_no ? ExitNo : ExitOk);
  }
  if (sol.is_no) {
    std::cout << "NO\n";
  } else {
    for (size_t i = 0; i < sol.q.size(); ++i)
      std::cout << sol.q[i] << (i + 1 < sol.q.size() ? ' ' : '\n');
    if (sol.q.empty()) std::cout << "\n";
  }
  if (want_stats)
    std::cout << "# nodes " << stats.nodes << " leaves " << stats.leaves << " hole-cover-fanout "
              << stats.hole_cover_fanout << "\n";
  return sol.is_no ? ExitNo : ExitOk;
}

int cmd_recognize(const std::string& path, bool as_json) {
  Graph g = load_graph(path);
  auto path_opt = is_interval(g);
  if (as_json) {
    json rep = report_skeleton("recognize", path);
    if (path_opt) {
      rep["result"] = {{"status", "interval"}, {"cliquePath", path_opt->cliques}};
    } else {
      rep["result"] = {{"status", "not-interval"}};
    }
    rep["exit"] = path_opt ? ExitOk : ExitNo;
    emit(rep, path_opt ? ExitOk : ExitNo);
  }
  if (!path_opt) {
    std::cout << "not interval\n";
    return ExitNo;
  }
  std::cout << "interval\n";
  for (const auto& clique : path_opt->cliques) {
    for (size_t i = 0; i < clique.size(); ++i)
      std::cout << clique[i] << (i + 1 < clique.size() ? ' ' : '\n');
  }
  return ExitOk;
}

int cmd_obstruction(const std::string& path, bool as_json) {
  Graph g = load_graph(path);
  auto mfs = minimal_forbidden_set(g);
  json payload;
  int code;
  if (!mfs) {
    payload = json{{"kind", "none"}};
    code = ExitNo;
  } else {
    payload = witness_json(classify_witness(g, *mfs));
    code = ExitOk;
  }
  if (as_json) {
    json rep = report_skeleton("obstruction", path);
    rep["result"] = payload;
    rep["exit"] = code;
    emit(rep, code);
  }
  std::cout << payload.dump() << "\n";
  return code;
}

int cmd_hole_covers(const std::string& path, bool as_json) {
  Graph g = load_graph(path);
  if (is_chordal(g).chordal) throw UsageError("hole-covers: input graph is chordal");
  HoleUnionSubgraph hu = build_hole_union(g);
  std::vector<std::vector<int>> covers;
  for (const Bitset& c : enumerate_minimal_hole_covers(hu)) {
    std::vector<int> ids;
    INTDEL_FOR_SET(u, c) ids.push_back(hu.g0.parent_id(u));
    covers.push_back(ids);
  }
  if (as_json) {
    json rep = report_skeleton("hole-covers", path);
    rep["result"] = {{"covers", covers}, {"count", covers.size()}};
    rep["exit"] = ExitOk;
    emit(rep, ExitOk);
  }
  for (const auto& ids : covers) {
    for (size_t i = 0; i < ids.size(); ++i)
      std::cout << ids[i] << (i + 1 < ids.size() ? ' ' : '\n');
  }
  std::cout << covers.size() << "\n";
  return ExitOk;
}

// Deterministic single-path walk for debugging: R1 deletes the smallest
// vertex of each found set; R2 case 3 records the branch and follows I1.
int cmd_reduce(const std::string& path, int k, bool dump_caterpillar, bool as_json) {
  Graph g = load_graph(path);
  json trace = json::array();
  Graph cur = g;
  int budget = k;
  while (true) {
    if (auto x = find_small_forbidden_set(cur)) {
      std::vector<int> ids;
      INTDEL_FOR_SET(u, *x) ids.push_back(cur.parent_id(u));
      int victim = x->first();
      trace.push_back(
          {{"rule", "small-forbidden-set"}, {"set", ids}, {"deleted", cur.parent_id(victim)}});
      cur = delete_vertex(cur, victim);
      budget -= 1;
      continue;
    }
    if (auto m = find_nonclique_module(cur)) {
      Instance inst{cur, budget, Origin::Root};
      ModuleCase mc = classify_module_case(inst, *m);
      std::vector<int> ids;
      INTDEL_FOR_SET(u, *m) ids.push_back(cur.parent_id(u));
      trace.push_back({{"rule", "module"}, {"case", mc.which}, {"module", ids}});
      CaseApplication app = apply_case(inst, mc);
      if (mc.which == 1 || mc.which == 2) {
        cur = app.children[0].graph;
      } else {
        cur = app.children[0].graph;  // follow I1 for the walk
        budget = app.children[0].k;
      }
      continue;
    }
    break;
  }
  json rep = report_skeleton("reduce", path);
  rep["k"] = k;
  rep["trace"] = trace;
  rep["exit"] = ExitOk;
  rep["result"] = {{"n", cur.n()}, {"m", cur.edge_count()}, {"kLeft", budget}};
  bool chordal = is_chordal(cur).chordal;
  rep["result"]["chordal"] = chordal;
  if (!chordal) {
    HoleUnionSubgraph hu = build_hole_union(cur);
    rep["result"]["holeUnionSize"] = hu.g0.n();
    rep["result"]["holeCovers"] = enumerate_minimal_hole_covers(hu).size();
  } else if (dump_caterpillar && cur.n() > 0 && is_connected(cur) &&
             !is_interval(cur).has_value()) {
    CaterpillarDecomposition cat = build_caterpillar(cur);
    json leaves = json::array();
    for (auto [s, at] : cat.leaves) leaves.push_back({{"s", s}, {"attach", at}});
    rep["caterpillar"] = {{"central", cat.central},
                          {"leaves", leaves},
                          {"shallowTerminals", cat.st.to_vector()}};
  }
  (void)as_json;
  emit(rep, ExitOk);
  return ExitOk;
}

int cmd_gen(int n, int q, double p, uint64_t seed, const std::string& out) {
  Graph base = random_interval_graph(n, seed);
  PlantedInstance inst = plant_noise(base, q, p, seed);
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write '" + out + "'");
  write_graph(f, inst.graph);
  f.close();
  json side = {{"schema", "intdel/1"},
               {"command", "gen"},
               {"planted", inst.planted.to_vector()},
               {"seed", seed},
               {"params", {{"nIntervals", n}, {"qNoise", q}, {"noiseEdgeProb", p}}}};
  std::ofstream sf(out + ".json");
  if (!sf) throw UsageError("cannot write '" + out + ".json'");
  sf << side.dump(2) << "\n";
  std::cout << "wrote " << out << " (" << inst.graph.n() << " vertices, "
            << inst.graph.edge_count() << " edges)\n";
  return ExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimum interval vertex deletion"};
  app.require_subcommand(1);

  std::string path, out;
  int k = -1, n = 0, q = 0, threads = 1;
  double p = 0.0;
  uint64_t seed = 0;
  bool as_json = false, prune = false, want_stats = false, dump_cat = false;

  auto* solve_cmd = app.add_subcommand("solve", "minimum deletion set or NO");
  solve_cmd->add_option("file", path)->required();
  solve_cmd->add_option("--k", k, "budget")->required();
  solve_cmd->add_flag("--json", as_json);
  solve_cmd->add_flag("--prune", prune);
  solve_cmd->add_flag("--stats", want_stats);
  solve_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* rec_cmd = app.add_subcommand("recognize", "interval recognition with clique path");
  rec_cmd->add_option("file", path)->required();
  rec_cmd->add_flag("--json", as_json);

  auto* obs_cmd = app.add_subcommand("obstruction", "one minimal forbidden set, classified");
  obs_cmd->add_option("file", path)->required();
  obs_cmd->add_flag("--json", as_json);

  auto* hc_cmd = app.add_subcommand("hole-covers", "minimal hole covers of the hole union");
  hc_cmd->add_option("file", path)->required();
  hc_cmd->add_flag("--json", as_json);

  auto* red_cmd = app.add_subcommand("reduce", "reduction trace (debug)");
  red_cmd->add_option("file", path)->required();
  red_cmd->add_option("--k", k, "budget")->required();
  red_cmd->add_flag("--dump-caterpillar", dump_cat);
  red_cmd->add_flag("--json", as_json);

  auto* gen_cmd = app.add_subcommand("gen", "planted random instance");
  gen_cmd->add_option("--n", n, "interval vertices")->required();
  gen_cmd->add_option("--q", q, "noise vertices")->required();
  gen_cmd->add_option("--p", p, "noise edge probability")->required();
  gen_cmd->add_option("--seed", seed)->required();
  gen_cmd->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed()) return cmd_solve(path, k, as_json, prune, want_stats, threads);
    if (rec_cmd->parsed()) return cmd_recognize(path, as_json);
    if (obs_cmd->parsed()) return cmd_obstruction(path, as_json);
    if (hc_cmd->parsed()) return cmd_hole_covers(path, as_json);
    if (red_cmd->parsed()) return cmd_reduce(path, k, dump_cat, as_json);
    if (gen_cmd->parsed()) return cmd_gen(n, q, p, seed, out);
    return ExitUsage;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ExitOk : ExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return ExitParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return ExitUsage;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return ExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitInvariant;
  }
}
