#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pursuit/analysis.hpp"
#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/registry.hpp"
#include "pursuit/robber_strategies.hpp"
#include "pursuit/solver.hpp"

namespace {

using namespace pursuit;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kRuleViolation = 3;
constexpr int kTooLarge = 4;

// "3..9", "3,5,7" or "4".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      if (hi < lo) throw ArgumentError("empty range " + text);
      for (int i = lo; i <= hi; ++i) out.push_back(i);
      return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ArgumentError*>(&e)) throw;
    throw ArgumentError("bad integer range '" + text + "'");
  }
  return out;
}

// Writes next to the target and renames, so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw ArgumentError("cannot write " + path);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

struct Config {
  int d = 0;
  int n = 0;
  std::string graph;
  int ell = 0;
  int k = 0;
  std::string mode = "search";
  std::string cops;
  std::string robber;
  int max_rounds = 0;
  std::uint64_t seed = 0;
  std::string trace;
};

void merge_config_file(const std::string& path, Config& c, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ArgumentError("config must be a JSON object");
  // Flags given on the command line win over the file.
  auto given = [&](const char* flag) { return app.count(flag) > 0; };
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "d") { if (!given("--d")) c.d = value.get<int>(); }
      else if (key == "n") { if (!given("--n")) c.n = value.get<int>(); }
      else if (key == "graph") { if (!given("--graph")) c.graph = value.get<std::string>(); }
      else if (key == "ell") { if (!given("--ell")) c.ell = value.get<int>(); }
      else if (key == "k") { if (!given("--k")) c.k = value.get<int>(); }
      else if (key == "mode") { if (!given("--mode")) c.mode = value.get<std::string>(); }
      else if (key == "cops") { if (!given("--cops")) c.cops = value.get<std::string>(); }
      else if (key == "robber") { if (!given("--robber")) c.robber = value.get<std::string>(); }
      else if (key == "max_rounds") { if (!given("--max-rounds")) c.max_rounds = value.get<int>(); }
      else if (key == "seed") { if (!given("--seed")) c.seed = value.get<std::uint64_t>(); }
      else if (key == "trace") { if (!given("--trace")) c.trace = value.get<std::string>(); }
      else throw ArgumentError("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception&) {
      throw ArgumentError("config key '" + key + "' has the wrong type");
    }
  }
}

Graph graph_of(const std::string& spec, int d, int n) {
  if (!spec.empty()) return parse_graph_spec(spec, Budget::from_env());
  if (d < 1 || n < 1) throw ArgumentError("give --graph or both --d and --n");
  return build_hamming(d, n, Budget::from_env());
}

int simulate(Config c) {
  const Graph g = graph_of(c.graph, c.d, c.n);
  if (c.ell < 0) throw ArgumentError("--ell must be non-negative");
  if (c.cops.empty()) throw ArgumentError("--cops names the cop strategy");
  const Mode mode = mode_from_string(c.mode);
  auto cops = make_cop_strategy(c.cops, c.seed);
  const int required = cops->required_cops(g, c.ell);
  if (c.k == 0) c.k = required;
  if (c.k < 1) throw ArgumentError("--k must be positive");
  if (c.k < required && !cops->flexible()) {
    throw InsufficientCops("insufficient cops: " + c.cops + " needs " + std::to_string(required) + ", given " +
                               std::to_string(c.k),
                           required, c.k);
  }
  GameSpec spec{g, c.ell, c.k, mode, c.max_rounds, c.seed};
  RunResult result;
  if (mode == Mode::Search) {
    if (!c.robber.empty()) throw ArgumentError("--robber applies to capture mode only");
    result = run_search(spec, *cops);
  } else {
    if (c.robber.empty()) throw ArgumentError("capture mode needs --robber");
    auto robber = make_robber_strategy(c.robber, g, c.ell, c.k, c.seed);
    result = run_capture(spec, *cops, *robber);
  }
  if (!c.trace.empty()) {
    std::ostringstream out;
    write_jsonl(out, result.trace);
    write_atomically(c.trace, out.str());
  }
  std::cout << to_string(result.outcome) << " k=" << c.k << " rounds=" << result.rounds_used
            << " monotonicity=" << (mode == Mode::Search ? to_string(audit_monotonicity(result.trace)) : "n/a") << "\n";
  return kOk;
}

struct ReplayArgs {
  std::string trace;
  std::string graph;
  int d = 0;
  int n = 0;
  int ell = 0;
  int k = 0;
  std::string mode = "search";
};

int replay(const ReplayArgs& a) {
  const Graph g = graph_of(a.graph, a.d, a.n);
  std::ifstream in(a.trace);
  if (!in) throw ArgumentError("cannot read trace " + a.trace);
  const Mode mode = mode_from_string(a.mode);
  const Trace trace = read_jsonl(in, mode, g.vertex_count());
  int k = a.k;
  if (k == 0 && !trace.events.empty()) k = static_cast<int>(trace.events.front().cops.size());
  const GameSpec spec{g, a.ell, k, mode, 0, 0};
  if (!replay_trace(spec, trace)) throw RuleViolation("trace snapshots do not follow from the recorded moves", "trace");
  std::cout << "OK events=" << trace.events.size() << "\n";
  return kOk;
}

struct SolveArgs {
  std::string graph;
  int d = 0;
  int n = 0;
  int ell = 0;
  int k = 0;
  std::string mode = "search";
  bool symmetry = false;
  std::string out;
};

int solve(const SolveArgs& a) {
  const Graph g = graph_of(a.graph, a.d, a.n);
  SolverOptions opts;
  opts.symmetry = a.symmetry;
  const Mode mode = mode_from_string(a.mode);
  int k = a.k;
  if (k == 0) k = mode == Mode::Search ? search_number(g, a.ell, opts) : capture_number(g, a.ell, opts);
  const GameValue value = mode == Mode::Search ? solve_search(g, a.ell, k, opts) : solve_capture(g, a.ell, k, opts);
  if (a.k == 0) {
    std::cout << k << "\n";
  } else {
    std::cout << to_string(value.verdict) << "\n";
  }
  if (!a.out.empty()) write_atomically(a.out, to_json(value, g).dump(2) + "\n");
  return kOk;
}

struct VerifyArgs {
  std::string theorem;
  std::string n;
  std::string d;
  std::uint64_t seed = 1;
  int runs = 0;
  int jobs = 1;
  std::string out;
};

int verify(const VerifyArgs& a) {
  VerifyParams params;
  params.n = parse_range(a.n);
  params.d = parse_range(a.d);
  params.seed = a.seed;
  params.runs = a.runs;
  std::vector<std::string> ids;
  if (a.theorem == "all") {
    ids = theorem_ids();
  } else {
    ids.push_back(a.theorem);
  }
  std::vector<Json> reports(ids.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, a.jobs));
  for (std::size_t start = 0; start < ids.size(); start += jobs) {
    std::vector<std::future<Json>> batch;
    for (std::size_t i = start; i < std::min(ids.size(), start + jobs); ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] { return verify_theorem(ids[i], params); }));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) reports[start + i] = batch[i].get();
  }
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r["status"] == "pass";
    for (const auto& check : r["checks"]) {
      std::cout << r["theorem"].get<std::string>() << "  " << check["status"].get<std::string>() << "  "
                << check["name"].get<std::string>();
      const auto detail = check["detail"].get<std::string>();
      if (!detail.empty()) std::cout << " (" << detail << ")";
      std::cout << "\n";
    }
    std::cout << r["theorem"].get<std::string>() << ": " << r["status"].get<std::string>() << "\n";
  }
  if (!a.out.empty()) {
    const Json doc = reports.size() == 1 ? reports.front() : Json(reports);
    write_atomically(a.out, doc.dump(2) + "\n");
  }
  return ok ? kOk : kVerifyFailed;
}

int table(int d, const std::string& ns, const std::string& out) {
  const auto rows = bound_table(d, parse_range(ns));
  const auto csv = bound_table_csv(rows);
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_atomically(out, csv);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limited-visibility cops and robbers on Hamming graphs"};
  app.require_subcommand(1);

  Config sim;
  std::string config_path;
  auto* simulate_cmd = app.add_subcommand("simulate", "Play one game with the engine");
  simulate_cmd->add_option("--config", config_path, "JSON experiment config");
  simulate_cmd->add_option("--d", sim.d, "Hamming dimension");
  simulate_cmd->add_option("--n", sim.n, "Hamming alphabet size");
  simulate_cmd->add_option("--graph", sim.graph, "Graph spec such as hamming:2,4");
  simulate_cmd->add_option("--ell", sim.ell, "Visibility radius");
  simulate_cmd->add_option("--k", sim.k, "Cop count (defaults to the strategy's requirement)");
  simulate_cmd->add_option("--mode", sim.mode, "search or capture");
  simulate_cmd->add_option("--cops", sim.cops, "Cop strategy name");
  simulate_cmd->add_option("--robber", sim.robber, "Robber strategy name (capture mode)");
  simulate_cmd->add_option("--max-rounds", sim.max_rounds, "Round limit (0 = default)");
  simulate_cmd->add_option("--seed", sim.seed, "Random seed");
  simulate_cmd->add_option("--trace", sim.trace, "JSONL trace output path");

  ReplayArgs rep;
  auto* replay_cmd = app.add_subcommand("replay", "Check a JSONL trace against the rules");
  replay_cmd->add_option("--trace", rep.trace, "JSONL trace path")->required();
  replay_cmd->add_option("--graph", rep.graph, "Graph spec");
  replay_cmd->add_option("--d", rep.d, "Hamming dimension");
  replay_cmd->add_option("--n", rep.n, "Hamming alphabet size");
  replay_cmd->add_option("--ell", rep.ell, "Visibility radius");
  replay_cmd->add_option("--k", rep.k, "Cop count (defaults to the trace's)");
  replay_cmd->add_option("--mode", rep.mode, "search or capture");

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Exact solver for small graphs");
  solve_cmd->add_option("--graph", sol.graph, "Graph spec");
  solve_cmd->add_option("--d", sol.d, "Hamming dimension");
  solve_cmd->add_option("--n", sol.n, "Hamming alphabet size");
  solve_cmd->add_option("--ell", sol.ell, "Visibility radius");
  solve_cmd->add_option("--k", sol.k, "Solve for this cop count instead of the minimum");
  solve_cmd->add_option("--mode", sol.mode, "search or capture");
  solve_cmd->add_flag("--symmetry", sol.symmetry, "Quotient by Hamming automorphisms");
  solve_cmd->add_option("--out", sol.out, "JSON result path");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem check suite");
  verify_cmd->add_option("--theorem", ver.theorem, "Theorem id or 'all'")->required();
  verify_cmd->add_option("--n", ver.n, "n values, e.g. 3..6");
  verify_cmd->add_option("--d", ver.d, "d values, e.g. 2,3");
  verify_cmd->add_option("--seed", ver.seed, "Random seed");
  verify_cmd->add_option("--runs", ver.runs, "Suite-specific run count (0 = default)");
  verify_cmd->add_option("--jobs", ver.jobs, "Suites run in parallel");
  verify_cmd->add_option("--out", ver.out, "JSON report path");

  int table_d = 2;
  std::string table_n = "3..9";
  std::string table_out;
  auto* table_cmd = app.add_subcommand("table", "Bound table as CSV");
  table_cmd->add_option("--d", table_d, "Hamming dimension");
  table_cmd->add_option("--n", table_n, "n values, e.g. 3..9");
  table_cmd->add_option("--out", table_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*simulate_cmd) {
      if (!config_path.empty()) merge_config_file(config_path, sim, *simulate_cmd);
      return simulate(sim);
    }
    if (*replay_cmd) return replay(rep);
    if (*solve_cmd) return solve(sol);
    if (*verify_cmd) return verify(ver);
    if (*table_cmd) return table(table_d, table_n, table_out);
  } catch (const InsufficientCops& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedMode& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RuleViolation& e) {
    std::cerr << "rule violation by " << e.offender() << ": " << e.what() << "\n";
    return kRuleViolation;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what();
    if (std::string(e.what()).find("estimate") == std::string::npos) std::cerr << " (estimate " << e.estimate() << ")";
    std::cerr << "\n";
    return kTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
