#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "josephus/bench.hpp"
#include "josephus/dot.hpp"
#include "josephus/kill_systems.hpp"
#include "josephus/literate.hpp"
#include "josephus/serialize.hpp"
#include "josephus/solvers.hpp"

namespace josephus::cli {

namespace {

bool color_enabled(std::ostream& err) {
  const char* env = std::getenv("JOSEPHUS_COLOR");
  if (env && std::string_view(env) == "0") return false;
  return &err == &std::cerr && ::isatty(STDERR_FILENO);
}

void report(std::ostream& err, std::string_view msg) {
  if (color_enabled(err)) err << "\x1b[31merror:\x1b[0m " << msg << '\n';
  else err << "error: " << msg << '\n';
}

struct RunConfig {
  std::int64_t n = 100;
  std::int64_t m = 10;
  std::string algorithm = "recurrence";
  std::string format;
  std::string output;
  bool order = false;
  bool states = false;

  std::int64_t universe = 6;
  unsigned jobs = 1;
  bool map = false;
  bool reachable = false;
  std::string system = "H";
  std::size_t cap = 200;

  std::int64_t start = 512;
  std::int64_t factor = 2;
  std::int64_t count = 4;
  std::vector<std::string> algorithms;
  bool wall = false;

  std::string input;
  std::string root;
  bool list = false;
};

// Writes to the requested file or to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw Error("cannot open '" + cfg.output + "' for writing");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

int cmd_solve(const RunConfig& cfg, bool algorithm_given, std::ostream& out) {
  Problem p(cfg.n, cfg.m);
  Algorithm a = parse_algorithm(cfg.algorithm);
  const bool want_order = cfg.order || cfg.format == "json";
  if (want_order && !algorithm_given) a = Algorithm::order_statistic;
  if (want_order && !produces_order(a))
    throw InvalidInput(std::string(algorithm_name(a)) + " reports the survivor only");
  KillSequence ks = solve(a, p);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << kill_sequence_json(ks) << '\n';
  } else {
    os << ks.survivor << '\n';
    if (cfg.order) {
      for (std::size_t i = 0; i < ks.order.size(); ++i) os << (i ? " " : "") << ks.order[i];
      os << '\n';
    }
  }
  emit(cfg, out, os.str());
  return kOk;
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  Problem p(cfg.n, cfg.m);
  Algorithm a = parse_algorithm(cfg.algorithm);
  if (!produces_order(a))
    throw InvalidInput(std::string(algorithm_name(a)) + " does not produce an elimination order");
  if (cfg.states && a == Algorithm::order_statistic)
    throw InvalidInput("--states needs the imperative or zipper algorithm");
  KillSequence ks = solve(a, p);

  nlohmann::json states = nlohmann::json::array();
  std::vector<std::string> state_text;
  if (cfg.states && a == Algorithm::zipper) {
    for (const auto& c : zipper_trace(p)) {
      states.push_back(c);
      state_text.push_back(to_string(c));
    }
  } else if (cfg.states) {
    for (const auto& s : imperative_trace(p)) {
      states.push_back(s);
      state_text.push_back(to_string(s));
    }
  }

  if (cfg.format == "csv") {
    emit(cfg, out, kill_sequence_csv(ks, state_text));
  } else {
    nlohmann::json j = ks;
    if (cfg.states) j["states"] = states;
    emit(cfg, out, j.dump() + "\n");
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto report = verify_canonical(cfg.universe, cfg.m, cfg.jobs);
  emit(cfg, out, verdict_json(report).dump() + "\n");
  return report.morphism.holds && report.isomorphism.holds ? kOk : kDomainFailure;
}

int cmd_diagram(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m < 1) throw InvalidInput("m must be >= 1");
  const auto universe = universe_of_size(cfg.universe);
  DiagramOptions opts;
  opts.cap = cfg.cap;
  auto h = circle_kill_system(universe, cfg.m);
  auto p = imperative_kill_system(universe, cfg.m);
  if (cfg.reachable) {
    h = std::make_shared<const CircleSystem>(h->reachable_from({initial_circle(cfg.universe)}));
    p = std::make_shared<const ImperativeSystem>(
        p->reachable_from({initial_imperative(cfg.universe)}));
  }
  std::ostringstream os;
  if (cfg.map) {
    export_internal_diagram(canonical_system_map(h, p, cfg.m), "H", "P", os, opts);
  } else if (cfg.system == "P") {
    export_internal_diagram(*p, os, opts);
  } else {
    export_internal_diagram(*h, os, opts);
  }
  emit(cfg, out, os.str());
  return kOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m < 1) throw InvalidInput("m must be >= 1");
  std::vector<Algorithm> algos;
  if (cfg.algorithms.empty()) {
    algos = {Algorithm::imperative, Algorithm::zipper, Algorithm::order_statistic,
             Algorithm::recurrence, Algorithm::closed_form};
  } else {
    for (const auto& name : cfg.algorithms) algos.push_back(parse_algorithm(name));
  }
  auto rows = run_bench(geometric_sizes(cfg.start, cfg.factor, cfg.count), cfg.m, algos, cfg.wall);
  emit(cfg, out, cfg.format == "csv" ? bench_csv(rows) : bench_table(rows));
  return kOk;
}

// The one chunk nobody references, if there is exactly one.
std::string default_root(const literate::WebDocument& doc) {
  std::vector<std::string> roots;
  for (const auto& name : doc.names_by_ordinal())
    if (doc.chunks.at(name).referenced_from.empty()) roots.push_back(name);
  if (roots.size() != 1) throw InvalidInput("cannot pick a root chunk; pass --root");
  return roots.front();
}

int cmd_tangle(const RunConfig& cfg, std::ostream& out) {
  auto doc = literate::parse(read_file(cfg.input));
  if (cfg.list) {
    std::ostringstream os;
    for (const auto& row : literate::list_chunks(doc)) {
      os << row.ordinal << '\t' << row.name << '\t';
      for (std::size_t i = 0; i < row.definition_lines.size(); ++i)
        os << (i ? "," : "") << row.definition_lines[i];
      os << '\t';
      for (std::size_t i = 0; i < row.references.size(); ++i)
        os << (i ? "," : "") << row.references[i].from_chunk << ':' << row.references[i].line;
      os << '\n';
    }
    emit(cfg, out, os.str());
    return kOk;
  }
  const std::string root = cfg.root.empty() ? default_root(doc) : cfg.root;
  emit(cfg, out, literate::tangle(doc, root));
  return kOk;
}

int cmd_weave(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, out, literate::weave(literate::parse(read_file(cfg.input))));
  return kOk;
}

const CLI::Validator kPositive(
    [](std::string& value) -> std::string {
      try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used == value.size() && v >= 1) return {};
      } catch (const std::exception&) {
      }
      return "expected an integer >= 1, got '" + value + "'";
    },
    "INT>=1", "positive");

void add_problem(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-n,--prisoners", cfg.n, "number of prisoners")->check(kPositive);
  sub->add_option("-m,--step", cfg.m, "every m-th prisoner is killed")->check(kPositive);
}

void add_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-o,--output", cfg.output, "output file (default: stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Josephus problem solvers, equivalence checks and a literate-programming tool"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* solve_cmd = app.add_subcommand("solve", "print the survivor");
  add_problem(solve_cmd, cfg);
  auto* algo_opt = solve_cmd->add_option("-a,--algorithm", cfg.algorithm)
                       ->check(CLI::IsMember({"imperative", "zipper", "recurrence",
                                              "closed-form", "order-statistic"}));
  solve_cmd->add_flag("--order", cfg.order, "also print the elimination order");
  solve_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  add_output(solve_cmd, cfg);

  auto* trace_cmd = app.add_subcommand("trace", "kill-by-kill record as JSON or CSV");
  add_problem(trace_cmd, cfg);
  trace_cmd->add_option("-a,--algorithm", cfg.algorithm)
      ->check(CLI::IsMember({"imperative", "zipper", "order-statistic"}));
  trace_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  trace_cmd->add_flag("--states", cfg.states, "include the state after each kill");
  add_output(trace_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "check the circle/program isomorphism");
  verify_cmd->add_option("--universe", cfg.universe, "labels 1..k")->check(kPositive);
  verify_cmd->add_option("-m,--step", cfg.m)->check(kPositive);
  verify_cmd->add_option("--jobs", cfg.jobs, "parallel workers")->check(CLI::Range(1u, 256u));
  add_output(verify_cmd, cfg);

  auto* diagram_cmd = app.add_subcommand("diagram", "internal diagram as DOT");
  diagram_cmd->add_option("--universe", cfg.universe)->check(kPositive);
  diagram_cmd->add_option("-m,--step", cfg.m)->check(kPositive);
  diagram_cmd->add_flag("--map", cfg.map, "draw H and P with the canonical map");
  diagram_cmd->add_option("--system", cfg.system)->check(CLI::IsMember({"H", "P"}));
  diagram_cmd->add_flag("--reachable", cfg.reachable, "only states reachable from the start");
  diagram_cmd->add_option("--cap", cfg.cap, "maximum node count");
  add_output(diagram_cmd, cfg);

  auto* bench_cmd = app.add_subcommand("bench", "operation counts over a geometric series of n");
  bench_cmd->add_option("-m,--step", cfg.m)->check(kPositive);
  bench_cmd->add_option("--start", cfg.start)->check(kPositive);
  bench_cmd->add_option("--factor", cfg.factor);
  bench_cmd->add_option("--count", cfg.count);
  bench_cmd->add_option("--algorithms", cfg.algorithms)->delimiter(',');
  bench_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "csv"}));
  bench_cmd->add_flag("--wall", cfg.wall, "also measure wall-clock time");
  add_output(bench_cmd, cfg);

  auto* tangle_cmd = app.add_subcommand("tangle", "extract source code from a literate file");
  tangle_cmd->add_option("input", cfg.input)->required();
  tangle_cmd->add_option("--root", cfg.root, "root chunk name");
  tangle_cmd->add_flag("--list", cfg.list, "list chunks instead of tangling");
  add_output(tangle_cmd, cfg);

  auto* weave_cmd = app.add_subcommand("weave", "render a literate file as markdown");
  weave_cmd->add_option("input", cfg.input)->required();
  add_output(weave_cmd, cfg);

  // Demo defaults: a circle of 6 killing every 3rd, except solve which uses
  // the 100-prisoner, every-10th instance.
  for (auto* sub : {trace_cmd, verify_cmd, diagram_cmd}) {
    sub->preparse_callback([&cfg](std::size_t) {
      cfg.n = 6;
      cfg.m = 3;
      cfg.algorithm = "imperative";
    });
  }
  bench_cmd->preparse_callback([&cfg](std::size_t) { cfg.m = 10; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, e.what());
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(cfg, algo_opt->count() > 0, out);
    if (trace_cmd->parsed()) return cmd_trace(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (diagram_cmd->parsed()) return cmd_diagram(cfg, out);
    if (bench_cmd->parsed()) return cmd_bench(cfg, out);
    if (tangle_cmd->parsed()) return cmd_tangle(cfg, out);
    if (weave_cmd->parsed()) return cmd_weave(cfg, out);
  } catch (const InvalidInput& e) {
    report(err, e.what());
    return kUsage;
  } catch (const Error& e) {
    report(err, e.what());
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace josephus::cli
