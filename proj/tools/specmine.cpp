// specmine: mine, evaluate and convert behavior models from interaction traces.
//
// exit codes: 0 ok, 1 unexpected failure, 2 bad input/config/usage,
// 3 internal invariant violation, 4 output could not be written.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "specmine/automata.hpp"
#include "specmine/error.hpp"
#include "specmine/evaluation.hpp"
#include "specmine/ktail.hpp"
#include "specmine/mining_config.hpp"
#include "specmine/model_io.hpp"
#include "specmine/models.hpp"
#include "specmine/specminer.hpp"
#include "specmine/temporal_rules.hpp"
#include "specmine/traces.hpp"

namespace {

using namespace specmine;

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitOutput = 4;

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw OutputError("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw OutputError("cannot write '" + path + "'");
}

TraceSet load_traces(const std::string& path) {
  if (path == "-") return parse_traces(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_traces(in);
}

Fsa load_model(const std::string& path) {
  try {
    return from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string to_text(const Fsa& m) {
  std::string out = "initial " + m.name(m.initial()) + "\naccepting";
  for (StateId s : m.accepting_states()) out += ' ' + m.name(s);
  out += '\n';
  for (const auto& t : m.transitions()) {
    const std::string label = t.label.empty() ? std::string(kJsonEmptyLabel) : t.label;
    out += m.name(t.from) + " -" + label + "-> " + m.name(t.to) + '\n';
  }
  return out;
}

std::string render(const Fsa& m, const std::string& format) {
  if (format == "json") return to_json(m);
  if (format == "dot") return to_dot(m);
  return to_text(m);
}

struct MinedModel {
  std::string algorithm;
  std::string params;
  Fsa model;
  double elapsed_ms = 0.0;
};

MinedModel run_miner(const std::string& algo, const TraceSet& traces, const MiningConfig& cfg) {
  MinedModel r;
  r.algorithm = algo;
  const auto t0 = std::chrono::steady_clock::now();
  if (algo == "specminer") {
    r.params = "rc=" + std::to_string(cfg.rc);
    r.model = specminer(traces, cfg.rc);
  } else {
    r.params = "k=" + std::to_string(cfg.k);
    r.model = ktail(traces, cfg.k);
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string join(const OpSeq& w) {
  std::string s = "<";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i];
  return s + ">";
}

struct Options {
  std::string in, out = "-", format = "json", algo = "specminer", model, model_file, mined;
  std::string strategy = "path", report = "csv";
  MiningConfig cfg;
  int visit_limit = 2;
  bool all = false, no_timing = false;
  std::size_t spurious = 20;
};

int cmd_mine(const Options& o) {
  o.cfg.validate();
  const auto mined = run_miner(o.algo, load_traces(o.in), o.cfg);
  write_output(o.out, render(mined.model, o.format));
  return 0;
}

int cmd_pta(const Options& o) {
  write_output(o.out, render(build_pta(load_traces(o.in)), o.format));
  return 0;
}

int cmd_minimize(const Options& o) {
  write_output(o.out, render(minimize(determinize(load_model(o.in))), o.format));
  return 0;
}

int cmd_export(const Options& o) {
  write_output(o.out, render(load_model(o.in), o.format));
  return 0;
}

int cmd_rules(const Options& o) {
  write_output(o.out, serialize_rules(mine_temporal_rules(load_traces(o.in))));
  return 0;
}

std::vector<GroundTruthModel> selected_models(const Options& o) {
  if (o.all) return builtin_models();
  if (!o.model_file.empty()) {
    const auto stem = std::filesystem::path(o.model_file).stem().string();
    return {GroundTruthModel{stem, load_model(o.model_file), Provenance::reconstructed}};
  }
  if (o.model.empty()) throw ConfigError("one of --model, --model-file or --all is required");
  return {builtin_model(o.model)};
}

int cmd_gen(const Options& o) {
  if (o.all) throw ConfigError("gen takes a single model");
  const auto models = selected_models(o);
  write_output(o.out, serialize_traces(generate_traces(models.front(), parse_strategy(o.strategy),
                                                       o.visit_limit)));
  return 0;
}

int cmd_eval(const Options& o) {
  o.cfg.validate();
  const auto strategy = parse_strategy(o.strategy);
  std::vector<EvalRow> rows;
  std::string notes;

  for (const auto& truth : selected_models(o)) {
    if (!o.mined.empty()) {
      const Fsa mined = load_model(o.mined);
      rows.push_back({truth.name, "given",
                      std::filesystem::path(o.mined).filename().string(),
                      precision_recall(mined, truth, o.visit_limit)});
      const auto bad = spurious_behaviors(mined, truth.model, o.visit_limit, o.spurious);
      // over-bound: legal words the truth only produces past the visit limit
      for (const auto& w : bad)
        notes += (accepts(truth.model, w) ? "over-bound " : "spurious ") + join(w) + '\n';
      continue;
    }
    const TraceSet traces = generate_traces(truth, strategy, o.visit_limit);
    std::vector<std::pair<std::string, MiningConfig>> runs;
    if (o.algo == "all") {
      runs = {{"specminer", o.cfg}, {"ktail", {o.cfg.rc, 1}}, {"ktail", {o.cfg.rc, 2}}};
    } else {
      runs = {{o.algo, o.cfg}};
    }
    for (const auto& [algo, cfg] : runs) {
      const auto mined = run_miner(algo, traces, cfg);
      rows.push_back({truth.name, mined.algorithm, mined.params,
                      precision_recall(mined.model, truth, o.visit_limit,
                                       o.no_timing ? 0.0 : mined.elapsed_ms)});
    }
  }
  write_output(o.out, (o.report == "table" ? to_table(rows) : to_csv(rows)) + notes);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine and evaluate behavior models from interaction traces"};
  app.require_subcommand(1);
  Options o;

  const auto algos = CLI::IsMember({"specminer", "ktail"});
  const auto formats = CLI::IsMember({"json", "dot", "text"});

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("--in", o.in, what)->required();
    sub->add_option("--out", o.out, "output file (default: standard output)");
  };
  auto mining = [&](CLI::App* sub) {
    sub->add_option("--rc", o.cfg.rc, "repeat count for loop/cycle evidence")->capture_default_str();
    sub->add_option("--k", o.cfg.k, "kTail depth")->capture_default_str();
  };
  auto model_choice = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "built-in ground-truth model");
    sub->add_option("--model-file", o.model_file, "ground-truth model in JSON");
    sub->add_option("--visit-limit", o.visit_limit, "per-transition visit bound")
        ->capture_default_str();
    sub->add_option("--strategy", o.strategy, "coverage strategy")
        ->check(CLI::IsMember({"path", "state"}))
        ->capture_default_str();
  };

  auto* mine = app.add_subcommand("mine", "mine a model from a trace corpus");
  input(mine, "trace corpus ('-' for standard input)");
  mine->add_option("--algo", o.algo, "miner")->check(algos)->capture_default_str();
  mining(mine);
  mine->add_option("--format", o.format)->check(formats)->capture_default_str();

  auto* eval = app.add_subcommand("eval", "precision/recall against ground truth");
  model_choice(eval);
  eval->add_flag("--all", o.all, "every built-in model");
  eval->add_option("--mined", o.mined, "evaluate this model instead of mining");
  eval->add_option("--algo", o.algo, "miner, or 'all'")
      ->check(CLI::IsMember({"specminer", "ktail", "all"}))
      ->capture_default_str();
  mining(eval);
  eval->add_option("--report", o.report, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();
  eval->add_option("--spurious", o.spurious, "max spurious behaviors listed with --mined")
      ->capture_default_str();
  eval->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");
  eval->add_option("--out", o.out, "output file (default: standard output)");

  auto* gen = app.add_subcommand("gen", "coverage traces of a model");
  model_choice(gen);
  gen->add_option("--out", o.out, "output file (default: standard output)");

  auto* pta = app.add_subcommand("pta", "prefix tree acceptor of a corpus");
  input(pta, "trace corpus ('-' for standard input)");
  pta->add_option("--format", o.format)->check(formats)->capture_default_str();

  auto* mini = app.add_subcommand("minimize", "determinize and minimize a model");
  input(mini, "model JSON");
  mini->add_option("--format", o.format)->check(formats)->capture_default_str();

  auto* rules = app.add_subcommand("rules", "temporal rules holding on every trace");
  input(rules, "trace corpus ('-' for standard input)");

  auto* exp = app.add_subcommand("export", "convert a model JSON to another format");
  input(exp, "model JSON");
  exp->add_option("--format", o.format)->check(formats)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "specmine: error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*mine) return cmd_mine(o);
    if (*eval) return cmd_eval(o);
    if (*gen) return cmd_gen(o);
    if (*pta) return cmd_pta(o);
    if (*mini) return cmd_minimize(o);
    if (*rules) return cmd_rules(o);
    return cmd_export(o);
  } catch (const InvariantError& e) {
    std::cerr << "specmine: internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const ParseError& e) {
    std::cerr << "specmine: error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConfigError& e) {
    std::cerr << "specmine: error: " << e.what() << '\n';
    return kExitInput;
  } catch (const OutputError& e) {
    std::cerr << "specmine: error: " << e.what() << '\n';
    return kExitOutput;
  } catch (const std::exception& e) {
    std::cerr << "specmine: error: " << e.what() << '\n';
    return 1;
  }
}
