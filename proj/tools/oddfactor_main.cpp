// oddfactor: command-line front end.
//
// Exit codes: 0 success / factor exists / all checks pass,
//             1 no factor / some check failed or skipped,
//             2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddfactor/exceptions.hpp"
#include "oddfactor/factors.hpp"
#include "oddfactor/generators.hpp"
#include "oddfactor/io.hpp"
#include "oddfactor/paper_checks.hpp"
#include "oddfactor/parameters.hpp"
#include "oddfactor/sweep.hpp"

namespace {

using namespace oddfactor;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct CommonFlags {
  std::string input;
  std::string output;
  int cap = EnumerationOptions::kDefaultCap;
  int jobs = 1;

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.cap = cap;
    o.jobs = jobs;
    return o;
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

/// Writes to `path`, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

void add_enumeration_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--cap", flags.cap, "Enumeration cap on graph order")->capture_default_str();
  cmd->add_option("--jobs", flags.jobs, "Worker threads (results do not depend on it)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

int run_compute(const CommonFlags& flags, const std::string& selector) {
  const Graph g = read_edge_list_file(flags.input);
  std::vector<Parameter> wanted;
  if (selector == "all") {
    wanted = {Parameter::kToughness, Parameter::kIsolatedToughness, Parameter::kIsolatedToughnessVariant,
              Parameter::kBindingNumber};
  } else {
    wanted = {*parse_parameter_selector(selector)};
  }
  nlohmann::ordered_json doc;
  doc["order"] = g.order();
  doc["size"] = g.size();
  for (Parameter p : wanted) {
    const auto r = compute_parameter(p, g, flags.enumeration());
    std::cout << parameter_selector(p) << " = " << r.value;
    if (r.value.is_finite()) std::cout << "  S = " << r.witness.str();
    std::cout << "\n";
    doc[std::string(parameter_selector(p))] = {{"parameter", parameter_name(p)},
                                               {"value", r.value.str()},
                                               {"witness", r.witness.members()}};
  }
  if (!flags.output.empty()) write_text(flags.output, doc.dump(2) + "\n");
  return kExitOk;
}

int run_factor(const CommonFlags& flags, int min_cycle, int construct_cap) {
  const Graph g = read_edge_list_file(flags.input);
  std::string text;
  int code = kExitOk;
  bool exists = false;
  if (min_cycle == 5) {
    const auto d = cp_criterion(g, flags.enumeration());
    exists = d.exists;
    if (!exists) {
      text = "NO-FACTOR\nS = " + d.violation->set.str() + "\nc_tc = " + std::to_string(d.violation->tc_count) + "\n";
    }
  } else {
    const auto d = fractional_tutte(g, flags.enumeration());
    exists = d.exists;
    if (!exists) {
      text = "NO-FACTOR\nS = " + d.violation->set.str() + "\niso = " + std::to_string(d.violation->isolated) + "\n";
    }
  }
  if (exists) {
    text = "FACTOR\n";
    if (g.order() <= construct_cap) {
      const auto f = find_factor(g, min_cycle, {construct_cap});
      if (!f || !validate_factor(g, *f, min_cycle)) {
        throw std::logic_error("criterion reports a factor but construction failed");
      }
      text += render(*f);
    } else {
      text += "# construction skipped: order exceeds construction cap " + std::to_string(construct_cap) + "\n";
    }
  } else {
    code = kExitNegative;
  }
  emit(flags.output, text);
  return code;
}

int run_generate(const CommonFlags& flags, const std::string& family, GeneratorSpec spec) {
  const auto f = parse_family(family);
  if (!f) throw std::invalid_argument("unknown family " + family);
  spec.family = *f;
  emit(flags.output, serialize_edge_list(generate(spec)));
  return kExitOk;
}

int run_verify(const CommonFlags& flags, PaperCheckConfig config, const std::string& json_path) {
  config.cap = flags.cap;
  config.jobs = flags.jobs;
  const CheckReport report = run_paper_checks(config);
  emit(flags.output, report.human());
  if (!json_path.empty()) write_text(json_path, report.machine());
  return report.all_passed() ? kExitOk : kExitNegative;
}

int run_exceptions(const CommonFlags& flags, int order) {
  const auto scan = enumerate_exceptions(order, flags.jobs);
  std::ostringstream out;
  out << "# order " << scan.order << ": " << scan.labeled_graphs << " labeled graphs, " << scan.labeled_without_factor
      << " without factor, " << scan.labeled_exceptions << " with I' > " << scan.threshold << "\n";
  out << "# " << scan.classes.size() << " isomorphism classes\n";
  for (const auto& c : scan.classes) {
    out << "\n# class " << c.label << "  I' = " << c.iprime << "\n" << serialize_edge_list(c.graph);
  }
  emit(flags.output, out.str());
  return kExitOk;
}

int run_sweep_command(const CommonFlags& flags, SweepSpec spec, const std::string& family) {
  if (family != "random" && family != "complete") throw std::invalid_argument("sweep family must be random or complete");
  spec.complete_graphs = family == "complete";
  spec.enumeration = flags.enumeration();
  emit(flags.output, sweep_csv(run_sweep(spec)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toughness, binding number and odd-cycle factor toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string selector = "all";
  int min_cycle = 5;
  int construct_cap = FactorSearchOptions::kDefaultCap;
  std::string family;
  GeneratorSpec gen_spec;
  std::uint64_t seed = PaperCheckConfig::kDefaultSeed;
  PaperCheckConfig verify;
  int corpus_size = 10000;
  std::string json_path;
  bool no_exceptions = false;
  bool no_determinism = false;
  int exception_order = 7;
  SweepSpec sweep;
  std::string sweep_family = "random";

  auto* compute = app.add_subcommand("compute", "Compute t, I, I' or bind of a graph file");
  compute->add_option("--input", flags.input, "Edge-list file")->required();
  compute->add_option("--param", selector, "t | i | iprime | bind | all")
      ->capture_default_str()
      ->check(CLI::IsMember({"t", "i", "iprime", "bind", "all"}));
  compute->add_option("--output", flags.output, "Also write JSON results here");
  add_enumeration_flags(compute, flags);

  auto* factor = app.add_subcommand("factor", "Decide and construct a {K2, odd cycle}-factor");
  factor->add_option("--input", flags.input, "Edge-list file")->required();
  factor->add_option("--min-cycle", min_cycle, "Shortest allowed odd cycle")
      ->capture_default_str()
      ->check(CLI::IsMember({3, 5}));
  factor->add_option("--construct-cap", construct_cap, "Largest order for explicit construction")
      ->capture_default_str();
  factor->add_option("--output", flags.output, "Write the result here instead of stdout");
  add_enumeration_flags(factor, flags);

  auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge-list file");
  gen->add_option("--family", family, "complete | path | cycle | gm | hm | random | cactus")
      ->required()
      ->check(CLI::IsMember({"complete", "path", "cycle", "gm", "hm", "random", "cactus"}));
  gen->add_option("--n", gen_spec.n, "Order (complete, path, cycle, random)");
  gen->add_option("--m", gen_spec.m, "Family index (gm, hm)");
  gen->add_option("--p", gen_spec.p, "Edge probability (random)");
  gen->add_option("--blocks", gen_spec.blocks, "Triangle count (cactus)");
  auto* gen_seed = gen->add_option("--seed", seed, "Seed (random, cactus)");
  gen->add_option("--output", flags.output, "Output file (stdout when omitted)");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every check and write reports");
  verify_cmd->add_option("--m-max", verify.m_max, "Largest hm(m) index")->capture_default_str();
  verify_cmd->add_option("--corpus-size", corpus_size, "Random graphs on 5..9 vertices")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Corpus seed")->capture_default_str();
  verify_cmd->add_option("--output", flags.output, "Human-readable report (stdout when omitted)");
  verify_cmd->add_option("--json", json_path, "Machine-readable report");
  verify_cmd->add_flag("--no-exceptions", no_exceptions, "Skip the order-7 exception scan");
  verify_cmd->add_flag("--no-determinism", no_determinism, "Skip the second run at another job count");
  add_enumeration_flags(verify_cmd, flags);

  auto* exceptions = app.add_subcommand("exceptions", "List factor-free order-7 graphs with I' > 4");
  exceptions->add_option("--order", exception_order, "Graph order (only 7)")->capture_default_str()->check(CLI::IsMember({7}));
  exceptions->add_option("--output", flags.output, "Output file (stdout when omitted)");
  exceptions->add_option("--jobs", flags.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  sweep.corpus.count_per_order = 20;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate all four parameters and the factor decision");
  sweep_cmd->add_option("--family", sweep_family, "random | complete")->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep.corpus.n_min)->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep.corpus.n_max)->capture_default_str();
  sweep_cmd->add_option("--count", sweep.corpus.count_per_order, "Graphs per order")->capture_default_str();
  sweep_cmd->add_option("--p", sweep.corpus.p_schedule, "Edge probability schedule")->delimiter(',');
  sweep_cmd->add_option("--seed", sweep.corpus.seed)->capture_default_str();
  sweep_cmd->add_option("--output", flags.output, "CSV file (stdout when omitted)");
  add_enumeration_flags(sweep_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*compute) return run_compute(flags, selector);
    if (*factor) return run_factor(flags, min_cycle, construct_cap);
    if (*gen) {
      if (*gen_seed) gen_spec.seed = seed;
      return run_generate(flags, family, gen_spec);
    }
    if (*verify_cmd) {
      verify.corpus.count_per_order = (corpus_size + 4) / 5;
      verify.corpus.seed = seed;
      verify.supplementary.seed = seed + 1;
      verify.run_exceptions = !no_exceptions;
      verify.check_determinism = !no_determinism;
      return run_verify(flags, verify, json_path);
    }
    if (*exceptions) return run_exceptions(flags, exception_order);
    if (*sweep_cmd) return run_sweep_command(flags, sweep, sweep_family);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
