#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "overbern/corpus.hpp"
#include "overbern/experiments.hpp"
#include "overbern/report_io.hpp"

namespace {

using namespace overbern;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> out;
  for (int v : parse_int_list(text)) out.push_back(v);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  std::string fn, degrees, powers, moduli, config, out, csv;
  double constant = 0.0, h = 0.0;
  int resolution = 0, moduli_resolution = 0, trials = 0, fit_min = 0, fit_max = 0;
  std::uint64_t seed = 0;
  bool no_meta = false;
};

void add_common_options(CLI::App* sub, Flags& f) {
  sub->add_option("--fn", f.fn, "corpus function id (see corpus-list)");
  sub->add_option("--degrees,--degree", f.degrees,
                  "comma-separated operator degrees, one per axis");
  sub->add_option("--powers,--power", f.powers,
                  "comma-separated iteration counts, one per axis");
  sub->add_option("--constant", f.constant,
                  "bound constant (default 2.25; 4.5 is the other published value)");
  sub->add_option("--resolution", f.resolution, "evaluation points per axis");
  sub->add_option("--moduli", f.moduli, "moduli mode: analytic or grid")
      ->check(CLI::IsMember({"analytic", "grid"}));
  sub->add_option("--moduli-resolution", f.moduli_resolution,
                  "lattice intervals per axis for grid moduli");
  sub->add_option("--seed", f.seed, "64-bit seed for randomized corpus members");
  sub->add_option("--step", f.h, "smoothing step h for the zhuk experiment");
  sub->add_option("--trials", f.trials, "number of seeded pairs (contraction)");
  sub->add_option("--fit-min", f.fit_min, "first iterate of the rate-fit window");
  sub->add_option("--fit-max", f.fit_max, "last iterate of the rate-fit window");
  sub->add_option("--config", f.config,
                  "JSON config file; keys mirror the report's config block");
  sub->add_option("--out", f.out, "write the JSON report here (default: stdout)");
  sub->add_option("--csv", f.csv, "also write the per-point CSV table here");
  sub->add_flag("--no-meta", f.no_meta,
                "omit the timestamp block for byte-reproducible reports");
}

ExperimentConfig assemble(const CLI::App* sub, const Flags& f,
                          ExperimentConfig base) {
  if (sub->count("--config") > 0) {
    ExperimentConfig loaded = config_from_json(read_file(f.config));
    loaded.experiment = base.experiment;  // the subcommand decides
    base = loaded;
  }
  if (sub->count("--fn")) base.function_id = f.fn;
  if (sub->count("--degrees")) base.degrees = parse_int_list(f.degrees);
  if (sub->count("--powers")) base.powers = parse_ll_list(f.powers);
  if (sub->count("--constant")) base.constant = f.constant;
  if (sub->count("--resolution")) base.eval_resolution = f.resolution;
  if (sub->count("--moduli")) base.moduli_mode = moduli_mode_from_string(f.moduli);
  if (sub->count("--moduli-resolution")) base.moduli_resolution = f.moduli_resolution;
  if (sub->count("--seed")) base.seed = f.seed;
  if (sub->count("--step")) base.h = f.h;
  if (sub->count("--trials")) base.trials = f.trials;
  if (sub->count("--fit-min")) base.fit_min = f.fit_min;
  if (sub->count("--fit-max")) base.fit_max = f.fit_max;
  if (base.powers.size() == 1 && base.degrees.size() > 1) {
    base.powers.assign(base.degrees.size(), base.powers[0]);
  }
  return base;
}

void emit(const Flags& f, const std::string& json, const std::string& csv) {
  if (!f.out.empty()) {
    write_text_file(f.out, json);
  } else {
    std::cout << json;
  }
  if (!f.csv.empty()) write_text_file(f.csv, csv);
}

int run_experiment(const CLI::App* sub, const Flags& f, ExperimentConfig base) {
  const ExperimentConfig config = assemble(sub, f, base);
  bool pass = false;
  std::string json, csv, summary;
  if (config.experiment == Experiment::converge_to_L) {
    const ConvergenceReport report = run_converge_to_L(config);
    pass = report.pass;
    json = report_json(config, report, !f.no_meta);
    csv = report_csv(report);
    summary = report.trivially_converged
                  ? "trivially converged"
                  : "fitted rate " + format_double(report.fitted_rate) +
                        " vs expected " + format_double(report.expected_rate);
  } else {
    BoundReport report;
    switch (config.experiment) {
      case Experiment::bound_univariate: report = run_bound_univariate(config); break;
      case Experiment::bound_tensor: report = run_bound_tensor(config); break;
      case Experiment::contraction: report = run_contraction(config); break;
      case Experiment::zhuk_lemma1: report = run_zhuk_lemma1(config); break;
      case Experiment::optimality_dlinear: report = run_optimality_dlinear(config); break;
      case Experiment::converge_to_L: break;  // handled above
    }
    pass = report.pass;
    json = report_json(config, report, !f.no_meta);
    csv = report_csv(report);
    summary = "min margin " + format_double(report.min_margin) +
              (report.advisory ? " (advisory: grid moduli)" : "");
  }
  emit(f, json, csv);
  std::cerr << to_string(config.experiment) << " fn=" << config.function_id
            << ": " << (pass ? "PASS" : "FAIL") << " (" << summary << ")\n";
  return pass ? 0 : 1;
}

}  // namespace

int run_main(int argc, char** argv) {
  CLI::App app{
      "overbern: tensor-product Bernstein operators, their overiterates, and "
      "checks of the known convergence bounds"};
  app.require_subcommand(1);

  Flags flags;
  CLI::App* bound_uni = app.add_subcommand(
      "bound-uni", "univariate bound |B_l^k f - B_1 f| <= C omega2");
  CLI::App* bound_tensor = app.add_subcommand(
      "bound-tensor", "d-variate bound against the sum of partial moduli");
  CLI::App* contraction = app.add_subcommand(
      "contraction", "contraction factor of one tensor application");
  CLI::App* converge = app.add_subcommand(
      "converge", "geometric convergence of iterates to the limit operator");
  CLI::App* zhuk = app.add_subcommand(
      "zhuk", "smoothing-operator inequalities (deviation and second derivative)");
  CLI::App* optimality = app.add_subcommand(
      "optimality", "vanishing moduli and lhs for multilinear fields");
  CLI::App* corpus_list =
      app.add_subcommand("corpus-list", "list corpus function ids");
  for (CLI::App* sub :
       {bound_uni, bound_tensor, contraction, converge, zhuk, optimality}) {
    add_common_options(sub, flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  try {
    if (corpus_list->parsed()) {
      for (const auto& [id, description] : corpus_catalog()) {
        std::cout << id << "  -  " << description << "\n";
      }
      return 0;
    }
    ExperimentConfig base;
    if (bound_uni->parsed()) {
      base.experiment = Experiment::bound_univariate;
      return run_experiment(bound_uni, flags, base);
    }
    if (bound_tensor->parsed()) {
      base.experiment = Experiment::bound_tensor;
      base.degrees = {5, 3};
      base.powers = {10, 4};
      return run_experiment(bound_tensor, flags, base);
    }
    if (contraction->parsed()) {
      base.experiment = Experiment::contraction;
      base.degrees = {2, 2};
      base.powers = {1, 1};
      base.function_id = "multilinear";
      return run_experiment(contraction, flags, base);
    }
    if (converge->parsed()) {
      base.experiment = Experiment::converge_to_L;
      base.degrees = {5, 3};
      base.powers = {1, 1};
      return run_experiment(converge, flags, base);
    }
    if (zhuk->parsed()) {
      base.experiment = Experiment::zhuk_lemma1;
      base.degrees = {1};
      base.powers = {1};
      return run_experiment(zhuk, flags, base);
    }
    if (optimality->parsed()) {
      base.experiment = Experiment::optimality_dlinear;
      base.function_id = "multilinear";
      base.degrees = {2, 2};
      base.powers = {3, 3};
      return run_experiment(optimality, flags, base);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
