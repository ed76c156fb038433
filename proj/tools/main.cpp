#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "modlab/runner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

int cmd_run(const std::string& path, double tol, const std::string& report_path,
            std::uint64_t seed, bool seed_given) {
  modlab::Scenario sc = modlab::Scenario::from_file(path);
  if (tol > 0.0) sc.tol.rel = tol;
  if (seed_given) sc.seed = seed;
  const modlab::Report rep = modlab::run_scenario(sc);
  std::cout << modlab::format_report_text(rep);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write report file: " << report_path << "\n";
      return kExitInputError;
    }
    out << rep.to_json();
  }
  return rep.failed() == 0 ? kExitPass : kExitVerificationFailure;
}

int cmd_suite(const std::string& filter) {
  const std::vector<modlab::Report> reps = modlab::run_suite(filter);
  if (reps.empty()) {
    std::cerr << "error: no scenario matches filter '" << filter << "'\n";
    return kExitInputError;
  }
  int failed = 0;
  for (const modlab::Report& rep : reps) {
    std::cout << modlab::format_report_text(rep);
    failed += rep.failed();
  }
  std::cout << reps.size() << " scenarios, " << failed << " failing checks\n";
  return failed == 0 ? kExitPass : kExitVerificationFailure;
}

int cmd_spectrum(const std::string& path) {
  const modlab::Scenario sc = modlab::Scenario::from_file(path);
  const modlab::Report rep = modlab::run_scenario(sc);
  if (rep.delta_spectrum.empty()) {
    std::cerr << "error: scenario has no modular operator "
                 "(vector not cyclic and separating)\n";
    return kExitVerificationFailure;
  }
  std::cout.precision(15);
  for (double v : rep.delta_spectrum) std::cout << v << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular theory laboratory"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string report_path;
  double tol = 0.0;
  std::uint64_t seed = 0;

  CLI::App* run = app.add_subcommand("run", "run one scenario file");
  run->add_option("file", scenario_path, "scenario JSON file")->required();
  run->add_option("--tol", tol, "relative tolerance override");
  run->add_option("--report", report_path, "write a JSON report here");
  CLI::Option* seed_opt = run->add_option("--seed", seed, "seed override");

  std::string filter;
  CLI::App* suite = app.add_subcommand("suite", "run the built-in scenarios");
  suite->add_option("--filter", filter, "keep scenarios carrying this tag");

  std::string spectrum_path;
  CLI::App* spectrum = app.add_subcommand("spectrum", "print the modular spectrum");
  spectrum->add_option("file", spectrum_path, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (run->parsed())
      return cmd_run(scenario_path, tol, report_path, seed, seed_opt->count() > 0);
    if (suite->parsed()) return cmd_suite(filter);
    return cmd_spectrum(spectrum_path);
  } catch (const modlab::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const modlab::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const modlab::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const modlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
