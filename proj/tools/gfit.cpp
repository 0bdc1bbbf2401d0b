#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfit/bench.hpp"
#include "gfit/complexity.hpp"
#include "gfit/errmodel.hpp"
#include "gfit/fitters.hpp"
#include "gfit/io.hpp"
#include "gfit/model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitFit = 3;

gfit::OutputFormat parse_format(const std::string& name) {
  if (name == "json") {
    return gfit::OutputFormat::Json;
  }
  return gfit::OutputFormat::Csv;
}

std::vector<gfit::Algorithm> parse_algorithm_list(const std::string& csv) {
  std::vector<gfit::Algorithm> out;
  std::istringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto algo = gfit::parse_algorithm(token);
    if (!algo) {
      throw CLI::ValidationError("--algorithms", "unknown algorithm: " + token);
    }
    out.push_back(*algo);
  }
  if (out.empty()) {
    throw CLI::ValidationError("--algorithms", "empty algorithm list");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian-function fitting and accuracy benchmark"};
  app.require_subcommand(1);

  // fit
  auto* fit = app.add_subcommand("fit", "Fit one CSV dataset");
  std::string fit_input;
  std::string fit_algorithm = "fas";
  int fit_max_iters = 0;
  double fit_tol = 1e-8;
  int fit_refresh = 0;
  std::string fit_format = "csv";
  fit->add_option("--input", fit_input, "two-column x,y CSV file")->required();
  fit->add_option("--algorithm", fit_algorithm,
                  "caruana|guo|guo-iter|roonizi|fas|fas-iter")
      ->check(CLI::IsMember(
          {"caruana", "guo", "guo-iter", "roonizi", "fas", "fas-iter"}));
  fit->add_option("--max-iters", fit_max_iters,
                  "iteration cap for guo-iter / fas-iter (default 10)");
  fit->add_option("--tol", fit_tol, "relative stopping tolerance");
  fit->add_option("--refresh-sigma", fit_refresh,
                  "fas-iter: refresh sigma every M iterations");
  fit->add_option("--format", fit_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Emit a synthetic dataset");
  gfit::Scenario scenario;
  scenario.truth = {1.0, 10.0, 2.0};
  simulate->add_option("--amplitude", scenario.truth.amplitude, "A");
  simulate->add_option("--mean", scenario.truth.mean, "mu");
  simulate->add_option("--sigma", scenario.truth.sigma, "sigma");
  simulate->add_option("--n", scenario.n, "number of samples");
  simulate->add_option("--width-ratio", scenario.width_ratio,
                       "W (window = W * sigma centered at mu)");
  simulate->add_option("--noise-sd", scenario.noise_sd, "sigma_w");
  simulate->add_option("--seed", scenario.seed, "PRNG seed");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo ARE% sweep");
  gfit::SweepConfig config;
  std::string sweep_axis = "w";
  std::string sweep_values;
  std::string sweep_algorithms;
  std::string sweep_format = "csv";
  int sweep_max_iters = 0;
  sweep->add_option("--axis", sweep_axis, "snr|w|n")
      ->check(CLI::IsMember({"snr", "w", "n"}));
  sweep->add_option("--values", sweep_values, "comma-separated axis values")
      ->required();
  sweep->add_option("--trials", config.trials, "trials per axis point");
  sweep->add_option("--seed", config.base_seed, "base seed");
  sweep->add_option("--amplitude", config.truth.amplitude, "true A");
  sweep->add_option("--mean", config.truth.mean, "true mu");
  sweep->add_option("--sigma", config.truth.sigma, "true sigma");
  sweep->add_option("--snr", config.fixed_snr, "fixed snr (non-snr sweeps)");
  sweep->add_option("--width-ratio", config.fixed_w,
                    "fixed W (non-W sweeps)");
  sweep->add_option("--n", config.fixed_n, "fixed N (non-N sweeps)");
  sweep->add_option("--algorithms", sweep_algorithms,
                    "comma-separated list (default caruana,guo,roonizi,fas)");
  sweep->add_option("--max-iters", sweep_max_iters,
                    "iteration cap for *-iter algorithms");
  sweep->add_option("--threads", config.threads, "worker threads");
  sweep->add_option("--format", sweep_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // complexity
  auto* complexity = app.add_subcommand(
      "complexity", "Closed-form operation counts per algorithm");
  std::int64_t comp_n = 0;
  gfit::CostModel cost;
  complexity->add_option("--n", comp_n, "number of observations")->required();
  complexity->add_option("--a-ln", cost.a_ln, "additions per ln");
  complexity->add_option("--m-ln", cost.m_ln, "multiplications per ln");
  complexity->add_option("--a-exp", cost.a_exp, "additions per exp");
  complexity->add_option("--m-exp", cost.m_exp, "multiplications per exp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fit) {
      const auto algo = gfit::parse_algorithm(fit_algorithm);
      gfit::IterationPolicy policy;
      policy.rel_tol = fit_tol;
      const bool iterative = *algo == gfit::Algorithm::GuoIterative ||
                             *algo == gfit::Algorithm::FasIterative;
      if (iterative) {
        policy.max_iters = fit->count("--max-iters") ? fit_max_iters : 10;
      }
      if (fit_refresh > 0) {
        policy.refresh_sigma_every = fit_refresh;
      }
      const gfit::Dataset data = gfit::read_dataset_file(fit_input);
      gfit::FitResult result;
      switch (*algo) {
        case gfit::Algorithm::Caruana:
          result = gfit::fit_caruana(data);
          break;
        case gfit::Algorithm::Guo:
        case gfit::Algorithm::GuoIterative:
          result = gfit::fit_guo(data, policy);
          break;
        case gfit::Algorithm::Roonizi:
          result = gfit::fit_roonizi(data);
          break;
        case gfit::Algorithm::Fas:
        case gfit::Algorithm::FasIterative:
          result = gfit::fit_fas(data, policy);
          break;
      }
      std::cout << gfit::write_fit(result, parse_format(fit_format));
    } else if (*simulate) {
      std::cout << gfit::write_dataset_csv(gfit::synthesize(scenario));
    } else if (*sweep) {
      if (sweep_axis == "snr") {
        config.axis = gfit::SweepAxis::Snr;
      } else if (sweep_axis == "n") {
        config.axis = gfit::SweepAxis::N;
      } else {
        config.axis = gfit::SweepAxis::W;
      }
      std::istringstream ss(sweep_values);
      std::string token;
      config.axis_values.clear();
      while (std::getline(ss, token, ',')) {
        config.axis_values.push_back(std::stod(token));
      }
      if (!sweep_algorithms.empty()) {
        config.algorithms = parse_algorithm_list(sweep_algorithms);
      }
      config.policy.max_iters = sweep_max_iters;
      const std::vector<gfit::SweepRow> rows = gfit::run_sweep(config);
      std::cout << gfit::write_sweep(config.algorithms, rows,
                                     parse_format(sweep_format));
    } else if (*complexity) {
      std::cout << "algorithm,additions,multiplications\n";
      const std::pair<std::string, gfit::CountedAlgorithm> algos[] = {
          {"guo", gfit::CountedAlgorithm::Guo},
          {"roonizi", gfit::CountedAlgorithm::Roonizi},
          {"fas", gfit::CountedAlgorithm::Fas}};
      for (const auto& [name, a] : algos) {
        const gfit::OpCount count = gfit::op_counts(a, comp_n, cost);
        std::cout << name << ',' << count.additions << ','
                  << count.multiplications << '\n';
      }
    }
  } catch (const gfit::FitError& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitFit;
  } catch (const gfit::DataError& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
