// tomqkd: key-rate comparison toolkit for a two-way weak-coherent QKD scheme
// against BB84 over lossy fiber.
//
// Subcommands:
//   curves           Eve-information curves vs disturbance (CSV)
//   sweep            per-distance optimized key-rate sweep (CSV + gnuplot)
//   check-condition  optimal-intensity ratio vs sufficient-condition threshold
//   verify           independent oracle suite (CSV report)
//
// Exit codes: 0 success, 2 usage/config error, 3 oracle failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tomqkd/csv.hpp"
#include "tomqkd/intensity_optimizer.hpp"
#include "tomqkd/oracle.hpp"

namespace fs = std::filesystem;
using tomqkd::csv::format_number;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitOracle = 3;

struct CommonOptions {
  std::string preset_path;
  std::string protocol = "both";
  std::string mode = "pessimistic";
  double from = 0.0;
  double to = 120.0;
  double step = 0.5;
  std::optional<double> eta_alice;
  std::string out_dir = ".";
  std::uint64_t seed = 42;
  long long samples = 1000000;
  double distance = 0.0;
};

std::vector<tomqkd::Protocol> selected_protocols(const std::string& name) {
  if (name == "bb84") return {tomqkd::Protocol::bb84};
  if (name == "tom") return {tomqkd::Protocol::tom};
  return {tomqkd::Protocol::bb84, tomqkd::Protocol::tom};
}

tomqkd::RateMode selected_mode(const std::string& name) {
  return name == "resolved" ? tomqkd::RateMode::photon_resolved
                            : tomqkd::RateMode::pessimistic;
}

tomqkd::ChannelParams load_params(const CommonOptions& opt) {
  tomqkd::ChannelParams params = tomqkd::load_preset(opt.preset_path);
  if (opt.eta_alice) {
    params = params.with_eta_alice(*opt.eta_alice);
    params.validate();
  }
  return params;
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);  // binary keeps bytes identical
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  return out;
}

int run_curves(const CommonOptions& opt, double from, double to, double step) {
  if (!(from >= 0.0 && to <= 0.5 && from <= to && step > 0.0)) {
    std::cerr << "curves: need 0 <= from <= to <= 0.5 and step > 0\n";
    return kExitConfig;
  }
  auto out = open_output(opt.out_dir, "curves.csv");
  out << "e,I_AB,I_ToM,I_IR,I_BB84\n";
  const double eps = step * 1e-9;
  for (long i = 0;; ++i) {
    const double raw = from + step * static_cast<double>(i);
    if (raw > to + eps) {
      break;
    }
    const double e = std::min(raw, 0.5);
    const tomqkd::InfoCurves curves = tomqkd::mutual_info_curves(e);
    out << format_number(e) << ',' << format_number(curves.i_ab) << ','
        << format_number(curves.i_tom) << ','
        << (curves.i_ir ? format_number(*curves.i_ir) : std::string()) << ','
        << format_number(curves.i_bb84) << '\n';
    if (from == to) break;
  }
  std::cout << "wrote " << (fs::path(opt.out_dir) / "curves.csv").string()
            << '\n';
  return kExitOk;
}

void write_plot_script(const fs::path& dir,
                       const std::vector<tomqkd::Protocol>& protocols,
                       tomqkd::RateMode mode) {
  std::ofstream gp(dir / "sweep_plot.gp", std::ios::binary);
  gp << "# gnuplot script for the sweep emitted next to it\n"
     << "set datafile separator ','\n"
     << "set xlabel 'distance [km]'\n"
     << "set ylabel 'secure key rate [bits/pulse]'\n"
     << "set logscale y\n"
     << "set key top right\n"
     << "set title '" << tomqkd::rate_mode_name(mode) << " mode'\n"
     << "plot \\\n";
  for (std::size_t i = 0; i < protocols.size(); ++i) {
    const char* name = tomqkd::protocol_name(protocols[i]);
    gp << "  'sweep.csv' every ::1 using 1:(strcol(2) eq '" << name
       << "' ? column(7) : NaN) with lines lw 2 title '" << name << "'"
       << (i + 1 < protocols.size() ? ", \\\n" : "\n");
  }
}

int run_sweep(const CommonOptions& opt) {
  const tomqkd::ChannelParams params = load_params(opt);
  const tomqkd::DistanceGrid grid{opt.from, opt.to, opt.step};
  const std::vector<tomqkd::Protocol> protocols = selected_protocols(opt.protocol);
  const tomqkd::RateMode mode = selected_mode(opt.mode);

  const tomqkd::SweepResult result = tomqkd::sweep(params, grid, protocols, mode);

  auto out = open_output(opt.out_dir, "sweep.csv");
  out << "distance_km,protocol,mu_opt,gain,qber,beta,rate\n";
  for (const tomqkd::SweepSeries& series : result.series) {
    for (const tomqkd::RatePoint& point : series.points) {
      out << format_number(point.distance_km) << ','
          << tomqkd::protocol_name(series.protocol) << ','
          << format_number(point.mu) << ',' << format_number(point.gain) << ','
          << format_number(point.qber) << ',' << format_number(point.beta)
          << ',' << format_number(point.rate) << '\n';
    }
  }
  write_plot_script(opt.out_dir, protocols, mode);

  bool any_positive = false;
  for (const tomqkd::SweepSeries& series : result.series) {
    for (const tomqkd::RatePoint& point : series.points) {
      any_positive = any_positive || point.rate > 0.0;
    }
    std::cout << tomqkd::protocol_name(series.protocol) << " max distance: ";
    if (series.max_distance_km) {
      std::cout << format_number(*series.max_distance_km) << " km\n";
    } else {
      std::cout << "not inside the sweep range\n";
    }
  }
  if (result.crossover_km) {
    std::cout << "bb84 overtakes tom at " << format_number(*result.crossover_km)
              << " km\n";
  }
  if (!any_positive) {
    std::cerr << "warning: no positive key rate anywhere in the sweep range\n";
  }
  std::cout << "wrote " << (fs::path(opt.out_dir) / "sweep.csv").string()
            << " and sweep_plot.gp\n";
  return kExitOk;
}

int run_check_condition(const CommonOptions& opt) {
  const tomqkd::ChannelParams params = load_params(opt);
  const tomqkd::RateMode mode = selected_mode(opt.mode);

  const tomqkd::OptimizeResult bb84 =
      tomqkd::optimize_mu(params, opt.distance, tomqkd::Protocol::bb84, mode);
  const tomqkd::OptimizeResult tom =
      tomqkd::optimize_mu(params, opt.distance, tomqkd::Protocol::tom, mode);
  const double ratio = tom.mu_opt / bb84.mu_opt;
  const tomqkd::ConditionCheck check =
      tomqkd::check_sufficient_condition(params, opt.distance, ratio);

  std::cout << "distance: " << format_number(opt.distance)
            << " km, eta_alice: " << format_number(params.eta_alice) << '\n'
            << "mu_opt(bb84) = " << format_number(bb84.mu_opt)
            << "  rate = " << format_number(bb84.rate_opt)
            << (bb84.positive_rate ? "" : "  (no positive rate)") << '\n'
            << "mu_opt(tom)  = " << format_number(tom.mu_opt)
            << "  rate = " << format_number(tom.rate_opt)
            << (tom.positive_rate ? "" : "  (no positive rate)") << '\n'
            << "intensity ratio k = " << format_number(ratio) << '\n'
            << "threshold eta_alice^-1 * 10^(gamma*l/10) = "
            << format_number(check.threshold) << '\n'
            << "sufficient condition " << (check.holds ? "holds" : "does not hold")
            << '\n'
            << "tom rate exceeds bb84 rate: "
            << (tom.rate_opt > bb84.rate_opt ? "yes" : "no") << '\n';

  if (check.holds && !(tom.rate_opt > bb84.rate_opt)) {
    std::cerr << "inconsistency: condition holds but tom does not win\n";
    return kExitOracle;
  }
  return kExitOk;
}

int run_verify(const CommonOptions& opt) {
  tomqkd::ChannelParams params;
  if (!opt.preset_path.empty()) {
    params = load_params(opt);
  } else {
    // neutral sample parameters; any valid channel works for the
    // self-consistency checks
    params.gamma_db_per_km = 0.2;
    params.eta_bob = 0.1;
    params.eta_alice = 1.0;
    params.p_dark = 1e-5;
    params.e_det = 0.02;
  }

  const std::vector<tomqkd::OracleReport> reports =
      tomqkd::run_oracle_suite(params, opt.seed, opt.samples);

  auto out = open_output(opt.out_dir, "oracle_report.csv");
  out << "check,analytic,oracle,deviation,tolerance,samples,std_error,pass\n";
  bool all_pass = true;
  for (const tomqkd::OracleReport& report : reports) {
    out << report.check << ',' << format_number(report.analytic) << ','
        << format_number(report.oracle_value) << ','
        << format_number(report.deviation) << ','
        << format_number(report.tolerance) << ',' << report.samples << ','
        << format_number(report.std_error) << ','
        << (report.pass ? "pass" : "FAIL") << '\n';
    std::cout << (report.pass ? "[pass] " : "[FAIL] ") << report.check
              << "  deviation " << format_number(report.deviation) << '\n';
    all_pass = all_pass && report.pass;
  }
  std::cout << (all_pass ? "all oracle checks passed\n"
                         : "oracle checks FAILED\n");
  return all_pass ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-way vs BB84 weak-coherent QKD key-rate toolkit"};
  app.require_subcommand(1);
  CommonOptions opt;

  CLI::App* curves = app.add_subcommand(
      "curves", "Eve-information curves vs disturbance");
  double curves_from = 0.0, curves_to = 0.5, curves_step = 0.005;
  curves->add_option("--from", curves_from, "grid start (disturbance)");
  curves->add_option("--to", curves_to, "grid end (disturbance)");
  curves->add_option("--step", curves_step, "grid step");
  curves->add_option("--out", opt.out_dir, "output directory");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "optimized key-rate sweep over distance");
  sweep->add_option("--preset", opt.preset_path, "preset file")->required();
  sweep->add_option("--protocol", opt.protocol, "bb84|tom|both")
      ->check(CLI::IsMember({"bb84", "tom", "both"}));
  sweep->add_option("--mode", opt.mode, "pessimistic|resolved")
      ->check(CLI::IsMember({"pessimistic", "resolved"}));
  sweep->add_option("--from", opt.from, "start distance [km]");
  sweep->add_option("--to", opt.to, "stop distance [km]");
  sweep->add_option("--step", opt.step, "distance step [km]");
  sweep->add_option("--eta-alice", opt.eta_alice, "override Alice transmitivity");
  sweep->add_option("--out", opt.out_dir, "output directory");

  CLI::App* check = app.add_subcommand(
      "check-condition", "optimal-intensity ratio vs threshold");
  check->add_option("--preset", opt.preset_path, "preset file")->required();
  check->add_option("--distance", opt.distance, "distance [km]")->required();
  check->add_option("--mode", opt.mode, "pessimistic|resolved")
      ->check(CLI::IsMember({"pessimistic", "resolved"}));
  check->add_option("--eta-alice", opt.eta_alice, "override Alice transmitivity");

  CLI::App* verify = app.add_subcommand("verify", "run the oracle suite");
  verify->add_option("--preset", opt.preset_path,
                     "preset file for the optimizer cross-checks");
  verify->add_option("--seed", opt.seed, "RNG seed");
  verify->add_option("--samples", opt.samples, "Monte-Carlo samples per check");
  verify->add_option("--out", opt.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (curves->parsed()) return run_curves(opt, curves_from, curves_to, curves_step);
    if (sweep->parsed()) return run_sweep(opt);
    if (check->parsed()) return run_check_condition(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const tomqkd::PresetError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
