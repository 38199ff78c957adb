// nclp: norms of density-weighted extensions of positive maps on M_n.
//
//   nclp phase-diagram --out diagram.csv [--p-min 1 --p-max 3 --p-step 0.1 --theta-step 0.01 --with-family]
//   nclp norm --map map.json --state state.json --p 1.5 --theta 0.2 [--restarts 32 --seed 0xC0FFEE]
//   nclp counterexample --p 1.5 --theta 0.1 [--tol 1e-6]
//   nclp verify [--seed 0xC0FFEE]
//
// Exit codes: 0 success, 2 invalid input, 3 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "nclp/io.hpp"
#include "nclp/phase_diagram.hpp"
#include "nclp/reports.hpp"
#include "nclp/verify.hpp"

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitVerifyFailed = 3;

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used, 0);
  if (used != text.size()) throw std::invalid_argument("invalid seed: " + text);
  return v;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << text;
  if (!out) throw std::invalid_argument("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norm estimates and phase diagrams for density-weighted L^p extensions of positive maps"};
  app.require_subcommand(1);

  std::string seed_text = "0xC0FFEE";
  std::string out_path;

  nclp::PhaseDiagramRequest diagram;
  auto* cmd_diagram = app.add_subcommand("phase-diagram", "classify a (p, theta) grid and write CSV");
  cmd_diagram->add_option("--p-min", diagram.p_min)->capture_default_str();
  cmd_diagram->add_option("--p-max", diagram.p_max)->capture_default_str();
  cmd_diagram->add_option("--p-step", diagram.p_step)->capture_default_str();
  cmd_diagram->add_option("--theta-step", diagram.theta_step)->capture_default_str();
  cmd_diagram->add_flag("--with-family", diagram.with_family, "add the qubit-family maximum for p < 2");
  cmd_diagram->add_option("--out", out_path, "output CSV path ('-' for stdout)")->required();
  cmd_diagram->add_option("--seed", seed_text, "accepted for uniformity; the sweep is deterministic");

  std::string map_path;
  std::string state_path;
  double p = 2.0;
  double theta = 0.5;
  nclp::EstimatorConfig cfg;
  auto* cmd_norm = app.add_subcommand("norm", "estimate the induced Schatten norm of an embedded map");
  cmd_norm->add_option("--map", map_path, "superoperator JSON")->required();
  cmd_norm->add_option("--state", state_path, "state JSON")->required();
  cmd_norm->add_option("--p", p)->required();
  cmd_norm->add_option("--theta", theta)->required();
  cmd_norm->add_option("--restarts", cfg.restarts)->capture_default_str();
  cmd_norm->add_option("--seed", seed_text)->capture_default_str();
  cmd_norm->add_option("--out", out_path, "output JSON path (default stdout)");

  double tol = 1e-6;
  auto* cmd_counter = app.add_subcommand("counterexample", "search the qubit family for a norm > 1 witness");
  cmd_counter->add_option("--p", p)->required();
  cmd_counter->add_option("--theta", theta)->required();
  cmd_counter->add_option("--tol", tol)->capture_default_str();
  cmd_counter->add_option("--out", out_path, "output JSON path (default stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
  cmd_verify->add_option("--seed", seed_text)->capture_default_str();
  cmd_verify->add_option("--out", out_path, "report JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    const std::uint64_t seed = parse_seed(seed_text);
    if (*cmd_diagram) {
      write_output(out_path, nclp::phase_diagram_csv(nclp::sweep_phase_diagram(diagram)));
    } else if (*cmd_norm) {
      cfg.seed = seed;
      const auto map = nclp::io::superop_from_json(nclp::io::load_json_file(map_path));
      const auto state = nclp::io::state_from_json(nclp::io::load_json_file(state_path));
      write_output(out_path, nclp::norm_report(map, state, p, theta, cfg).dump(2) + "\n");
    } else if (*cmd_counter) {
      write_output(out_path, nclp::counterexample_report(p, theta, tol).dump(2) + "\n");
    } else if (*cmd_verify) {
      const nclp::VerifyReport report = nclp::run_invariant_suite(seed);
      write_output(out_path, report.to_json().dump(2) + "\n");
      if (!report.passed()) return kExitVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return 0;
}
