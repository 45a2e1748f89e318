#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "mgeuler/pipeline.hpp"
#include "mgeuler/report.hpp"

namespace {

std::vector<mgeuler::OrientationSign> signs_for(const std::string& orientation) {
  using mgeuler::OrientationSign;
  if (orientation == "even") return {OrientationSign::plus};
  if (orientation == "odd") return {OrientationSign::minus};
  return {OrientationSign::plus, OrientationSign::minus};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics of moduli spaces of graphs"};
  app.require_subcommand(1);

  int chi = 9;
  std::string orientation = "both";
  std::string out_dir = ".";
  std::string method = "contracted";
  const std::map<std::string, mgeuler::ExpansionMethod> methods{
      {"contracted", mgeuler::ExpansionMethod::contracted},
      {"direct", mgeuler::ExpansionMethod::direct}};

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--chi", chi, "table covers 0 <= g <= chi, 0 <= n <= chi")
        ->check(CLI::Range(2, 40))
        ->capture_default_str();
    cmd->add_option("--orientation", orientation, "even, odd or both")
        ->check(CLI::IsMember({"even", "odd", "both"}))
        ->capture_default_str();
    cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    cmd->add_option("--method", method, "series expansion strategy")
        ->check(CLI::IsMember({"contracted", "direct"}))
        ->capture_default_str();
  };

  auto* tables = app.add_subcommand("tables", "write the scalar TSV tables (two per orientation)");
  add_run_flags(tables);
  auto* equivariant = app.add_subcommand("equivariant", "write Schur-basis polynomial TSVs");
  add_run_flags(equivariant);

  mgeuler::CheckOptions check_options;
  auto* check = app.add_subcommand("check", "compare against the graph oracle and run stability checks");
  check->add_option("--max-complexity", check_options.max_complexity, "oracle range 3g-3+n <= N")
      ->check(CLI::Range(0, 6))
      ->capture_default_str();
  check->add_option("--stable-genus", check_options.stable_max_genus,
                    "stability and parity for 2 <= g <= N")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      const auto report = mgeuler::run_checks(check_options);
      report.print(std::cout);
      std::cout << (report.ok() ? "all checks passed" : "CHECKS FAILED") << '\n';
      return report.ok() ? 0 : 1;
    }
    mgeuler::PipelineConfig config;
    config.chi = chi;
    config.signs = signs_for(orientation);
    config.method = methods.at(method);
    const auto table = mgeuler::run(config);
    const auto written = *tables ? mgeuler::write_scalar_tables(table, out_dir)
                                 : mgeuler::write_equivariant_tables(table, out_dir);
    for (const auto& path : written) std::cout << "wrote " << path.string() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
