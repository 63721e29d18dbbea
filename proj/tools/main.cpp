// dg1d command line front end: `run` integrates one configuration,
// `converge` sweeps a doubling mesh sequence and tabulates errors.
// Exit codes: 0 success, 1 configuration error, 2 solver failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dg1d/driver.hpp"
#include "dg1d/errors.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;

std::string default_prefix(const std::string& config_path,
                           const std::string& output_dir) {
  const fs::path stem = fs::path(config_path).stem();
  const fs::path dir = output_dir.empty() ? fs::path(".") : fs::path(output_dir);
  return (dir / stem).string();
}

void prepare_output_dir(const std::string& output_dir) {
  if (!output_dir.empty()) {
    fs::create_directories(output_dir);
  }
}

void print_diagnostics(const dg1d::RunDiagnostics& diag, bool quiet) {
  if (quiet) return;
  std::printf("steps:               %d (%d dt retries)\n", diag.steps,
              diag.dt_retries);
  std::printf("conservation drift:  %.3e\n", diag.conservation_drift);
  if (diag.cells_limited_total > 0) {
    std::printf("limited cells:       %lld (min theta %.6f)\n",
                diag.cells_limited_total, diag.min_theta);
  }
  if (diag.max_picard_iterations > 0) {
    std::printf("picard iterations:   <= %d (max residual %.3e)\n",
                diag.max_picard_iterations, diag.max_picard_residual);
  }
}

int run_command(const std::string& config_path, const std::string& output_dir,
                bool quiet) {
  dg1d::RunConfig cfg = dg1d::parse_config_file(config_path);
  prepare_output_dir(output_dir);
  if (cfg.output_prefix.empty()) {
    cfg.output_prefix = default_prefix(config_path, output_dir);
  } else if (!output_dir.empty()) {
    cfg.output_prefix =
        (fs::path(output_dir) / fs::path(cfg.output_prefix).filename())
            .string();
  }

  const dg1d::RunResult result = dg1d::run_simulation(cfg);
  if (!quiet) {
    std::printf("law %s, %d elements, degree %d, integrator %s\n",
                dg1d::to_string(cfg.law).c_str(), cfg.elements, cfg.degree,
                dg1d::to_string(cfg.integrator).c_str());
    std::printf("final time:          %.6f\n", result.solution.time());
  }
  print_diagnostics(result.diagnostics, quiet);
  if (!quiet) {
    std::printf("snapshot:            %s_final.csv\n",
                cfg.output_prefix.c_str());
  }
  return kExitOk;
}

int converge_command(const std::string& config_path,
                     const std::vector<int>& meshes,
                     const std::string& output_dir, bool quiet) {
  dg1d::RunConfig cfg = dg1d::parse_config_file(config_path);
  prepare_output_dir(output_dir);

  const dg1d::ErrorTable table = dg1d::convergence_study(cfg, meshes);
  if (!quiet) {
    std::printf("%8s %12s %12s %12s %8s %8s %8s\n", "N", "L1", "L2", "Linf",
                "ord_L1", "ord_L2", "ord_Linf");
    for (const auto& row : table.rows) {
      if (row.has_order) {
        std::printf("%8d %12.4e %12.4e %12.4e %8.3f %8.3f %8.3f\n",
                    row.elements, row.l1, row.l2, row.linf, row.order_l1,
                    row.order_l2, row.order_linf);
      } else {
        std::printf("%8d %12.4e %12.4e %12.4e %8s %8s %8s\n", row.elements,
                    row.l1, row.l2, row.linf, "-", "-", "-");
      }
    }
  }

  const std::string table_path =
      default_prefix(config_path, output_dir) + "_convergence.csv";
  dg1d::write_error_table(table, table_path);
  if (!quiet) {
    std::printf("error table:         %s\n", table_path.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional discontinuous Galerkin solver for hyperbolic "
               "conservation laws"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  bool quiet = false;
  std::string meshes_arg = "20,40,80,160";

  CLI::App* run = app.add_subcommand("run", "Integrate one configuration");
  run->add_option("config", config_path, "plain-text key = value config file")
      ->required();
  run->add_option("--output-dir", output_dir, "directory for output files");
  run->add_flag("--quiet", quiet, "suppress console output");

  CLI::App* converge =
      app.add_subcommand("converge", "Mesh-doubling convergence study");
  converge->add_option("config", config_path, "base configuration")->required();
  converge->add_option("--meshes", meshes_arg,
                       "comma-separated doubling mesh sizes");
  converge->add_option("--output-dir", output_dir,
                       "directory for output files");
  converge->add_flag("--quiet", quiet, "suppress console output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) {
      return run_command(config_path, output_dir, quiet);
    }
    std::vector<int> meshes;
    std::size_t pos = 0;
    while (pos < meshes_arg.size()) {
      const std::size_t comma = meshes_arg.find(',', pos);
      const std::string token =
          meshes_arg.substr(pos, comma == std::string::npos ? std::string::npos
                                                            : comma - pos);
      try {
        meshes.push_back(std::stoi(token));
      } catch (const std::exception&) {
        throw dg1d::ConfigError("--meshes: '" + token + "' is not an integer");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return converge_command(config_path, meshes, output_dir, quiet);
  } catch (const dg1d::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const dg1d::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}
