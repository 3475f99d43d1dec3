// coulho: truncation catalogs, variational spectra, sweeps, Hellmann-Feynman
// checks and disclination-model mappings for the radial Coulomb-plus-
// oscillator equation.
//
// Exit codes: 0 success, 2 argument error, 3 convergence shortfall.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coulho/frobenius.hpp"
#include "coulho/models.hpp"
#include "coulho/report.hpp"
#include "coulho/sweep.hpp"
#include "coulho/variational.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgs = 2;
constexpr int kExitShortfall = 3;
constexpr double kHfResidualTolerance = 1e-5;

constexpr const char* kFieldDisclaimer =
    "note: these B values are only where the truncated series gives a polynomial factor; "
    "every other B also admits square-integrable bound states";

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Turns a flat JSON object into "--key value" arguments.
std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("invalid JSON in " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ArgumentError("config file must hold a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : j.items()) {
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_number_integer()) {
      args.push_back(flag);
      args.push_back(std::to_string(value.get<long long>()));
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(coulho::format_number(value.get<double>()));
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else {
      throw ArgumentError("config key '" + key + "' must be a scalar");
    }
  }
  return args;
}

/// argv with config-file arguments inserted right after the subcommand, so
/// explicit flags (parsed later, last one wins) override the file.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.size() < 2) return args;
  const auto extra = config_arguments(path);
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path);
  out << text;
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json") throw ArgumentError("--format must be csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact truncation solutions and variational spectra of the radial Coulomb-plus-oscillator equation"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string config_path;
  std::string format = "csv";
  auto add_common = [&](CLI::App* sub) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--config", config_path, "JSON file mirroring the flags (flags win)");
    sub->add_option("--format", format, "Output format: csv or json")->capture_default_str();
  };

  // truncation
  int trunc_n = 0;
  double gamma = 0.0;
  double root_tol = coulho::kDefaultRootTolerance;
  auto* truncation = app.add_subcommand("truncation", "W and the roots a^(k) of c_{n+1}(a) = 0");
  truncation->add_option("--n", trunc_n, "Polynomial degree n")->required()->check(CLI::NonNegativeNumber);
  truncation->add_option("--gamma", gamma, "Angular parameter gamma")->capture_default_str();
  truncation->add_option("--tol", root_tol, "Root bracket width")->capture_default_str()->check(CLI::PositiveNumber);
  add_common(truncation);

  // spectrum
  double a = 0.0;
  int n_basis = coulho::kDefaultBasisSize;
  int levels = 5;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Rayleigh-Ritz eigenvalues W_0 <= W_1 <= ...");
  spectrum_cmd->add_option("--gamma", gamma, "Angular parameter gamma")->capture_default_str();
  spectrum_cmd->add_option("--a", a, "Coulomb-like strength a")->capture_default_str();
  spectrum_cmd->add_option("--n-basis", n_basis, "Basis size N")->capture_default_str()->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--levels", levels, "Number of levels to print")->capture_default_str()->check(CLI::PositiveNumber);
  add_common(spectrum_cmd);

  // sweep
  coulho::SweepConfig sweep_cfg;
  std::string output_prefix = "sweep";
  std::string svg_path;
  auto* sweep = app.add_subcommand("sweep", "Eigenvalue curves over an a-grid with truncation points overlaid");
  sweep->add_option("--gamma", sweep_cfg.gamma, "Angular parameter gamma")->capture_default_str();
  sweep->add_option("--a-min", sweep_cfg.a_min, "Lower end of the a-grid")->capture_default_str();
  sweep->add_option("--a-max", sweep_cfg.a_max, "Upper end of the a-grid")->capture_default_str();
  sweep->add_option("--steps", sweep_cfg.steps, "Grid points")->capture_default_str();
  sweep->add_option("--levels", sweep_cfg.levels, "Curves W_0..W_{levels-1}")->capture_default_str();
  sweep->add_option("--n-max", sweep_cfg.n_max, "Largest truncation degree overlaid")->capture_default_str();
  sweep->add_option("--n-basis", sweep_cfg.basis_size, "Basis size N")->capture_default_str();
  sweep->add_option("--threads", sweep_cfg.threads, "Worker threads (0 = hardware)")->capture_default_str();
  sweep->add_option("--output", output_prefix, "Output prefix: <prefix>_curves.csv/_points.csv or <prefix>.json")
      ->capture_default_str();
  sweep->add_option("--svg", svg_path, "Also write an SVG figure");
  add_common(sweep);

  // hf-check
  int level = 0;
  double fd_step = coulho::kDefaultFdStep;
  auto* hf = app.add_subcommand("hf-check", "Compare dW/da by central differences with -<1/xi>");
  hf->set_help_flag("--help", "Print this help message and exit");
  hf->add_option("--gamma", gamma, "Angular parameter gamma")->capture_default_str();
  hf->add_option("--a", a, "Coulomb-like strength a")->capture_default_str();
  hf->add_option("--level", level, "Radial quantum number")->capture_default_str()->check(CLI::NonNegativeNumber);
  hf->add_option("--n-basis", n_basis, "Basis size N")->capture_default_str()->check(CLI::PositiveNumber);
  hf->add_option("--h", fd_step, "Finite-difference step")->capture_default_str()->check(CLI::PositiveNumber);
  add_common(hf);

  // map
  coulho::DisclinationParams params;
  std::string direction = "forward";
  int map_n = 1;
  auto* map = app.add_subcommand("map", "Disclination model: physical parameters <-> (gamma, a, W)");
  map->add_option("--m-star", params.m_star, "Effective mass")->capture_default_str();
  map->add_option("--q", params.q, "Charge (signed)")->capture_default_str();
  map->add_option("--B", params.B, "Magnetic field")->capture_default_str();
  map->add_option("--alpha", params.alpha, "Disclination parameter")->capture_default_str();
  map->add_option("--kappa", params.kappa, "Self-interaction constant")->capture_default_str();
  map->add_option("--epsilon", params.epsilon, "Permittivity")->capture_default_str();
  map->add_option("--hbar", params.hbar, "Reduced Planck constant")->capture_default_str();
  map->add_option("--c", params.c, "Speed of light")->capture_default_str();
  map->add_option("--l", params.l, "Angular quantum number")->capture_default_str();
  map->add_option("--k", params.k, "Axial wavenumber in units of 1/L")->capture_default_str();
  map->add_option("--direction", direction, "forward or allowed-b")->capture_default_str();
  map->add_option("--n", map_n, "Truncation degree for allowed-b")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(map);

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::vector<char*> cargs;
    for (auto& s : args) cargs.push_back(s.data());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgs;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  }

  try {
    check_format(format);
    const bool json = format == "json";

    if (*truncation) {
      const auto sol = coulho::truncation_spectrum(trunc_n, gamma, root_tol);
      if (json) {
        std::cout << coulho::to_json(sol).dump(2) << '\n';
      } else {
        std::cout << "# W = " << coulho::format_number(sol.W) << "; c_{n+1}(a) coefficients (ascending):";
        for (double c : sol.poly_coefficients()) std::cout << ' ' << coulho::format_number(c);
        std::cout << '\n' << coulho::to_csv(sol);
      }
      return kExitOk;
    }

    if (*spectrum_cmd) {
      if (levels > n_basis) throw ArgumentError("--levels must not exceed --n-basis");
      coulho::SpectrumResult res;
      try {
        coulho::SpectrumOptions opts;
        opts.min_levels = levels;
        res = coulho::spectrum({gamma, a}, n_basis, opts);
      } catch (const coulho::BasisShortfall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitShortfall;
      }
      std::cout << (json ? coulho::to_json(res, levels).dump(2) + "\n" : coulho::to_csv(res, levels));
      return kExitOk;
    }

    if (*sweep) {
      const auto table = coulho::compute_sweep(sweep_cfg);
      if (json) {
        write_file(output_prefix + ".json", coulho::sweep_json(table).dump(2) + "\n");
        std::cout << "wrote " << output_prefix << ".json\n";
      } else {
        write_file(output_prefix + "_curves.csv", coulho::sweep_curves_csv(table));
        write_file(output_prefix + "_points.csv", coulho::sweep_points_csv(table));
        std::cout << "wrote " << output_prefix << "_curves.csv and " << output_prefix << "_points.csv\n";
      }
      if (!svg_path.empty()) {
        write_file(svg_path, coulho::sweep_svg(table));
        std::cout << "wrote " << svg_path << '\n';
      }
      std::size_t flagged = 0;
      for (const auto& row : table.rows) flagged += row.status != "ok";
      std::cout << table.rows.size() << " grid points (" << flagged << " flagged), " << table.points.size()
                << " truncation points\n";
      return kExitOk;
    }

    if (*hf) {
      coulho::HFReport rep;
      try {
        rep = coulho::hellmann_feynman_check({gamma, a}, level, n_basis, fd_step);
      } catch (const coulho::BasisShortfall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitShortfall;
      }
      std::cout << (json ? coulho::to_json(rep).dump(2) + "\n" : coulho::to_csv(rep));
      if (rep.crossing_suspected) std::cerr << "warning: eigenvector overlap " << rep.min_overlap << " suggests a level crossing\n";
      return rep.residual <= kHfResidualTolerance && !rep.crossing_suspected ? kExitOk : kExitShortfall;
    }

    if (*map) {
      if (direction == "forward") {
        const auto img = coulho::to_dimensionless(params);
        if (json) {
          std::cout << coulho::to_json(img).dump(2) << '\n';
        } else {
          std::cout << "length_unit,gamma,a,w_scale,w_offset\n"
                    << coulho::format_number(img.length_unit) << ',' << coulho::format_number(img.gamma) << ','
                    << coulho::format_number(img.a) << ',' << coulho::format_number(img.w_scale) << ','
                    << coulho::format_number(img.w_offset) << '\n';
        }
        return kExitOk;
      }
      if (direction == "allowed-b") {
        const auto rep = coulho::allowed_field_strengths(params, map_n);
        if (json) {
          auto j = coulho::to_json(rep);
          j["note"] = kFieldDisclaimer;
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << "# " << kFieldDisclaimer << '\n' << "n,l,k,a_root,B\n";
          for (const auto& f : rep.fields)
            std::cout << rep.n << ',' << rep.l << ',' << f.k << ',' << coulho::format_number(f.a_root) << ','
                      << coulho::format_number(f.B) << '\n';
        }
        return kExitOk;
      }
      throw ArgumentError("--direction must be forward or allowed-b");
    }
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  } catch (const coulho::BasisShortfall& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitShortfall;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
