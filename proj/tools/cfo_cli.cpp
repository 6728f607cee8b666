// cfo: command-line front end for runs, sweeps and verification against the
// published results.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cfo/cfo.hpp"
#include "cfo/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kRuntime = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cfo::BenchmarkId parse_function(const std::string& s) {
  auto id = cfo::parse_benchmark_id(s);
  if (!id) throw UsageError("unknown function id '" + s + "' (expected F1..F23)");
  return *id;
}

struct CommonOptions {
  std::string function;
  std::string format = "text";
  std::string out_dir;
  std::string precision = "double";
  std::string coincident = "reposition";
  std::string frep_schedule = "accumulate";
  unsigned threads = 1;
};

struct ParamOptions {
  std::optional<int> nt;
  std::optional<double> g, alpha, beta, dt, frep, dfrep, sat_tol;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_format = true) {
  cmd->add_option("--function,-f", o.function, "benchmark id, F1..F23")->required();
  if (with_format) {
    cmd->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", o.out_dir, "directory for table, CSV, JSON and series files");
  }
  cmd->add_option("--threads", o.threads, "worker threads for independent runs")->check(CLI::PositiveNumber);
  cmd->add_option("--precision", o.precision, "floating type")->check(CLI::IsMember({"double", "long-double"}));
  cmd->add_option("--coincident", o.coincident, "handling of probes at the same position")
      ->check(CLI::IsMember({"reposition", "skip"}));
  cmd->add_option("--frep-schedule", o.frep_schedule, "F_rep update rule")
      ->check(CLI::IsMember({"accumulate", "exact"}));
}

void add_params(CLI::App* cmd, ParamOptions& p) {
  cmd->add_option("--nt", p.nt, "maximum time step");
  cmd->add_option("--g", p.g, "gravitational constant");
  cmd->add_option("--alpha", p.alpha, "fitness-difference exponent");
  cmd->add_option("--beta", p.beta, "distance exponent");
  cmd->add_option("--dt", p.dt, "time increment");
  cmd->add_option("--frep", p.frep, "initial repositioning factor");
  cmd->add_option("--dfrep", p.dfrep, "repositioning factor increment");
  cmd->add_option("--sat-tol", p.sat_tol, "fitness saturation tolerance");
  cmd->add_option("--seed", p.seed, "F7 noise seed");
}

void apply(const CommonOptions& o, const ParamOptions& p, cfo::CfoParams& base) {
  if (p.nt) base.nt = *p.nt;
  if (p.g) base.g = *p.g;
  if (p.alpha) base.alpha = *p.alpha;
  if (p.beta) base.beta = *p.beta;
  if (p.dt) base.delta_t = *p.dt;
  if (p.frep) base.frep_init = *p.frep;
  if (p.dfrep) base.delta_frep = *p.dfrep;
  if (p.sat_tol) base.sat_tol = *p.sat_tol;
  if (p.seed) base.seed = *p.seed;
  base.coincident = o.coincident == "skip" ? cfo::CoincidentProbes::kSkip : cfo::CoincidentProbes::kReposition;
  base.frep_schedule = o.frep_schedule == "exact" ? cfo::FrepSchedule::kExactSteps : cfo::FrepSchedule::kAccumulate;
}

cfo::SweepResult execute(const cfo::SweepConfig& config, const CommonOptions& o) {
  if (o.precision == "long-double") return cfo::run_sweep<long double>(config);
  return cfo::run_sweep<double>(config);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.imbue(std::locale::classic());
  return f;
}

void write_outputs(const cfo::SweepResult& sweep, const cfo::RunManifest& m, const CommonOptions& o) {
  if (o.format == "csv") {
    cfo::export_csv(sweep, m, std::cout);
  } else if (o.format == "json") {
    cfo::export_json(sweep, m, std::cout);
  } else {
    std::cout << cfo::render_run_table(sweep, m);
  }
  if (o.out_dir.empty()) return;
  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem = cfo::to_string(sweep.function);
  {
    auto f = open_out(dir / (stem + "_table.txt"));
    f << cfo::render_run_table(sweep, m);
  }
  {
    auto f = open_out(dir / (stem + "_runs.csv"));
    cfo::export_csv(sweep, m, f);
  }
  {
    auto f = open_out(dir / (stem + "_runs.json"));
    cfo::export_json(sweep, m, f);
  }
}

template <typename Real>
void write_trace(const cfo::SweepConfig& config, const CommonOptions& o) {
  const cfo::Benchmark& bench = cfo::get_benchmark(config.function);
  cfo::CfoParams p = config.base;
  p.gamma = config.gamma_start;
  p.probes_per_axis = config.ppa_min;
  cfo::RunOptions ro;
  ro.trace = true;
  const auto result = cfo::run_single<Real>(bench, p, ro);
  const std::filesystem::path dir(o.out_dir.empty() ? "." : o.out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem = cfo::to_string(config.function);
  const std::pair<const char*, cfo::SeriesKind> kinds[] = {
      {"best-fitness", cfo::SeriesKind::kBestFitness},
      {"davg", cfo::SeriesKind::kDavg},
      {"best-probe", cfo::SeriesKind::kBestProbe}};
  for (const auto& [name, kind] : kinds) {
    auto f = open_out(dir / (stem + "_" + name + ".dat"));
    cfo::emit_series(result.trace, kind, f);
  }
}

int cmd_list_functions(const std::string& format) {
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const cfo::Benchmark& b : cfo::benchmark_suite()) {
      nlohmann::ordered_json j;
      j["id"] = cfo::to_string(b.id);
      j["name"] = std::string(b.name);
      j["nd"] = b.nd;
      j["lower"] = b.lower;
      j["upper"] = b.upper;
      j["f_max"] = b.f_max;
      j["stochastic"] = b.stochastic;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << '\n';
    return kOk;
  }
  std::cout << "id    nd   bounds                  f_max        stochastic  name\n";
  for (const cfo::Benchmark& b : cfo::benchmark_suite()) {
    std::string bounds;
    const bool uniform = std::adjacent_find(b.lower.begin(), b.lower.end(), std::not_equal_to<>()) == b.lower.end() &&
                         std::adjacent_find(b.upper.begin(), b.upper.end(), std::not_equal_to<>()) == b.upper.end();
    if (uniform) {
      bounds = "[" + cfo::fmt::exact(b.lower[0]) + ", " + cfo::fmt::exact(b.upper[0]) + "]";
    } else {
      for (std::size_t i = 0; i < b.lower.size(); ++i) {
        if (i) bounds += "x";
        bounds += "[" + cfo::fmt::exact(b.lower[i]) + "," + cfo::fmt::exact(b.upper[i]) + "]";
      }
    }
    char line[256];
    std::snprintf(line, sizeof line, "%-5s %3d   %-22s  %-12s %-11s %s\n", cfo::to_string(b.id).c_str(), b.nd,
                  bounds.c_str(), cfo::fmt::exact(b.f_max).c_str(), b.stochastic ? "yes" : "no",
                  std::string(b.name).c_str());
    std::cout << line;
  }
  return kOk;
}

int cmd_verify(const std::string& function, const CommonOptions& o) {
  std::vector<cfo::BenchmarkId> ids;
  if (function == "all") {
    for (const cfo::Benchmark& b : cfo::benchmark_suite()) ids.push_back(b.id);
  } else {
    ids.push_back(parse_function(function));
  }
  bool all_ok = true;
  for (cfo::BenchmarkId id : ids) {
    cfo::SweepConfig config = cfo::SweepConfig::paper_grid(id);
    config.threads = o.threads;
    apply(o, {}, config.base);
    const cfo::SweepResult sweep = execute(config, o);
    const cfo::VerifyReport rep = cfo::verify_sweep(sweep);
    std::cout << cfo::render_table1_row(sweep) << '\n';
    if (!rep.comparable) {
      std::cout << "  skipped: stochastic evaluator, published rows are not reproducible\n";
      continue;
    }
    for (const cfo::VerifyCheck& c : rep.checks) {
      std::cout << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    all_ok = all_ok && rep.passed();
  }
  return all_ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  std::locale::global(std::locale::classic());
  std::cout.imbue(std::locale::classic());

  CLI::App app{"Central Force Optimization runs, sweeps and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cfo::kVersion));

  std::string list_format = "text";
  auto* list = app.add_subcommand("list-functions", "list the benchmark suite");
  list->add_option("--format", list_format)->check(CLI::IsMember({"text", "json"}));

  CommonOptions run_o;
  ParamOptions run_p;
  std::optional<double> gamma;
  std::optional<int> ppa;
  bool gamma_sweep = false, ppa_sweep = false, trace = false;
  auto* run = app.add_subcommand("run", "run one configuration, or sweep gamma and/or probes per axis");
  add_common(run, run_o);
  add_params(run, run_p);
  auto* g_opt = run->add_option("--gamma", gamma, "diagonal fraction of the probe-line intersection");
  auto* gs_opt = run->add_flag("--gamma-sweep", gamma_sweep, "gamma = 0, 0.1, ..., 1");
  g_opt->excludes(gs_opt);
  auto* p_opt = run->add_option("--probes-per-axis", ppa, "probes on each probe line");
  auto* ps_opt = run->add_flag("--ppa-sweep", ppa_sweep, "probes per axis over the published grid");
  p_opt->excludes(ps_opt);
  run->add_flag("--trace", trace, "write best-fitness, davg and best-probe series (single configuration)");

  CommonOptions sweep_o;
  ParamOptions sweep_p;
  bool paper_grid = false;
  std::optional<int> ppa_max, gamma_count;
  auto* sweep = app.add_subcommand("sweep", "probes-per-axis x gamma sweep");
  add_common(sweep, sweep_o);
  add_params(sweep, sweep_p);
  sweep->add_flag("--paper-grid", paper_grid, "published grids (this is also the default grid)");
  sweep->add_option("--ppa-max", ppa_max, "largest probes per axis");
  sweep->add_option("--gamma-count", gamma_count, "number of gamma values in [0, 1]");

  CommonOptions verify_o;
  std::string verify_fn;
  auto* verify = app.add_subcommand("verify", "run the published sweep and compare with the published results");
  verify->add_option("--function,-f", verify_fn, "benchmark id, or 'all'")->required();
  verify->add_option("--threads", verify_o.threads)->check(CLI::PositiveNumber);
  verify->add_option("--precision", verify_o.precision)->check(CLI::IsMember({"double", "long-double"}));
  verify->add_option("--coincident", verify_o.coincident)->check(CLI::IsMember({"reposition", "skip"}));
  verify->add_option("--frep-schedule", verify_o.frep_schedule)->check(CLI::IsMember({"accumulate", "exact"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*list) return cmd_list_functions(list_format);

    if (*verify) return cmd_verify(verify_fn, verify_o);

    if (*run) {
      const cfo::BenchmarkId id = parse_function(run_o.function);
      cfo::SweepConfig config = cfo::SweepConfig::paper_grid(id);
      config.threads = run_o.threads;
      apply(run_o, run_p, config.base);
      if (!gamma_sweep) {
        config.gamma_start = config.gamma_stop = gamma.value_or(config.base.gamma);
        config.gamma_count = 1;
      }
      if (!ppa_sweep) config.ppa_min = config.ppa_max = ppa.value_or(config.base.probes_per_axis);
      if (trace && (gamma_sweep || ppa_sweep)) throw UsageError("--trace needs a single configuration");
      const cfo::SweepResult result = execute(config, run_o);
      write_outputs(result, cfo::make_manifest(config), run_o);
      if (trace) {
        if (run_o.precision == "long-double") {
          write_trace<long double>(config, run_o);
        } else {
          write_trace<double>(config, run_o);
        }
      }
      return kOk;
    }

    if (*sweep) {
      const cfo::BenchmarkId id = parse_function(sweep_o.function);
      cfo::SweepConfig config = cfo::SweepConfig::paper_grid(id);
      config.threads = sweep_o.threads;
      apply(sweep_o, sweep_p, config.base);
      if (!paper_grid) {
        if (ppa_max) config.ppa_max = *ppa_max;
        if (gamma_count) config.gamma_count = *gamma_count;
      } else if (ppa_max || gamma_count) {
        throw UsageError("--paper-grid cannot be combined with --ppa-max or --gamma-count");
      }
      const cfo::SweepResult result = execute(config, sweep_o);
      write_outputs(result, cfo::make_manifest(config), sweep_o);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cfo::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
