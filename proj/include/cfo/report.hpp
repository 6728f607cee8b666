#pragma once

// Text, CSV and JSON renderings of runs and sweeps, and per-step series
// output for plotting. All numbers are written with '.' as the decimal
// separator regardless of the global locale.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "cfo/benchmarks.hpp"
#include "cfo/error.hpp"
#include "cfo/params.hpp"
#include "cfo/run.hpp"
#include "cfo/sweep.hpp"

namespace cfo {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kJsonSchema = "cfo-sweep/1";

struct RunManifest {
  std::string run_id;  // "MM-DD-YYYY, HH:MM:SS"
  BenchmarkId function = BenchmarkId::F1;
  SweepConfig config;
  std::string version = kVersion;
};

/// Local wall-clock time in the run table's "Run ID" style.
inline std::string make_run_id(std::chrono::system_clock::time_point t = std::chrono::system_clock::now()) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  localtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%m-%d-%Y, %H:%M:%S", &tm);
  return buf;
}

inline RunManifest make_manifest(const SweepConfig& config) {
  return RunManifest{make_run_id(), config.function, config, kVersion};
}

namespace fmt {

/// Fixed-point with `decimals` digits; negative zero prints as zero.
inline std::string fixed(double v, int decimals) {
  char buf[128];
  const auto res = std::to_chars(buf, buf + sizeof buf, v + 0.0, std::chars_format::fixed, decimals);
  if (res.ec != std::errc{}) throw ContractViolation("number too wide to format");
  return std::string(buf, res.ptr);
}

/// Shortest text that reads back to the same double.
inline std::string exact(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace fmt

// ---------------------------------------------------------------------------
// Run table

inline std::string run_table_header() {
  return "Run #   Gamma    Nt   Nd    Np     G  DelT   Alpha    Beta  #Steps     Neval       Frep"
         "          Fitness  Initial Probes";
}

/// One row: Gamma 3 decimals, G/DelT 1, Alpha/Beta 2, Frep 5 plus "V",
/// Fitness 8.
inline std::string render_run_row(const RunRecord& r) {
  std::string s;
  s += fmt::pad_left(std::to_string(r.run_number), 5);
  s += fmt::pad_left(fmt::fixed(r.gamma, 3), 8);
  s += fmt::pad_left(std::to_string(r.nt), 6);
  s += fmt::pad_left(std::to_string(r.nd), 5);
  s += fmt::pad_left(std::to_string(r.np), 6);
  s += fmt::pad_left(fmt::fixed(r.g, 1), 6);
  s += fmt::pad_left(fmt::fixed(r.delta_t, 1), 6);
  s += fmt::pad_left(fmt::fixed(r.alpha, 2), 8);
  s += fmt::pad_left(fmt::fixed(r.beta, 2), 8);
  s += fmt::pad_left(std::to_string(r.last_step), 8);
  s += fmt::pad_left(std::to_string(r.neval), 10);
  s += fmt::pad_left(fmt::fixed(r.frep_final, 5) + "V", 11);
  s += fmt::pad_left(fmt::fixed(r.best_fitness, 8), 17);
  s += "  ";
  s += r.ipd_kind;
  return s;
}

inline std::string render_run_table(const SweepResult& sweep, const RunManifest& manifest) {
  std::ostringstream os;
  os << "Run ID: " << manifest.run_id << " FUNCTION: " << to_string(sweep.function) << '\n';
  os << '\n' << run_table_header() << '\n';
  for (const RunRecord& r : sweep.records) os << render_run_row(r) << '\n';
  os << '\n' << "Total Function Evaluations: " << sweep.total_neval << '\n';
  if (!sweep.records.empty()) os << '\n' << render_run_row(sweep.rerun_record) << '\n';
  return os.str();
}

/// One-line sweep summary in the published layout.
inline std::string render_table1_row(const SweepResult& sweep) {
  const Table1Row t = table1_row(sweep);
  std::ostringstream os;
  os << to_string(sweep.function) << "  best " << fmt::fixed(t.best_fitness, 8) << "  gamma "
     << fmt::fixed(t.gamma_best, 1) << "  Np/Nd " << t.best_probes_per_axis << "  Neval best "
     << t.neval_best_run << "  total " << t.neval_total;
  return os.str();
}

// ---------------------------------------------------------------------------
// Series for plotting

enum class SeriesKind { kBestFitness, kDavg, kBestProbe };

inline std::optional<SeriesKind> parse_series_kind(std::string_view s) {
  if (s == "best-fitness") return SeriesKind::kBestFitness;
  if (s == "davg") return SeriesKind::kDavg;
  if (s == "best-probe") return SeriesKind::kBestProbe;
  return std::nullopt;
}

/// Two columns (step, value), one row per traced step.
inline void emit_series(const std::vector<StepTrace>& trace, SeriesKind kind, std::ostream& os) {
  for (const StepTrace& t : trace) {
    os << t.step << ' ';
    switch (kind) {
      case SeriesKind::kBestFitness: os << fmt::exact(t.global_best); break;
      case SeriesKind::kDavg: os << fmt::exact(t.davg); break;
      case SeriesKind::kBestProbe: os << t.best_probe; break;
    }
    os << '\n';
  }
  if (!os) throw std::runtime_error("failed writing series");
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* kCsvHeader =
    "run_number,gamma,nt,nd,np,probes_per_axis,g,delta_t,alpha,beta,last_step,neval,frep_final,"
    "best_fitness,best_probe,best_step,ipd_kind,best_position";

/// Manifest as leading '#' comment lines, then kCsvHeader and one row per
/// run. Reals use the shortest round-trip form; best_position is
/// ';'-separated.
inline void export_csv(const SweepResult& sweep, const RunManifest& m, std::ostream& os) {
  os << "# schema: " << kJsonSchema << '\n';
  os << "# run_id: " << m.run_id << '\n';
  os << "# function: " << to_string(sweep.function) << '\n';
  os << "# version: " << m.version << '\n';
  os << "# probes_per_axis: " << m.config.ppa_min << ".." << m.config.ppa_max << " step "
     << m.config.ppa_step << '\n';
  os << "# gamma: " << fmt::exact(m.config.gamma_start) << ".." << fmt::exact(m.config.gamma_stop)
     << " count " << m.config.gamma_count << '\n';
  os << "# total_neval: " << sweep.total_neval << '\n';
  os << "# best_run_number: " << sweep.best_run_number << '\n';
  os << kCsvHeader << '\n';
  for (const RunRecord& r : sweep.records) {
    os << r.run_number << ',' << fmt::exact(r.gamma) << ',' << r.nt << ',' << r.nd << ',' << r.np
       << ',' << r.probes_per_axis << ',' << fmt::exact(r.g) << ',' << fmt::exact(r.delta_t) << ','
       << fmt::exact(r.alpha) << ',' << fmt::exact(r.beta) << ',' << r.last_step << ',' << r.neval
       << ',' << fmt::exact(r.frep_final) << ',' << fmt::exact(r.best_fitness) << ','
       << r.best_probe << ',' << r.best_step << ',' << r.ipd_kind << ',';
    for (std::size_t i = 0; i < r.best_position.size(); ++i) {
      if (i) os << ';';
      os << fmt::exact(r.best_position[i]);
    }
    os << '\n';
  }
  if (!os) throw std::runtime_error("failed writing CSV");
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json params_to_json(const CfoParams& p) {
  nlohmann::ordered_json j;
  j["g"] = p.g;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["delta_t"] = p.delta_t;
  j["frep_init"] = p.frep_init;
  j["delta_frep"] = p.delta_frep;
  j["gamma"] = p.gamma;
  j["probes_per_axis"] = p.probes_per_axis;
  j["nt"] = p.nt;
  j["shrink_start"] = p.shrink_start;
  j["shrink_interval"] = p.shrink_interval;
  j["shrink"] = p.shrink;
  j["sat_window"] = p.sat_window;
  j["sat_tol"] = p.sat_tol;
  j["sat_guard"] = p.sat_guard;
  j["early_termination"] = p.early_termination;
  j["frep_schedule"] = p.frep_schedule == FrepSchedule::kAccumulate ? "accumulate" : "exact-steps";
  j["coincident"] = p.coincident == CoincidentProbes::kReposition ? "reposition" : "skip";
  j["seed"] = p.seed;
  return j;
}

inline CfoParams params_from_json(const nlohmann::ordered_json& j) {
  CfoParams p;
  p.g = j.at("g").get<double>();
  p.alpha = j.at("alpha").get<double>();
  p.beta = j.at("beta").get<double>();
  p.delta_t = j.at("delta_t").get<double>();
  p.frep_init = j.at("frep_init").get<double>();
  p.delta_frep = j.at("delta_frep").get<double>();
  p.gamma = j.at("gamma").get<double>();
  p.probes_per_axis = j.at("probes_per_axis").get<int>();
  p.nt = j.at("nt").get<int>();
  p.shrink_start = j.at("shrink_start").get<int>();
  p.shrink_interval = j.at("shrink_interval").get<int>();
  p.shrink = j.at("shrink").get<bool>();
  p.sat_window = j.at("sat_window").get<int>();
  p.sat_tol = j.at("sat_tol").get<double>();
  p.sat_guard = j.at("sat_guard").get<int>();
  p.early_termination = j.at("early_termination").get<bool>();
  p.frep_schedule = j.at("frep_schedule").get<std::string>() == "accumulate" ? FrepSchedule::kAccumulate
                                                                             : FrepSchedule::kExactSteps;
  p.coincident = j.at("coincident").get<std::string>() == "reposition" ? CoincidentProbes::kReposition
                                                                       : CoincidentProbes::kSkip;
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

inline nlohmann::ordered_json record_to_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["run_number"] = r.run_number;
  j["gamma"] = r.gamma;
  j["nt"] = r.nt;
  j["nd"] = r.nd;
  j["np"] = r.np;
  j["probes_per_axis"] = r.probes_per_axis;
  j["g"] = r.g;
  j["delta_t"] = r.delta_t;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["last_step"] = r.last_step;
  j["neval"] = r.neval;
  j["frep_final"] = r.frep_final;
  j["best_fitness"] = r.best_fitness;
  j["best_probe"] = r.best_probe;
  j["best_step"] = r.best_step;
  j["best_position"] = r.best_position;
  j["ipd_kind"] = r.ipd_kind;
  return j;
}

inline RunRecord record_from_json(const nlohmann::ordered_json& j) {
  RunRecord r;
  r.run_number = j.at("run_number").get<int>();
  r.gamma = j.at("gamma").get<double>();
  r.nt = j.at("nt").get<int>();
  r.nd = j.at("nd").get<int>();
  r.np = j.at("np").get<int>();
  r.probes_per_axis = j.at("probes_per_axis").get<int>();
  r.g = j.at("g").get<double>();
  r.delta_t = j.at("delta_t").get<double>();
  r.alpha = j.at("alpha").get<double>();
  r.beta = j.at("beta").get<double>();
  r.last_step = j.at("last_step").get<int>();
  r.neval = j.at("neval").get<std::int64_t>();
  r.frep_final = j.at("frep_final").get<double>();
  r.best_fitness = j.at("best_fitness").get<double>();
  r.best_probe = j.at("best_probe").get<int>();
  r.best_step = j.at("best_step").get<int>();
  r.best_position = j.at("best_position").get<std::vector<double>>();
  r.ipd_kind = j.at("ipd_kind").get<std::string>();
  return r;
}

inline nlohmann::ordered_json sweep_to_json(const SweepResult& sweep, const RunManifest& m) {
  nlohmann::ordered_json j;
  j["schema"] = kJsonSchema;
  nlohmann::ordered_json man;
  man["run_id"] = m.run_id;
  man["function"] = to_string(m.function);
  man["version"] = m.version;
  nlohmann::ordered_json cfg;
  cfg["ppa_min"] = m.config.ppa_min;
  cfg["ppa_max"] = m.config.ppa_max;
  cfg["ppa_step"] = m.config.ppa_step;
  cfg["gamma_start"] = m.config.gamma_start;
  cfg["gamma_stop"] = m.config.gamma_stop;
  cfg["gamma_count"] = m.config.gamma_count;
  cfg["base"] = params_to_json(m.config.base);
  man["config"] = cfg;
  j["manifest"] = man;
  j["function"] = to_string(sweep.function);
  j["valid"] = sweep.valid;
  j["total_neval"] = sweep.total_neval;
  j["best_run_number"] = sweep.best_run_number;
  auto recs = nlohmann::ordered_json::array();
  for (const RunRecord& r : sweep.records) recs.push_back(record_to_json(r));
  j["records"] = recs;
  j["best_record"] = record_to_json(sweep.best_record);
  j["rerun_record"] = record_to_json(sweep.rerun_record);
  return j;
}

struct LoadedSweep {
  RunManifest manifest;
  SweepResult sweep;
};

inline LoadedSweep sweep_from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema").get<std::string>() != kJsonSchema) {
    throw ConfigError("unsupported schema " + j.at("schema").get<std::string>());
  }
  const auto parse_id = [](const std::string& s) {
    auto id = parse_benchmark_id(s);
    if (!id) throw ConfigError("unknown function id " + s);
    return *id;
  };
  LoadedSweep out;
  const auto& man = j.at("manifest");
  out.manifest.run_id = man.at("run_id").get<std::string>();
  out.manifest.function = parse_id(man.at("function").get<std::string>());
  out.manifest.version = man.at("version").get<std::string>();
  const auto& cfg = man.at("config");
  out.manifest.config.function = out.manifest.function;
  out.manifest.config.ppa_min = cfg.at("ppa_min").get<int>();
  out.manifest.config.ppa_max = cfg.at("ppa_max").get<int>();
  out.manifest.config.ppa_step = cfg.at("ppa_step").get<int>();
  out.manifest.config.gamma_start = cfg.at("gamma_start").get<double>();
  out.manifest.config.gamma_stop = cfg.at("gamma_stop").get<double>();
  out.manifest.config.gamma_count = cfg.at("gamma_count").get<int>();
  out.manifest.config.base = params_from_json(cfg.at("base"));

  SweepResult& s = out.sweep;
  s.function = parse_id(j.at("function").get<std::string>());
  s.valid = j.at("valid").get<bool>();
  s.total_neval = j.at("total_neval").get<std::int64_t>();
  s.best_run_number = j.at("best_run_number").get<int>();
  for (const auto& r : j.at("records")) s.records.push_back(record_from_json(r));
  s.best_record = record_from_json(j.at("best_record"));
  s.rerun_record = record_from_json(j.at("rerun_record"));
  return out;
}

inline void export_json(const SweepResult& sweep, const RunManifest& m, std::ostream& os) {
  os << sweep_to_json(sweep, m).dump(2) << '\n';
  if (!os) throw std::runtime_error("failed writing JSON");
}

inline LoadedSweep import_json(std::istream& is) {
  return sweep_from_json(nlohmann::ordered_json::parse(is));
}

}  // namespace cfo
