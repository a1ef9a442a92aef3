#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qec/config.hpp"
#include "qec/css.hpp"
#include "qec/gadgets.hpp"
#include "qec/montecarlo.hpp"
#include "qec/oracle_report.hpp"
#include "qec/rng.hpp"
#include "qec/stabilizer_code.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

qec::StabilizerCode load_code(const std::string& name_or_path) {
  const auto& names = qec::builtin_code_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return qec::builtin_code(name_or_path);
  }
  return qec::StabilizerCode::deserialize(read_file(name_or_path));
}

int cmd_codes_list() {
  for (const auto& name : qec::builtin_code_names()) {
    qec::StabilizerCode code = qec::builtin_code(name);
    std::printf("%-11s n=%zu k=%zu d=%zu generators=%zu\n", name.c_str(), code.n, code.k,
                qec::builtin_distance(name), code.generators.size());
  }
  return kExitOk;
}

int cmd_codes_check(const std::string& name_or_path) {
  qec::StabilizerCode code = load_code(name_or_path);
  qec::ValidationReport report = qec::validate_code(code);
  bool clean = report.valid();
  if (!clean) {
    std::printf("invalid: %s\n", code.name.c_str());
    for (const auto& v : report.violations) std::printf("  %s\n", v.c_str());
  } else {
    auto errors = qec::paulis_up_to_weight(code.n, 1, true);
    qec::QeccCheckResult check = qec::stabilizer_qecc_check(code, errors);
    auto d = qec::distance(code, std::min<std::size_t>(code.n, 4));
    std::string dtext = d ? "d=" + std::to_string(*d) : "d>4";
    std::printf("%s: %zu generators, %s\n", code.name.c_str(), code.generators.size(),
                dtext.c_str());
    if (!check.passes()) {
      clean = false;
      std::printf("weight-1 error set violates the QECC conditions (%zu pairs)\n",
                  check.violations.size());
    } else {
      std::printf("weight-1 error set satisfies the QECC conditions\n");
    }
  }
  return clean ? kExitOk : kExitValidation;
}

int cmd_syndrome(const std::string& code_name, const std::string& pauli_text) {
  qec::StabilizerCode code = load_code(code_name);
  qec::PauliOperator error = qec::PauliOperator::parse(pauli_text);
  qec::Syndrome s = qec::syndrome(code, error);
  std::printf("%s\n", s.str().c_str());
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, std::optional<uint64_t> seed_flag,
              std::optional<unsigned> workers_flag, const std::string& out_flag,
              const std::string& format_flag) {
  qec::ExperimentConfig cfg = qec::ExperimentConfig::from_text(read_file(config_path));
  if (seed_flag) {
    cfg.seed = *seed_flag;
    cfg.seed_set = true;
  }
  if (workers_flag) cfg.workers = *workers_flag;
  if (!out_flag.empty()) cfg.out_path = out_flag;
  if (!format_flag.empty()) cfg.format = format_flag;
  cfg.validate();
  if (!cfg.seed_set) {
    throw std::invalid_argument("sweep requires an explicit seed (--seed or seed= in config)");
  }

  qec::StabilizerCode code = load_code(cfg.code);
  qec::SweepResult result;
  result.code_name = code.name;
  result.channel_kind = cfg.channel_kind;
  result.master_seed = cfg.seed;
  result.trials_per_point = cfg.trials;
  result.workers = cfg.workers;

  std::vector<double> grid = cfg.epsilon_grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    uint64_t point_seed = qec::derive_seed(cfg.seed, i);
    result.points.push_back(qec::logical_error_rate(code, cfg.channel_at(grid[i]),
                                                    cfg.trials, point_seed, cfg.workers));
  }

  nlohmann::json j;
  j["config"] = {{"code", cfg.code},
                 {"channel", cfg.channel_kind},
                 {"epsilon_start", cfg.eps_start},
                 {"epsilon_stop", cfg.eps_stop},
                 {"epsilon_points", cfg.eps_points},
                 {"epsilon_scale", cfg.log_scale ? "log" : "linear"},
                 {"trials", cfg.trials},
                 {"seed", cfg.seed},
                 {"workers", cfg.workers},
                 {"format", cfg.format}};
  j["points"] = nlohmann::json::array();
  for (const auto& pt : result.points) {
    j["points"].push_back({{"epsilon", pt.epsilon},
                           {"trials", pt.trials},
                           {"failures", pt.failures},
                           {"estimate", pt.estimate},
                           {"stderr", pt.std_error},
                           {"seed", pt.seed},
                           {"pseudo_threshold", pt.estimate < pt.epsilon}});
  }

  if (cfg.format == "csv") {
    write_output(cfg.out_path, result.to_csv(true));
    if (!cfg.out_path.empty()) {
      // JSON mirror with the full config echo.
      write_output(cfg.out_path + ".json", j.dump(2) + "\n");
    }
  } else {
    write_output(cfg.out_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_threshold(const std::string& map_name, double c, const std::string& out_path) {
  std::function<double(double)> f;
  if (map_name == "repetition") {
    f = qec::repetition_level_map;
  } else if (map_name == "quadratic") {
    if (c <= 0.0) throw std::invalid_argument("threshold: quadratic map requires --c > 0");
    f = [c](double p) { return c * p * p; };
  } else {
    throw std::invalid_argument("threshold: map must be repetition or quadratic");
  }
  std::vector<double> grid;
  for (int i = 0; i <= 1000; ++i) grid.push_back(1e-6 + (0.999 - 1e-6) * i / 1000.0);
  qec::ThresholdScanResult r = qec::threshold_scan(f, grid);

  nlohmann::json j;
  j["map"] = map_name;
  if (map_name == "quadratic") j["c"] = c;
  switch (r.status) {
    case qec::ThresholdStatus::Found:
      j["status"] = "found";
      j["p_star"] = r.p_star;
      break;
    case qec::ThresholdStatus::Degenerate:
      j["status"] = "degenerate";
      break;
    case qec::ThresholdStatus::NoSignChange:
      j["status"] = "no_sign_change";
      break;
  }
  write_output(out_path, j.dump(2) + "\n");
  return r.status == qec::ThresholdStatus::Found ? kExitOk : kExitValidation;
}

int cmd_gadget_audit(const std::string& code_name, std::size_t generator_index,
                     const std::string& style, const std::string& out_path,
                     const std::string& format) {
  qec::StabilizerCode code = load_code(code_name);
  qec::CliffordGadget gadget = style == "cat"
                                   ? qec::cat_syndrome_gadget(code, generator_index)
                                   : qec::bare_syndrome_gadget(code, generator_index);
  qec::validate_gadget(gadget);
  qec::AuditReport report = qec::ft_audit(gadget, code);

  nlohmann::json j;
  j["gadget"] = gadget.description;
  j["style"] = style;
  j["fault_count"] = report.fault_count;
  j["rejected_count"] = report.rejected_count;
  j["max_reduced_weight"] = report.max_reduced_weight;
  j["verdict"] = report.ft_for_t1 ? "FT" : "NOT-FT";
  j["locations"] = nlohmann::json::array();
  for (const auto& e : report.worst_per_location) {
    j["locations"].push_back({{"location", e.location},
                              {"step", e.step},
                              {"fault", e.fault},
                              {"raw_weight", e.raw_weight},
                              {"reduced_weight", e.reduced_weight},
                              {"syndrome_bit_flipped", e.syndrome_bit_flipped}});
  }

  if (format == "json") {
    write_output(out_path, j.dump(2) + "\n");
  } else {
    std::string table;
    table += "gadget: " + gadget.description + "\n";
    table += "faults enumerated: " + std::to_string(report.fault_count) +
             ", rejected: " + std::to_string(report.rejected_count) + "\n";
    char line[160];
    std::snprintf(line, sizeof(line), "%-9s %-16s %-12s %-6s %-7s\n", "location", "step",
                  "worst fault", "raw", "reduced");
    table += line;
    for (const auto& e : report.worst_per_location) {
      std::snprintf(line, sizeof(line), "%-9d %-16s %-12s %-6zu %-7zu\n", e.location,
                    e.step.c_str(), e.fault.c_str(), e.raw_weight, e.reduced_weight);
      table += line;
    }
    table += "max reduced residual weight over accepted runs: " +
             std::to_string(report.max_reduced_weight) + "\n";
    table += std::string("verdict: ") + (report.ft_for_t1 ? "FT" : "NOT-FT") + "\n";
    write_output(out_path, table);
  }
  return kExitOk;
}

int cmd_oracle_verify(const std::optional<std::string>& checks_csv,
                      const std::string& out_path, uint64_t seed) {
  std::optional<std::vector<std::string>> selection;
  if (checks_csv) {
    selection.emplace();
    std::stringstream ss(*checks_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) selection->push_back(item);
    }
  }
  qec::OracleReport report = qec::run_oracle_suite(selection, seed);
  write_output(out_path, report.to_json() + "\n");
  return report.all_pass() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum error-correction workbench"};
  app.require_subcommand(1);

  std::optional<uint64_t> seed_flag;
  std::optional<unsigned> workers_flag;
  std::string out_path;
  std::string format = "";

  // codes list|check
  CLI::App* codes = app.add_subcommand("codes", "list or validate codes");
  codes->require_subcommand(1);
  CLI::App* codes_list = codes->add_subcommand("list", "list built-in codes");
  CLI::App* codes_check = codes->add_subcommand("check", "validate a code");
  std::string check_target;
  codes_check->add_option("code", check_target, "built-in name or code file")->required();

  // syndrome <code> <pauli>
  CLI::App* syn = app.add_subcommand("syndrome", "syndrome of an error");
  std::string syn_code, syn_pauli;
  syn->add_option("code", syn_code, "built-in name or code file")->required();
  syn->add_option("pauli", syn_pauli, "error in Pauli text form")->required();

  // sweep <config>
  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep from a config file");
  std::string sweep_config;
  sweep->add_option("config", sweep_config, "flat key=value config file")->required();
  sweep->add_option("--seed", [&seed_flag](const std::vector<std::string>& v) {
    seed_flag = std::stoull(v[0]);
    return true;
  }, "master seed (overrides config)");
  sweep->add_option("--workers", [&workers_flag](const std::vector<std::string>& v) {
    workers_flag = static_cast<unsigned>(std::stoul(v[0]));
    return true;
  }, "worker thread count");
  sweep->add_option("--out", out_path, "output path (default stdout)");
  sweep->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json", ""}));

  // threshold
  CLI::App* threshold = app.add_subcommand("threshold", "fixed point of a level map");
  std::string map_name = "repetition";
  double map_c = 0.0;
  threshold->add_option("--map", map_name, "repetition|quadratic");
  threshold->add_option("--c", map_c, "constant for the quadratic map c*p^2");
  threshold->add_option("--out", out_path, "output path (default stdout)");

  // gadget audit
  CLI::App* gadget = app.add_subcommand("gadget", "fault-tolerance gadgets");
  gadget->require_subcommand(1);
  CLI::App* audit = gadget->add_subcommand("audit", "exhaustive single-fault audit");
  std::string audit_code, audit_style;
  std::size_t audit_gen = 0;
  audit->add_option("code", audit_code, "built-in name or code file")->required();
  audit->add_option("generator", audit_gen, "generator index")->required();
  audit->add_option("style", audit_style, "bare|cat")
      ->required()
      ->check(CLI::IsMember({"bare", "cat"}));
  audit->add_option("--out", out_path, "output path (default stdout)");
  audit->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json", ""}));

  // oracle verify
  CLI::App* oracle = app.add_subcommand("oracle", "dense verification suite");
  oracle->require_subcommand(1);
  CLI::App* verify = oracle->add_subcommand("verify", "run all oracle checks");
  std::optional<std::string> checks_csv;
  verify->add_option("--checks", [&checks_csv](const std::vector<std::string>& v) {
    checks_csv = v.empty() ? std::string() : v[0];
    return true;
  }, "comma-separated check names (empty = no-op)")->expected(0, 1);
  uint64_t oracle_seed = 0x5eedULL;
  verify->add_option("--seed", oracle_seed, "seed for randomized spot checks");
  verify->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (codes_list->parsed()) return cmd_codes_list();
    if (codes_check->parsed()) return cmd_codes_check(check_target);
    if (syn->parsed()) return cmd_syndrome(syn_code, syn_pauli);
    if (sweep->parsed()) {
      return cmd_sweep(sweep_config, seed_flag, workers_flag, out_path, format);
    }
    if (threshold->parsed()) return cmd_threshold(map_name, map_c, out_path);
    if (audit->parsed()) {
      return cmd_gadget_audit(audit_code, audit_gen, audit_style, out_path,
                              format.empty() ? "table" : format);
    }
    if (verify->parsed()) return cmd_oracle_verify(checks_csv, out_path, oracle_seed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
  return kExitUsage;
}
