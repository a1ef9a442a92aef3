#include "qec/config.hpp"

#include <cmath>
#include <stdexcept>

namespace qec {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::map<std::string, std::string> parse_flat_config(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                          : nl - pos);
    ++lineno;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::string stripped = trim(line);
    if (stripped.empty()) continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    std::string key = trim(std::string_view(stripped).substr(0, eq));
    std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    }
    kv[key] = value;
  }
  return kv;
}

ExperimentConfig ExperimentConfig::from_text(std::string_view text) {
  auto kv = parse_flat_config(text);
  ExperimentConfig cfg;
  auto take = [&](const char* key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw std::invalid_argument(std::string("config: missing key '") + key + "'");
    }
    return it->second;
  };
  auto take_or = [&](const char* key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };
  cfg.code = take("code");
  cfg.channel_kind = take_or("kind", "bit_flip");
  cfg.eps_start = std::stod(take("epsilon_start"));
  cfg.eps_stop = std::stod(take_or("epsilon_stop", take("epsilon_start")));
  cfg.eps_points = static_cast<unsigned>(std::stoul(take_or("epsilon_points", "1")));
  std::string scale = take_or("epsilon_scale", "linear");
  if (scale == "log") {
    cfg.log_scale = true;
  } else if (scale != "linear") {
    throw std::invalid_argument("config: epsilon_scale must be linear or log");
  }
  cfg.trials = std::stoull(take("trials"));
  if (auto it = kv.find("seed"); it != kv.end()) {
    cfg.seed = std::stoull(it->second);
    cfg.seed_set = true;
  }
  cfg.workers = static_cast<unsigned>(std::stoul(take_or("workers", "1")));
  cfg.out_path = take_or("out", "");
  cfg.format = take_or("format", "csv");
  return cfg;
}

void ExperimentConfig::validate() const {
  if (code.empty()) throw std::invalid_argument("config: code must be set");
  if (eps_points < 1) throw std::invalid_argument("config: epsilon_points must be >= 1");
  if (!(eps_start >= 0.0 && eps_start <= 1.0 && eps_stop >= 0.0 && eps_stop <= 1.0)) {
    throw std::invalid_argument("config: epsilon grid bounds must lie in [0,1]");
  }
  if (log_scale && (eps_start <= 0.0 || eps_stop <= 0.0)) {
    throw std::invalid_argument("config: log grid requires positive bounds");
  }
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
  if (format != "csv" && format != "json") {
    throw std::invalid_argument("config: format must be csv or json");
  }
  channel_at(eps_start);  // rejects unknown/non-Pauli kinds
}

std::vector<double> ExperimentConfig::epsilon_grid() const {
  std::vector<double> grid;
  grid.reserve(eps_points);
  if (eps_points == 1) {
    grid.push_back(eps_start);
    return grid;
  }
  for (unsigned i = 0; i < eps_points; ++i) {
    double f = static_cast<double>(i) / static_cast<double>(eps_points - 1);
    if (log_scale) {
      grid.push_back(eps_start * std::pow(eps_stop / eps_start, f));
    } else {
      grid.push_back(eps_start + f * (eps_stop - eps_start));
    }
  }
  return grid;
}

NoiseChannel ExperimentConfig::channel_at(double epsilon) const {
  if (channel_kind == "bit_flip") return NoiseChannel::bit_flip(epsilon);
  if (channel_kind == "phase_flip") return NoiseChannel::phase_flip(epsilon);
  if (channel_kind == "depolarizing_1q") return NoiseChannel::depolarizing_1q(epsilon);
  throw std::invalid_argument("config: sweep channel must be bit_flip, phase_flip or "
                              "depolarizing_1q");
}

}  // namespace qec
