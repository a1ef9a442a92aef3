#include "qec/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "qec/gadgets.hpp"

namespace qec {

Decoder build_decoder(const StabilizerCode& code) {
  std::size_t syndrome_bits = code.generators.size();
  if (syndrome_bits > 24) {
    throw std::invalid_argument("build_decoder: syndrome table would exceed 2^24 entries");
  }
  std::size_t table_size = std::size_t{1} << syndrome_bits;
  Decoder d;
  d.table.assign(table_size, PauliOperator::identity(code.n));
  d.reachable.assign(table_size, false);

  std::size_t filled = 0;
  // Per weight level: collect the lexicographically-smallest candidate per
  // still-open syndrome, then commit the level.
  std::vector<std::optional<std::pair<std::string, PauliOperator>>> pending(table_size);
  for (std::size_t w = 0; w <= code.n && filled < table_size; ++w) {
    for (auto& p : pending) p.reset();
    for_each_pauli_of_weight(code.n, w, [&](const PauliOperator& p) {
      uint64_t idx = syndrome(code, p).to_index();
      if (d.reachable[idx]) return true;
      std::string text = p.str();
      if (!pending[idx] || text < pending[idx]->first) {
        pending[idx] = std::make_pair(std::move(text), p);
      }
      return true;
    });
    for (std::size_t idx = 0; idx < table_size; ++idx) {
      if (pending[idx]) {
        d.table[idx] = pending[idx]->second;
        d.reachable[idx] = true;
        ++filled;
      }
    }
  }
  return d;
}

TrialResult classify_error(const StabilizerCode& code, const Decoder& decoder,
                           const PauliOperator& error) {
  TrialResult r;
  r.sampled_error = error;
  r.syn = syndrome(code, error);
  r.correction = decoder.table[r.syn.to_index()];
  PauliOperator residual = error * r.correction;
  for (const auto& g : code.generators) {
    if (!commutes(g, residual)) {
      throw std::logic_error("classify_error: residual leaves the normalizer");
    }
  }
  r.logical_failure = false;
  for (const auto& l : code.logical_x) {
    if (!commutes(l, residual)) r.logical_failure = true;
  }
  for (const auto& l : code.logical_z) {
    if (!commutes(l, residual)) r.logical_failure = true;
  }
  return r;
}

TrialResult run_trial(const StabilizerCode& code, const Decoder& decoder,
                      const NoiseChannel& channel, RngStream& rng,
                      double syndrome_flip_q) {
  PauliOperator error = sample_pauli_error(code.n, channel, rng);
  if (syndrome_flip_q <= 0.0) {
    return classify_error(code, decoder, error);
  }
  // Measured syndrome runs through the repeat-twice acceptance rule.
  TrialResult r;
  r.sampled_error = error;
  Syndrome truth = syndrome(code, error);
  auto sampler = [&truth]() { return truth; };
  r.syn = repeat_twice(sampler, syndrome_flip_q, rng).syndrome;
  r.correction = decoder.table[r.syn.to_index()];
  PauliOperator residual = error * r.correction;
  r.logical_failure = false;
  for (const auto& g : code.generators) {
    if (!commutes(g, residual)) r.logical_failure = true;  // wrong syndrome branch
  }
  for (const auto& l : code.logical_x) {
    if (!commutes(l, residual)) r.logical_failure = true;
  }
  for (const auto& l : code.logical_z) {
    if (!commutes(l, residual)) r.logical_failure = true;
  }
  return r;
}

namespace {

// Splits [0, trials) into per-worker ranges and sums a per-trial predicate.
// Trial j always uses RngStream(master_seed, j), so the partition does not
// affect the result.
uint64_t count_failures(uint64_t trials, uint64_t master_seed, unsigned workers,
                        const std::function<bool(RngStream&)>& trial_fails) {
  if (workers == 0) workers = 1;
  if (workers == 1 || trials < 2 * workers) {
    uint64_t failures = 0;
    for (uint64_t j = 0; j < trials; ++j) {
      RngStream stream(master_seed, j);
      if (trial_fails(stream)) ++failures;
    }
    return failures;
  }
  std::vector<uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  uint64_t chunk = trials / workers;
  for (unsigned w = 0; w < workers; ++w) {
    uint64_t begin = w * chunk;
    uint64_t end = (w + 1 == workers) ? trials : begin + chunk;
    pool.emplace_back([&, w, begin, end]() {
      uint64_t local = 0;
      for (uint64_t j = begin; j < end; ++j) {
        RngStream stream(master_seed, j);
        if (trial_fails(stream)) ++local;
      }
      partial[w] = local;
    });
  }
  for (auto& t : pool) t.join();
  uint64_t failures = 0;
  for (uint64_t p : partial) failures += p;
  return failures;
}

SweepPoint make_point(double epsilon, uint64_t trials, uint64_t failures, uint64_t seed) {
  SweepPoint pt;
  pt.epsilon = epsilon;
  pt.trials = trials;
  pt.failures = failures;
  pt.estimate = trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
  pt.std_error =
      trials ? std::sqrt(pt.estimate * (1.0 - pt.estimate) / static_cast<double>(trials))
             : 0.0;
  pt.seed = seed;
  return pt;
}

}  // namespace

SweepPoint logical_error_rate(const StabilizerCode& code, const NoiseChannel& channel,
                              uint64_t trials, uint64_t master_seed, unsigned workers,
                              double syndrome_flip_q) {
  if (trials == 0) throw std::invalid_argument("logical_error_rate: trials must be >= 1");
  Decoder decoder = build_decoder(code);
  uint64_t failures =
      count_failures(trials, master_seed, workers, [&](RngStream& stream) {
        return run_trial(code, decoder, channel, stream, syndrome_flip_q).logical_failure;
      });
  return make_point(channel.rate, trials, failures, master_seed);
}

double exact_logical_rate(const StabilizerCode& code, const NoiseChannel& channel) {
  if (!channel.is_pauli_kind() || channel.kind == ChannelKind::Depolarizing2q) {
    throw std::invalid_argument("exact_logical_rate: single-qubit Pauli channels only");
  }
  if (code.n > 9) {
    throw std::invalid_argument("exact_logical_rate: 4^n enumeration limited to n <= 9");
  }
  Decoder decoder = build_decoder(code);

  double failure_prob = 0.0;
  std::vector<int> digits(code.n, 0);  // 0=I 1=X 2=Y 3=Z per qubit
  while (true) {
    BitVec x(code.n), z(code.n);
    int phase = 0;
    for (std::size_t q = 0; q < code.n; ++q) {
      switch (digits[q]) {
        case 1:
          x.set(q, true);
          break;
        case 2:
          x.set(q, true);
          z.set(q, true);
          phase += 1;
          break;
        case 3:
          z.set(q, true);
          break;
        default:
          break;
      }
    }
    PauliOperator pattern(std::move(x), std::move(z), phase);
    double prob = pauli_pattern_probability(channel, pattern);
    if (prob > 0.0 && classify_error(code, decoder, pattern).logical_failure) {
      failure_prob += prob;
    }
    std::size_t q = 0;
    while (q < code.n && digits[q] == 3) digits[q++] = 0;
    if (q == code.n) break;
    ++digits[q];
  }
  return failure_prob;
}

double repetition_level_map(double p) { return 3.0 * p * p * (1.0 - p) + p * p * p; }

std::vector<double> concat_recursion(const std::function<double(double)>& level_map,
                                     double p0, unsigned levels) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw std::invalid_argument("concat_recursion: p0 must lie in [0,1]");
  }
  std::vector<double> seq;
  seq.reserve(levels + 1);
  seq.push_back(p0);
  double p = p0;
  for (unsigned j = 0; j < levels; ++j) {
    p = level_map(p);
    seq.push_back(p);
  }
  return seq;
}

GenericRecursionResult concat_recursion_quadratic(double p0, unsigned levels, double c) {
  if (c <= 0.0) throw std::invalid_argument("concat_recursion_quadratic: c must be > 0");
  GenericRecursionResult r;
  r.sequence = concat_recursion([c](double p) { return c * p * p; }, p0, levels);
  r.closed_form.reserve(levels + 1);
  for (unsigned j = 0; j <= levels; ++j) {
    r.closed_form.push_back(std::pow(c * p0, std::exp2(static_cast<double>(j))) / c);
    r.max_deviation = std::max(r.max_deviation,
                               std::abs(r.sequence[j] - r.closed_form[j]));
  }
  return r;
}

SweepPoint simulate_concatenated_repetition(unsigned levels, double eps, uint64_t trials,
                                            uint64_t master_seed, unsigned workers) {
  if (levels > 4) {
    throw std::invalid_argument("simulate_concatenated_repetition: levels capped at 4");
  }
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("simulate_concatenated_repetition: eps must lie in [0,1]");
  }
  std::size_t bits = 1;
  for (unsigned l = 0; l < levels; ++l) bits *= 3;

  uint64_t failures =
      count_failures(trials, master_seed, workers, [&](RngStream& stream) {
        // Sample the physical layer, then majority-vote level by level.
        std::vector<int> layer(bits);
        for (std::size_t b = 0; b < bits; ++b) layer[b] = stream.next_double() < eps;
        std::size_t width = bits;
        while (width > 1) {
          std::size_t next = width / 3;
          for (std::size_t i = 0; i < next; ++i) {
            layer[i] = (layer[3 * i] + layer[3 * i + 1] + layer[3 * i + 2]) >= 2;
          }
          width = next;
        }
        return layer[0] != 0;
      });
  return make_point(eps, trials, failures, master_seed);
}

double overhead_total_gates(double original_gates, double gates_per_level, unsigned k) {
  if (original_gates <= 0.0 || gates_per_level <= 0.0) {
    throw std::invalid_argument("overhead: gate counts must be positive");
  }
  return original_gates * std::pow(gates_per_level, static_cast<double>(k));
}

std::optional<unsigned> minimal_concat_level(double eps, double eps_th, double p,
                                             double original_gates) {
  if (eps <= 0.0 || eps_th <= 0.0 || p <= 0.0 || original_gates <= 0.0) {
    throw std::invalid_argument("minimal_concat_level: inputs must be positive");
  }
  if (eps >= eps_th) return std::nullopt;  // log ratio nonpositive: no finite k
  double ratio = std::log(original_gates * eps_th / p) / std::log(eps_th / eps);
  for (unsigned k = 0; k <= 63; ++k) {
    if (std::exp2(static_cast<double>(k)) >= ratio) return k;
  }
  return std::nullopt;
}

ThresholdScanResult threshold_scan(const std::function<double(double)>& level_map,
                                   const std::vector<double>& grid) {
  if (grid.size() < 2) throw std::invalid_argument("threshold_scan: grid too small");
  auto g = [&](double p) { return level_map(p) - p; };

  bool all_zero = true;
  for (double p : grid) {
    if (std::abs(g(p)) > 1e-14) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return {ThresholdStatus::Degenerate, 0.0};

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double lo = grid[i], hi = grid[i + 1];
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0 && std::abs(ghi) > 0.0) {
      // Grid point is itself the fixed point only if isolated.
      return {ThresholdStatus::Found, lo};
    }
    if (glo * ghi >= 0.0) continue;
    while (hi - lo > 1e-10) {
      double mid = 0.5 * (lo + hi);
      double gmid = g(mid);
      if (gmid == 0.0) return {ThresholdStatus::Found, mid};
      if ((gmid < 0.0) == (glo < 0.0)) {
        lo = mid;
        glo = gmid;
      } else {
        hi = mid;
      }
    }
    return {ThresholdStatus::Found, 0.5 * (lo + hi)};
  }
  return {ThresholdStatus::NoSignChange, 0.0};
}

std::string SweepResult::to_csv(bool with_pseudo_threshold_column) const {
  std::string out = "epsilon,trials,failures,estimate,stderr,seed";
  if (with_pseudo_threshold_column) out += ",pseudo_threshold";
  out += "\n";
  char buf[160];
  for (const auto& pt : points) {
    std::snprintf(buf, sizeof(buf), "%.10g,%llu,%llu,%.10g,%.10g,%llu", pt.epsilon,
                  static_cast<unsigned long long>(pt.trials),
                  static_cast<unsigned long long>(pt.failures), pt.estimate, pt.std_error,
                  static_cast<unsigned long long>(pt.seed));
    out += buf;
    if (with_pseudo_threshold_column) {
      out += pt.estimate < pt.epsilon ? ",1" : ",0";
    }
    out += "\n";
  }
  return out;
}

}  // namespace qec
