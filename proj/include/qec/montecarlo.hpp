#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qec/noise.hpp"
#include "qec/stabilizer_code.hpp"

namespace qec {

// Syndrome -> minimum-weight correction, ties broken lexicographically on
// canonical text. Indexed by Syndrome::to_index().
struct Decoder {
  std::vector<PauliOperator> table;
  std::vector<bool> reachable;  // false marks a flagged best-effort entry
};

// Requires n-k <= 24 so the table fits in memory.
Decoder build_decoder(const StabilizerCode& code);

struct TrialResult {
  PauliOperator sampled_error;
  Syndrome syn;
  PauliOperator correction;
  bool logical_failure = false;
};

// Ideal-syndrome decode of a fixed error; logical failure means the residual
// error * correction anticommutes with some logical operator.
TrialResult classify_error(const StabilizerCode& code, const Decoder& decoder,
                           const PauliOperator& error);

// Samples an error, decodes, classifies. A nonzero syndrome_flip_q feeds the
// measured syndrome through the repeat-twice acceptance rule with that
// per-bit flip probability before decoding.
TrialResult run_trial(const StabilizerCode& code, const Decoder& decoder,
                      const NoiseChannel& channel, RngStream& rng,
                      double syndrome_flip_q = 0.0);

struct SweepPoint {
  double epsilon = 0.0;
  uint64_t trials = 0;
  uint64_t failures = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  uint64_t seed = 0;
};

struct SweepResult {
  std::string code_name;
  std::string channel_kind;
  uint64_t master_seed = 0;
  uint64_t trials_per_point = 0;
  unsigned workers = 1;
  std::vector<SweepPoint> points;

  // Header: epsilon,trials,failures,estimate,stderr,seed (plus the
  // pseudo_threshold marker column appended by the sweep command).
  std::string to_csv(bool with_pseudo_threshold_column = false) const;
};

// Monte Carlo estimate with standard error sqrt(p(1-p)/trials). Trial j uses
// the stream derived from (master_seed, j), so the result is bit-identical
// for any worker count.
SweepPoint logical_error_rate(const StabilizerCode& code, const NoiseChannel& channel,
                              uint64_t trials, uint64_t master_seed, unsigned workers = 1,
                              double syndrome_flip_q = 0.0);

// Exact failure probability by full 4^n enumeration (n <= 9).
double exact_logical_rate(const StabilizerCode& code, const NoiseChannel& channel);

// The repetition-code level map 3p^2(1-p)+p^3.
double repetition_level_map(double p);

// Iterates the level map k times; sequence[i] = p_i, sequence.size() = k+1.
std::vector<double> concat_recursion(const std::function<double(double)>& level_map,
                                     double p0, unsigned levels);

struct GenericRecursionResult {
  std::vector<double> sequence;     // iterates of f(p) = c p^2
  std::vector<double> closed_form;  // (c p0)^{2^j} / c
  double max_deviation = 0.0;
};

// For the quadratic map the closed form must agree with iteration to 1e-12.
GenericRecursionResult concat_recursion_quadratic(double p0, unsigned levels, double c);

// Samples i.i.d. bit flips on 3^k bits and decodes by recursive majority
// voting; k <= 4.
SweepPoint simulate_concatenated_repetition(unsigned levels, double eps, uint64_t trials,
                                            uint64_t master_seed, unsigned workers = 1);

// N * G^k.
double overhead_total_gates(double original_gates, double gates_per_level, unsigned k);

// Minimal k with epsilon_th * (eps/epsilon_th)^(2^k) <= p / N, i.e.
// 2^k >= log(N epsilon_th / p) / log(epsilon_th / eps). Empty when
// eps >= epsilon_th (no finite k).
std::optional<unsigned> minimal_concat_level(double eps, double eps_th, double p,
                                             double original_gates);

enum class ThresholdStatus { Found, Degenerate, NoSignChange };

struct ThresholdScanResult {
  ThresholdStatus status = ThresholdStatus::NoSignChange;
  double p_star = 0.0;
};

// Locates the nontrivial fixed point f(p) = p by grid scan plus bisection to
// 1e-10. An identically-zero f(p)-p on the grid reports Degenerate.
ThresholdScanResult threshold_scan(const std::function<double(double)>& level_map,
                                   const std::vector<double>& grid);

}  // namespace qec
