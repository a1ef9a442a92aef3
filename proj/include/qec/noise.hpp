#pragma once

#include <map>
#include <string>
#include <vector>

#include "qec/dense.hpp"
#include "qec/pauli.hpp"
#include "qec/rng.hpp"

namespace qec {

enum class ChannelKind {
  BitFlip,            // per qubit: X with probability epsilon
  PhaseFlip,          // per qubit: Z with probability epsilon
  Depolarizing1q,     // per qubit: X/Y/Z each with probability epsilon/3
  Depolarizing2q,     // per pair: each non-identity two-qubit Pauli eps2/15
  PhaseDamping,       // rho01 -> e^{-gamma t} rho01
  DepolarizingMarkov, // Bloch vector shrinks by e^{-gamma_tilde t}
  AmplitudeDamping,   // rho11 -> e^{-Gamma t} rho11
};

struct NoiseChannel {
  ChannelKind kind;
  double rate = 0.0;  // epsilon / eps2 for Pauli kinds, decay constant otherwise
  double t = 0.0;     // duration, time-parameterized kinds only

  static NoiseChannel bit_flip(double epsilon);
  static NoiseChannel phase_flip(double epsilon);
  static NoiseChannel depolarizing_1q(double epsilon);
  static NoiseChannel depolarizing_2q(double eps2);
  static NoiseChannel phase_damping(double gamma, double t);
  static NoiseChannel depolarizing_markov(double gamma_tilde, double t);
  static NoiseChannel amplitude_damping(double big_gamma, double t);

  bool is_pauli_kind() const;
  bool is_time_parameterized() const;
  std::string kind_name() const;

  // With a different duration; time-parameterized kinds only.
  NoiseChannel with_time(double new_t) const;

  // From flat config keys: kind, epsilon / gamma / gamma_tilde / big_gamma, t.
  static NoiseChannel from_config(const std::map<std::string, std::string>& kv);
};

struct KrausSet {
  std::vector<CMatrix> operators;

  // max |sum M^dag M - I| entrywise; the completeness defect.
  double completeness_defect() const;
  DensityMatrix apply(const DensityMatrix& rho) const;
};

struct GksMatrix {
  Eigen::Matrix3cd a;  // coefficients in the {sx, sy, sz}/sqrt(2) basis
};

// Samples an i.i.d. per-qubit error. Requires a single-qubit Pauli kind.
PauliOperator sample_pauli_error(std::size_t n, const NoiseChannel& channel,
                                 RngStream& rng);

// Probability of a given n-qubit error pattern under the i.i.d. channel.
double pauli_pattern_probability(const NoiseChannel& channel, const PauliOperator& p);

// Kraus operators whose induced map reproduces the channel action.
KrausSet kraus_set(const NoiseChannel& channel);

// Exact closed-form channel action. Validates the input density matrix.
DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseChannel& channel);

// The generator's GKS matrix; PD/DEP/AD kinds only.
GksMatrix gks_matrix(const NoiseChannel& channel);

// max elementwise deviation of E_{t1} o E_{t2} from E_{t1+t2} over a basis of
// density matrices; time-parameterized kinds only.
double semigroup_deviation(const NoiseChannel& channel, double t1, double t2);

// Single-qubit density matrices spanning the operator space; used as the
// test basis for channel identities.
const std::vector<DensityMatrix>& density_basis_1q();
std::vector<DensityMatrix> density_basis_2q();

}  // namespace qec
