#include "qec/oracle_report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "qec/dense.hpp"
#include "qec/noise.hpp"
#include "qec/rng.hpp"
#include "qec/transversal.hpp"

namespace qec {

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const OracleCheck& c) { return c.pass; });
}

std::string OracleReport::to_json() const {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  j["all_pass"] = all_pass();
  return j.dump(2);
}

double codeword_stabilizer_residual(const StabilizerCode& code,
                                    const std::string& encode_name) {
  StateVector words[2] = {encode_codeword(encode_name, 1.0, 0.0),
                          encode_codeword(encode_name, 0.0, 1.0)};
  double worst = 0.0;
  for (const auto& g : code.generators) {
    for (const auto& w : words) {
      worst = std::max(worst, (apply_pauli(w, g) - w).norm());
    }
  }
  return worst;
}

namespace {

DensityMatrix random_density_1q(RngStream& rng) {
  CMatrix a(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      a(r, c) = Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
    }
  }
  CMatrix rho = a * a.adjoint();
  rho /= rho.trace();
  return DensityMatrix{1, rho};
}

class SuiteBuilder {
 public:
  SuiteBuilder(const std::optional<std::vector<std::string>>& selection, uint64_t seed)
      : selection_(selection), seed_(seed) {}

  bool wanted(const std::string& name) const {
    if (!selection_) return true;
    return std::find(selection_->begin(), selection_->end(), name) != selection_->end();
  }

  void add(const std::string& name, double residual, double tolerance) {
    if (!wanted(name)) return;
    report_.checks.push_back({name, residual, tolerance, residual < tolerance});
  }

  OracleReport take() { return std::move(report_); }
  uint64_t seed() const { return seed_; }

 private:
  const std::optional<std::vector<std::string>>& selection_;
  uint64_t seed_;
  OracleReport report_;
};

double pauli_bridge_residual(uint64_t seed) {
  double worst = 0.0;
  // Exhaustive on 1 and 2 qubits, all phases.
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<PauliOperator> all;
    std::vector<int> digits(n, 0);
    while (true) {
      std::string label;
      for (std::size_t q = 0; q < n; ++q) label.push_back(letters[digits[q]]);
      PauliOperator op = PauliOperator::parse(label);
      for (int phase = 0; phase < 4; ++phase) {
        all.push_back(PauliOperator(op.x_bits(), op.z_bits(), op.phase_exp() + phase));
      }
      std::size_t q = 0;
      while (q < n && digits[q] == 3) digits[q++] = 0;
      if (q == n) break;
      ++digits[q];
    }
    for (const auto& a : all) {
      for (const auto& b : all) {
        CMatrix lhs = pauli_to_dense(a * b);
        CMatrix rhs = pauli_to_dense(a) * pauli_to_dense(b);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  }
  // Random spot checks on 4 qubits.
  RngStream rng(seed, 1);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = 4;
    BitVec xa(n), za(n), xb(n), zb(n);
    for (std::size_t q = 0; q < n; ++q) {
      xa.set(q, rng.next_below(2));
      za.set(q, rng.next_below(2));
      xb.set(q, rng.next_below(2));
      zb.set(q, rng.next_below(2));
    }
    PauliOperator a(xa, za, static_cast<int>(rng.next_below(4)));
    PauliOperator b(xb, zb, static_cast<int>(rng.next_below(4)));
    CMatrix lhs = pauli_to_dense(a * b);
    CMatrix rhs = pauli_to_dense(a) * pauli_to_dense(b);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

double qecc_condition_residual(const std::string& code_name) {
  StabilizerCode code = builtin_code(code_name);
  std::vector<StateVector> words = {encode_codeword(code_name, 1.0, 0.0),
                                    encode_codeword(code_name, 0.0, 1.0)};
  std::vector<PauliOperator> errors = paulis_up_to_weight(code.n, 1, true);
  return qecc_condition_matrix(words, errors).max_violation;
}

double hadamard_duality_residual() {
  StateVector zero = encode_codeword("steane7", 1.0, 0.0);
  StateVector one = encode_codeword("steane7", 0.0, 1.0);
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  StateVector plus = Complex(inv_sqrt2) * (zero + one);
  StateVector minus = Complex(inv_sqrt2) * (zero - one);
  return std::max((hadamard_all(zero) - plus).norm(), (hadamard_all(one) - minus).norm());
}

double orthonormality_residual() {
  double worst = 0.0;
  for (const char* name : {"bitflip3", "steane7", "shor9"}) {
    StateVector zero = encode_codeword(name, 1.0, 0.0);
    StateVector one = encode_codeword(name, 0.0, 1.0);
    worst = std::max(worst, std::abs(zero.inner(one)));
    worst = std::max(worst, std::abs(zero.norm() - 1.0));
    worst = std::max(worst, std::abs(one.norm() - 1.0));
  }
  return worst;
}

double stabilizer_fixing_residual() {
  double worst = 0.0;
  for (const char* name : {"bitflip3", "steane7", "shor9"}) {
    worst = std::max(worst, codeword_stabilizer_residual(builtin_code(name), name));
  }
  return worst;
}

double dfs_singlet_residual() {
  auto results = dfs_check({singlet_state()});
  double worst = 0.0;
  for (const auto& r : results) {
    worst = std::max({worst, r.max_residual, std::abs(r.c_alpha)});
  }
  return worst;
}

double dfs_four_qubit_residual() {
  auto results = dfs_check({dfs4_codeword(0), dfs4_codeword(1)});
  double worst = 0.0;
  for (const auto& r : results) {
    worst = std::max({worst, r.max_residual, std::abs(r.c_alpha), r.c_inconsistency});
  }
  return worst;
}

double subsystem_leakage_residual() {
  double worst = 0.0;
  for (int logical : {0, 1}) {
    for (const auto& r : subsystem_invariance(subsystem3_basis(logical))) {
      worst = std::max(worst, r.leakage);
    }
  }
  return worst;
}

std::vector<NoiseChannel> sample_channels() {
  return {NoiseChannel::bit_flip(0.13),
          NoiseChannel::phase_flip(0.07),
          NoiseChannel::depolarizing_1q(0.2),
          NoiseChannel::depolarizing_2q(0.11),
          NoiseChannel::phase_damping(0.4, 1.3),
          NoiseChannel::depolarizing_markov(0.9, 0.7),
          NoiseChannel::amplitude_damping(0.6, 1.1)};
}

double kraus_completeness_residual() {
  double worst = 0.0;
  for (const auto& ch : sample_channels()) {
    worst = std::max(worst, kraus_set(ch).completeness_defect());
  }
  return worst;
}

double kraus_action_residual() {
  double worst = 0.0;
  for (const auto& ch : sample_channels()) {
    KrausSet ks = kraus_set(ch);
    const auto basis = ch.kind == ChannelKind::Depolarizing2q ? density_basis_2q()
                                                              : density_basis_1q();
    for (const auto& rho : basis) {
      DensityMatrix via_kraus = ks.apply(rho);
      DensityMatrix closed = apply_channel(rho, ch);
      worst = std::max(worst, (via_kraus.mat - closed.mat).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double semigroup_residual(uint64_t seed) {
  // 100 random (rho, t1, t2) per time-parameterized kind.
  double worst = 0.0;
  RngStream rng(seed, 2);
  std::vector<NoiseChannel> kinds = {NoiseChannel::phase_damping(0.5, 0.0),
                                     NoiseChannel::depolarizing_markov(0.8, 0.0),
                                     NoiseChannel::amplitude_damping(0.65, 0.0)};
  for (const auto& base : kinds) {
    for (int iter = 0; iter < 100; ++iter) {
      DensityMatrix rho = random_density_1q(rng);
      double t1 = 2.0 * rng.next_double();
      double t2 = 2.0 * rng.next_double();
      DensityMatrix seq =
          apply_channel(apply_channel(rho, base.with_time(t2)), base.with_time(t1));
      DensityMatrix joint = apply_channel(rho, base.with_time(t1 + t2));
      worst = std::max(worst, (seq.mat - joint.mat).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double gks_exactness_residual() {
  const Complex i(0.0, 1.0);
  double gamma = 2.0, gamma_tilde = 4.0, big_gamma = 4.0;

  Eigen::Matrix3cd pd = Eigen::Matrix3cd::Zero();
  pd(2, 2) = gamma / 2.0;
  Eigen::Matrix3cd dep = Eigen::Matrix3cd::Zero();
  dep(0, 0) = dep(1, 1) = dep(2, 2) = gamma_tilde / 4.0;
  Eigen::Matrix3cd ad = Eigen::Matrix3cd::Zero();
  ad(0, 0) = ad(1, 1) = big_gamma / 4.0;
  ad(0, 1) = -i * (big_gamma / 4.0);
  ad(1, 0) = i * (big_gamma / 4.0);

  bool exact =
      gks_matrix(NoiseChannel::phase_damping(gamma, 1.0)).a == pd &&
      gks_matrix(NoiseChannel::depolarizing_markov(gamma_tilde, 1.0)).a == dep &&
      gks_matrix(NoiseChannel::amplitude_damping(big_gamma, 1.0)).a == ad;
  return exact ? 0.0 : 1.0;
}

double gks_psd_residual() {
  double worst = 0.0;
  for (const auto& ch : {NoiseChannel::phase_damping(0.3, 1.0),
                         NoiseChannel::depolarizing_markov(0.5, 1.0),
                         NoiseChannel::amplitude_damping(0.7, 1.0)}) {
    Eigen::Matrix3cd a = gks_matrix(ch).a;
    worst = std::max(worst, (a - a.adjoint()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(a);
    worst = std::max(worst, std::max(0.0, -solver.eigenvalues().minCoeff()));
  }
  return worst;
}

double discretization_residual() {
  // Three qubits under the bit-flip branching: exact enumeration of the
  // eight branch patterns against the printed expressions.
  double worst = 0.0;
  for (double eps : {0.01, 0.1}) {
    double p_none = 0.0, p_two_or_more = 0.0;
    for (int pattern = 0; pattern < 8; ++pattern) {
      int flips = std::popcount(static_cast<unsigned>(pattern));
      double prob = 1.0;
      for (int q = 0; q < 3; ++q) prob *= (pattern >> q) & 1 ? eps : 1.0 - eps;
      if (flips == 0) p_none += prob;
      if (flips >= 2) p_two_or_more += prob;
    }
    double expect_none = (1.0 - eps) * (1.0 - eps) * (1.0 - eps);
    double expect_two = 3.0 * eps * eps * (1.0 - eps) + eps * eps * eps;
    worst = std::max(worst, std::abs(p_none - expect_none));
    worst = std::max(worst, std::abs(p_two_or_more - expect_two));
    if (!(p_none >= 1.0 - 3.0 * eps)) worst = std::max(worst, 1.0);
    if (!(p_two_or_more <= 3.0 * eps * eps)) worst = std::max(worst, 1.0);
  }
  return worst;
}

}  // namespace

OracleReport run_oracle_suite(const std::optional<std::vector<std::string>>& selection,
                              uint64_t seed) {
  SuiteBuilder b(selection, seed);

  if (b.wanted("pauli_dense_bridge")) {
    b.add("pauli_dense_bridge", pauli_bridge_residual(seed), 1e-12);
  }
  if (b.wanted("qecc_condition_shor9")) {
    b.add("qecc_condition_shor9", qecc_condition_residual("shor9"), 1e-10);
  }
  if (b.wanted("qecc_condition_steane7")) {
    b.add("qecc_condition_steane7", qecc_condition_residual("steane7"), 1e-10);
  }
  if (b.wanted("hadamard_duality")) {
    b.add("hadamard_duality", hadamard_duality_residual(), 1e-10);
  }
  if (b.wanted("codeword_orthonormality")) {
    b.add("codeword_orthonormality", orthonormality_residual(), 1e-10);
  }
  if (b.wanted("stabilizer_fixes_codewords")) {
    b.add("stabilizer_fixes_codewords", stabilizer_fixing_residual(), 1e-10);
  }
  for (auto [check, gate] :
       {std::pair<const char*, TransversalGate>{"transversal_bitwise_H",
                                                TransversalGate::BitwiseH},
        {"transversal_bitwise_X", TransversalGate::BitwiseX},
        {"transversal_bitwise_Z", TransversalGate::BitwiseZ},
        {"transversal_cnot", TransversalGate::TransversalCnot}}) {
    if (b.wanted(check)) {
      b.add(check, transversal_gate_image(builtin_code("steane7"), gate).mismatch_norm,
            1e-10);
    }
  }
  if (b.wanted("dfs_singlet")) b.add("dfs_singlet", dfs_singlet_residual(), 1e-10);
  if (b.wanted("dfs_four_qubit")) b.add("dfs_four_qubit", dfs_four_qubit_residual(), 1e-10);
  if (b.wanted("subsystem3_leakage")) {
    b.add("subsystem3_leakage", subsystem_leakage_residual(), 1e-10);
  }
  if (b.wanted("kraus_completeness")) {
    b.add("kraus_completeness", kraus_completeness_residual(), 1e-12);
  }
  if (b.wanted("kraus_matches_closed_form")) {
    b.add("kraus_matches_closed_form", kraus_action_residual(), 1e-12);
  }
  if (b.wanted("channel_semigroup")) {
    b.add("channel_semigroup", semigroup_residual(seed), 1e-12);
  }
  if (b.wanted("gks_exact")) b.add("gks_exact", gks_exactness_residual(), 0.5);
  if (b.wanted("gks_psd")) b.add("gks_psd", gks_psd_residual(), 1e-12);
  if (b.wanted("error_discretization")) {
    b.add("error_discretization", discretization_residual(), 1e-12);
  }
  return b.take();
}

}  // namespace qec
