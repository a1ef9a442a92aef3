#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qec/pauli.hpp"

namespace qec {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Dense n-qubit state. Basis index bit for qubit q has weight 2^(n-1-q),
// so qubit 0 is the most significant position ("|100>" has qubit 0 set).
struct StateVector {
  std::size_t n = 0;
  CVector amps;

  static StateVector zero_state(std::size_t n);
  static StateVector basis_state(std::size_t n, uint64_t index);
  // From a ket label like "010"; qubit 0 is the leftmost character.
  static StateVector ket(const std::string& bits);

  double norm() const { return amps.norm(); }
  Complex inner(const StateVector& other) const { return amps.dot(other.amps); }
};

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(Complex c, const StateVector& s);

// Kronecker product; a's qubits become qubits 0..a.n-1 of the result.
StateVector tensor_states(const StateVector& a, const StateVector& b);

struct DensityMatrix {
  std::size_t n = 0;
  CMatrix mat;

  static DensityMatrix pure(const StateVector& psi);
  double trace_real() const { return mat.trace().real(); }
};

// Throws unless rho is Hermitian, unit trace (1e-9) and has no eigenvalue
// below -1e-9.
void require_density(const DensityMatrix& rho);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& herm);

// --- gates -----------------------------------------------------------------

// H, PI8, Z, X, CNOT, PI4 with the exact matrix entries used throughout.
CMatrix gate_constant(const std::string& name);

StateVector apply_1q_gate(const StateVector& s, std::size_t q, const CMatrix& u);
StateVector apply_cnot(const StateVector& s, std::size_t control, std::size_t target);
StateVector hadamard_all(const StateVector& s);

// --- Pauli bridge ----------------------------------------------------------

// Dense matrix of p including the i^phase prefix. Requires p.n <= 10.
CMatrix pauli_to_dense(const PauliOperator& p);

// Applies p to a state without forming the matrix; any n.
StateVector apply_pauli(const StateVector& s, const PauliOperator& p);

// --- codewords -------------------------------------------------------------

// alpha|0>_code + beta|1>_code for code_name in {bitflip3, steane7, shor9},
// built literally from the printed superpositions. Requires |a|^2+|b|^2 = 1.
StateVector encode_codeword(const std::string& code_name, Complex alpha, Complex beta);

// --- QECC condition --------------------------------------------------------

struct QeccConditionResult {
  // c[a][b] fitted from the i=j entries of <psi_j|E_a^dag E_b|psi_i>.
  std::vector<std::vector<Complex>> c;
  double max_violation = 0.0;
};

QeccConditionResult qecc_condition_matrix(const std::vector<StateVector>& codewords,
                                          const std::vector<PauliOperator>& errors);

// --- collective decoherence ------------------------------------------------

// S_alpha = sum_i sigma_alpha^i as a dense 2^n matrix; axis in {'x','y','z'}.
// Requires n <= 10.
CMatrix collective_operator(std::size_t n, char axis);

StateVector apply_collective(const StateVector& s, char axis);

struct DfsAxisResult {
  char axis;
  Complex c_alpha;       // Rayleigh quotient of the first state
  double max_residual;   // max over states of ||S|psi> - c|psi>||
  double c_inconsistency;  // max deviation of per-state quotients from c_alpha
};

std::vector<DfsAxisResult> dfs_check(const std::vector<StateVector>& states,
                                     const std::string& axes = "xyz");

struct SubsystemAxisResult {
  char axis;
  double leakage;  // operator norm of (I-P) S_alpha P
};

std::vector<SubsystemAxisResult> subsystem_invariance(const std::vector<StateVector>& basis,
                                                      const std::string& axes = "xyz");

// Triplet/singlet two-qubit states as printed: s, t_minus, t_zero, t_plus.
StateVector singlet_state();
StateVector triplet_state(int m);  // m in {-1, 0, +1}

// The 4-qubit collective-noise codewords.
StateVector dfs4_codeword(int logical);
// Basis pairs of the 3-qubit noiseless subsystem; logical in {0, 1}.
std::vector<StateVector> subsystem3_basis(int logical);

}  // namespace qec
