#include "qec/dense.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qec {

namespace {

Complex i_power(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

constexpr std::size_t kMaxDenseQubits = 10;   // 2^10 matrices at most
constexpr std::size_t kMaxStateQubits = 14;   // plain vectors stay cheap longer

void require_state_size(std::size_t n) {
  if (n > kMaxStateQubits) {
    throw std::invalid_argument("dense state limited to " +
                                std::to_string(kMaxStateQubits) + " qubits");
  }
}

void require_matrix_size(std::size_t n) {
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("dense operator limited to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
}

uint64_t qubit_mask(std::size_t n, std::size_t q) {
  return uint64_t{1} << (n - 1 - q);
}

}  // namespace

StateVector StateVector::zero_state(std::size_t n) { return basis_state(n, 0); }

StateVector StateVector::basis_state(std::size_t n, uint64_t index) {
  require_state_size(n);
  StateVector s;
  s.n = n;
  s.amps = CVector::Zero(int64_t{1} << n);
  s.amps[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::ket(const std::string& bits) {
  uint64_t index = 0;
  for (char c : bits) {
    index <<= 1;
    if (c == '1') {
      index |= 1;
    } else if (c != '0') {
      throw std::invalid_argument("ket label must be 0/1 characters");
    }
  }
  return basis_state(bits.size(), index);
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw std::invalid_argument("state sum: qubit counts differ");
  return StateVector{a.n, a.amps + b.amps};
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw std::invalid_argument("state difference: qubit counts differ");
  return StateVector{a.n, a.amps - b.amps};
}

StateVector operator*(Complex c, const StateVector& s) {
  return StateVector{s.n, c * s.amps};
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix{psi.n, psi.amps * psi.amps.adjoint()};
}

double min_eigenvalue(const CMatrix& herm) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  return solver.eigenvalues().minCoeff();
}

void require_density(const DensityMatrix& rho) {
  if (rho.mat.rows() != rho.mat.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho.mat.trace() - Complex(1.0, 0.0)) > 1e-9) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  if (min_eigenvalue(rho.mat) < -1e-9) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

CMatrix gate_constant(const std::string& name) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  if (name == "H") {
    CMatrix h(2, 2);
    h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    return h;
  }
  if (name == "PI8") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = std::exp(i * (std::numbers::pi / 8.0));
    m(1, 1) = std::exp(-i * (std::numbers::pi / 8.0));
    return m;
  }
  if (name == "PI4") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = i;
    return m;
  }
  if (name == "Z") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
  }
  if (name == "X") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
  }
  if (name == "Y") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = -i;
    m(1, 0) = i;
    return m;
  }
  if (name == "CNOT") {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
  }
  throw std::invalid_argument("unknown gate constant: " + name);
}

StateVector apply_1q_gate(const StateVector& s, std::size_t q, const CMatrix& u) {
  if (q >= s.n) throw std::invalid_argument("gate qubit index out of range");
  uint64_t mask = qubit_mask(s.n, q);
  StateVector out{s.n, CVector::Zero(s.amps.size())};
  for (uint64_t idx = 0; idx < static_cast<uint64_t>(s.amps.size()); ++idx) {
    if (idx & mask) continue;
    Complex a0 = s.amps[idx];
    Complex a1 = s.amps[idx | mask];
    out.amps[idx] = u(0, 0) * a0 + u(0, 1) * a1;
    out.amps[idx | mask] = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return out;
}

StateVector apply_cnot(const StateVector& s, std::size_t control, std::size_t target) {
  if (control >= s.n || target >= s.n || control == target) {
    throw std::invalid_argument("cnot qubit indices out of range");
  }
  uint64_t cmask = qubit_mask(s.n, control);
  uint64_t tmask = qubit_mask(s.n, target);
  StateVector out = s;
  for (uint64_t idx = 0; idx < static_cast<uint64_t>(s.amps.size()); ++idx) {
    if ((idx & cmask) && !(idx & tmask)) {
      std::swap(out.amps[idx], out.amps[idx | tmask]);
    }
  }
  return out;
}

StateVector hadamard_all(const StateVector& s) {
  StateVector out = s;
  CMatrix h = gate_constant("H");
  for (std::size_t q = 0; q < s.n; ++q) out = apply_1q_gate(out, q, h);
  return out;
}

CMatrix pauli_to_dense(const PauliOperator& p) {
  require_matrix_size(p.n());
  CMatrix out = CMatrix::Ones(1, 1);
  for (std::size_t q = 0; q < p.n(); ++q) {
    CMatrix factor;
    // X^x Z^z per qubit; the letter-Y phase is carried by phase_exp.
    bool xb = p.x(q), zb = p.z(q);
    if (xb && zb) {
      factor = gate_constant("X") * gate_constant("Z");
    } else if (xb) {
      factor = gate_constant("X");
    } else if (zb) {
      factor = gate_constant("Z");
    } else {
      factor = CMatrix::Identity(2, 2);
    }
    // Accumulate left to right so qubit 0 stays the outermost factor.
    CMatrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block(2 * r, 2 * c, 2, 2) = out(r, c) * factor;
      }
    }
    out = std::move(next);
  }
  return i_power(p.phase_exp()) * out;
}

StateVector apply_pauli(const StateVector& s, const PauliOperator& p) {
  if (p.n() != s.n) throw std::invalid_argument("apply_pauli: qubit counts differ");
  uint64_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < s.n; ++q) {
    if (p.x(q)) xmask |= qubit_mask(s.n, q);
    if (p.z(q)) zmask |= qubit_mask(s.n, q);
  }
  Complex prefix = i_power(p.phase_exp());
  StateVector out{s.n, CVector::Zero(s.amps.size())};
  for (uint64_t idx = 0; idx < static_cast<uint64_t>(s.amps.size()); ++idx) {
    // (X^x Z^z)|idx> = (-1)^{z . idx} |idx ^ x>
    int sign = std::popcount(idx & zmask) % 2 ? -1 : 1;
    out.amps[idx ^ xmask] = prefix * static_cast<double>(sign) * s.amps[idx];
  }
  return out;
}

StateVector encode_codeword(const std::string& code_name, Complex alpha, Complex beta) {
  double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw std::invalid_argument("encode_codeword: |alpha|^2+|beta|^2 must be 1");
  }
  auto superpose = [](std::size_t n, const std::vector<std::string>& kets,
                      const std::vector<double>& signs) {
    StateVector s{n, CVector::Zero(int64_t{1} << n)};
    double amp = 1.0 / std::sqrt(static_cast<double>(kets.size()));
    for (std::size_t i = 0; i < kets.size(); ++i) {
      s = s + (Complex(signs[i] * amp) * StateVector::ket(kets[i]));
    }
    return s;
  };

  StateVector zero, one;
  if (code_name == "bitflip3") {
    zero = StateVector::ket("000");
    one = StateVector::ket("111");
  } else if (code_name == "steane7") {
    zero = superpose(7,
                     {"0000000", "0001111", "0110011", "0111100", "1010101", "1011010",
                      "1100110", "1101001"},
                     std::vector<double>(8, 1.0));
    one = superpose(7,
                    {"1111111", "1110000", "1001100", "1000011", "0101010", "0100101",
                     "0011001", "0010110"},
                    std::vector<double>(8, 1.0));
  } else if (code_name == "shor9") {
    // Product of three (|000> +/- |111>)/sqrt(2) blocks.
    auto block_product = [&](double sign) {
      StateVector s{9, CVector::Zero(512)};
      double amp = 1.0 / std::sqrt(8.0);
      for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
          for (int b2 = 0; b2 < 2; ++b2) {
            std::string label;
            label += b0 ? "111" : "000";
            label += b1 ? "111" : "000";
            label += b2 ? "111" : "000";
            double coeff = amp * std::pow(sign, b0 + b1 + b2);
            s = s + (Complex(coeff) * StateVector::ket(label));
          }
        }
      }
      return s;
    };
    zero = block_product(1.0);
    one = block_product(-1.0);
  } else {
    throw std::invalid_argument("encode_codeword: unsupported code " + code_name);
  }
  return (alpha * zero) + (beta * one);
}

QeccConditionResult qecc_condition_matrix(const std::vector<StateVector>& codewords,
                                          const std::vector<PauliOperator>& errors) {
  std::size_t num_words = codewords.size();
  std::size_t num_errors = errors.size();
  // Precompute E_a |psi_i>.
  std::vector<std::vector<StateVector>> applied(num_errors);
  for (std::size_t a = 0; a < num_errors; ++a) {
    applied[a].reserve(num_words);
    for (const auto& w : codewords) applied[a].push_back(apply_pauli(w, errors[a]));
  }
  QeccConditionResult result;
  result.c.assign(num_errors, std::vector<Complex>(num_errors, Complex(0, 0)));
  // <psi_j| E_a^dag E_b |psi_i> = <E_a psi_j, E_b psi_i>
  for (std::size_t a = 0; a < num_errors; ++a) {
    for (std::size_t b = 0; b < num_errors; ++b) {
      Complex diag_sum(0, 0);
      for (std::size_t i = 0; i < num_words; ++i) {
        diag_sum += applied[a][i].inner(applied[b][i]);
      }
      result.c[a][b] = diag_sum / static_cast<double>(num_words);
    }
  }
  for (std::size_t a = 0; a < num_errors; ++a) {
    for (std::size_t b = 0; b < num_errors; ++b) {
      for (std::size_t j = 0; j < num_words; ++j) {
        for (std::size_t i = 0; i < num_words; ++i) {
          Complex entry = applied[a][j].inner(applied[b][i]);
          Complex expected = (i == j) ? result.c[a][b] : Complex(0, 0);
          result.max_violation = std::max(result.max_violation, std::abs(entry - expected));
        }
      }
    }
  }
  return result;
}

CMatrix collective_operator(std::size_t n, char axis) {
  require_matrix_size(n);
  uint64_t dim = uint64_t{1} << n;
  CMatrix s = CMatrix::Zero(dim, dim);
  const Complex i(0.0, 1.0);
  for (std::size_t q = 0; q < n; ++q) {
    uint64_t mask = qubit_mask(n, q);
    for (uint64_t idx = 0; idx < dim; ++idx) {
      bool bit = idx & mask;
      switch (axis) {
        case 'x':
          s(idx ^ mask, idx) += 1.0;
          break;
        case 'y':
          // <flipped|sigma_y|idx>: i when idx bit is 0, -i when 1.
          s(idx ^ mask, idx) += bit ? -i : i;
          break;
        case 'z':
          s(idx, idx) += bit ? -1.0 : 1.0;
          break;
        default:
          throw std::invalid_argument("collective_operator: axis must be x, y or z");
      }
    }
  }
  return s;
}

StateVector apply_collective(const StateVector& s, char axis) {
  StateVector out{s.n, CVector::Zero(s.amps.size())};
  const Complex i(0.0, 1.0);
  for (std::size_t q = 0; q < s.n; ++q) {
    uint64_t mask = qubit_mask(s.n, q);
    for (uint64_t idx = 0; idx < static_cast<uint64_t>(s.amps.size()); ++idx) {
      bool bit = idx & mask;
      switch (axis) {
        case 'x':
          out.amps[idx ^ mask] += s.amps[idx];
          break;
        case 'y':
          out.amps[idx ^ mask] += (bit ? -i : i) * s.amps[idx];
          break;
        case 'z':
          out.amps[idx] += (bit ? -1.0 : 1.0) * s.amps[idx];
          break;
        default:
          throw std::invalid_argument("apply_collective: axis must be x, y or z");
      }
    }
  }
  return out;
}

std::vector<DfsAxisResult> dfs_check(const std::vector<StateVector>& states,
                                     const std::string& axes) {
  if (states.empty()) throw std::invalid_argument("dfs_check: no states");
  std::vector<DfsAxisResult> results;
  for (char axis : axes) {
    DfsAxisResult r{axis, Complex(0, 0), 0.0, 0.0};
    StateVector first_mapped = apply_collective(states[0], axis);
    r.c_alpha = states[0].inner(first_mapped);  // Rayleigh quotient, states normalized
    for (const auto& psi : states) {
      StateVector mapped = apply_collective(psi, axis);
      StateVector residual = mapped - (r.c_alpha * psi);
      r.max_residual = std::max(r.max_residual, residual.norm());
      Complex quotient = psi.inner(mapped);
      r.c_inconsistency = std::max(r.c_inconsistency, std::abs(quotient - r.c_alpha));
    }
    results.push_back(r);
  }
  return results;
}

std::vector<SubsystemAxisResult> subsystem_invariance(const std::vector<StateVector>& basis,
                                                      const std::string& axes) {
  if (basis.empty()) throw std::invalid_argument("subsystem_invariance: empty basis");
  std::size_t n = basis[0].n;
  Eigen::Index dim = basis[0].amps.size();

  // Gram-Schmidt onto orthonormal columns.
  std::vector<CVector> ortho;
  for (const auto& b : basis) {
    if (b.n != n) throw std::invalid_argument("subsystem_invariance: mixed qubit counts");
    CVector v = b.amps;
    for (const auto& u : ortho) v -= u.dot(v) * u;
    double norm = v.norm();
    if (norm > 1e-12) ortho.push_back(v / norm);
  }
  CMatrix v_cols(dim, static_cast<Eigen::Index>(ortho.size()));
  for (std::size_t c = 0; c < ortho.size(); ++c) v_cols.col(c) = ortho[c];

  std::vector<SubsystemAxisResult> results;
  for (char axis : axes) {
    CMatrix sv(dim, v_cols.cols());
    for (Eigen::Index c = 0; c < v_cols.cols(); ++c) {
      StateVector col{n, v_cols.col(c)};
      sv.col(c) = apply_collective(col, axis).amps;
    }
    // (I - P) S V with P = V V^dag; operator norm via SVD of the thin block.
    CMatrix leak = sv - v_cols * (v_cols.adjoint() * sv);
    Eigen::JacobiSVD<CMatrix> svd(leak);
    double norm = leak.cols() > 0 && leak.rows() > 0 ? svd.singularValues().maxCoeff() : 0.0;
    results.push_back(SubsystemAxisResult{axis, norm});
  }
  return results;
}

StateVector singlet_state() {
  double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  return (Complex(inv_sqrt2) * StateVector::ket("01")) -
         (Complex(inv_sqrt2) * StateVector::ket("10"));
}

StateVector triplet_state(int m) {
  double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (m) {
    case -1:
      return StateVector::ket("00");
    case 0:
      return (Complex(inv_sqrt2) * StateVector::ket("01")) +
             (Complex(inv_sqrt2) * StateVector::ket("10"));
    case 1:
      return StateVector::ket("11");
    default:
      throw std::invalid_argument("triplet_state: m must be -1, 0 or +1");
  }
}

StateVector tensor_states(const StateVector& a, const StateVector& b) {
  StateVector out{a.n + b.n, CVector::Zero(a.amps.size() * b.amps.size())};
  for (Eigen::Index i = 0; i < a.amps.size(); ++i) {
    for (Eigen::Index j = 0; j < b.amps.size(); ++j) {
      out.amps[i * b.amps.size() + j] = a.amps[i] * b.amps[j];
    }
  }
  return out;
}

StateVector dfs4_codeword(int logical) {
  if (logical == 0) {
    return tensor_states(singlet_state(), singlet_state());
  }
  if (logical == 1) {
    double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    StateVector term1 = tensor_states(triplet_state(+1), triplet_state(-1));
    StateVector term2 = tensor_states(triplet_state(0), triplet_state(0));
    StateVector term3 = tensor_states(triplet_state(-1), triplet_state(+1));
    return (Complex(inv_sqrt3) * term1) - (Complex(inv_sqrt3) * term2) +
           (Complex(inv_sqrt3) * term3);
  }
  throw std::invalid_argument("dfs4_codeword: logical must be 0 or 1");
}

std::vector<StateVector> subsystem3_basis(int logical) {
  double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  double inv_sqrt6 = 1.0 / std::sqrt(6.0);
  if (logical == 0) {
    StateVector a = (Complex(inv_sqrt2) * StateVector::ket("010")) -
                    (Complex(inv_sqrt2) * StateVector::ket("100"));
    StateVector b = (Complex(inv_sqrt2) * StateVector::ket("011")) -
                    (Complex(inv_sqrt2) * StateVector::ket("101"));
    return {a, b};
  }
  if (logical == 1) {
    StateVector a = (Complex(-2.0 * inv_sqrt6) * StateVector::ket("001")) +
                    (Complex(inv_sqrt6) * StateVector::ket("010")) +
                    (Complex(inv_sqrt6) * StateVector::ket("100"));
    StateVector b = (Complex(2.0 * inv_sqrt6) * StateVector::ket("110")) -
                    (Complex(inv_sqrt6) * StateVector::ket("101")) -
                    (Complex(inv_sqrt6) * StateVector::ket("011"));
    return {a, b};
  }
  throw std::invalid_argument("subsystem3_basis: logical must be 0 or 1");
}

}  // namespace qec
