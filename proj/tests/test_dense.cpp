#include <doctest.h>

#include <cmath>
#include <complex>

#include "qec/dense.hpp"
#include "qec/oracle_report.hpp"
#include "qec/rng.hpp"
#include "qec/stabilizer_code.hpp"
#include "qec/transversal.hpp"

using qec::Complex;
using qec::PauliOperator;
using qec::StateVector;

namespace {

double norm_of(const qec::CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("gate constants") {
  qec::CMatrix h = qec::gate_constant("H");
  CHECK(norm_of(h * h - qec::CMatrix::Identity(2, 2)) < 1e-15);

  // CNOT |10> = |11>
  qec::CMatrix cnot = qec::gate_constant("CNOT");
  Eigen::Vector4cd ket10 = Eigen::Vector4cd::Zero();
  ket10[2] = 1.0;
  Eigen::Vector4cd mapped = cnot * ket10;
  CHECK(std::abs(mapped[3] - Complex(1, 0)) < 1e-15);

  // PI8^2 has diagonal e^{+-i pi/4}.
  qec::CMatrix pi8 = qec::gate_constant("PI8");
  qec::CMatrix sq = pi8 * pi8;
  CHECK(std::abs(sq(0, 0) - std::exp(Complex(0, M_PI / 4))) < 1e-15);
  CHECK(std::abs(sq(1, 1) - std::exp(Complex(0, -M_PI / 4))) < 1e-15);

  qec::CMatrix pi4 = qec::gate_constant("PI4");
  CHECK(std::abs(pi4(1, 1) - Complex(0, 1)) < 1e-15);
  CHECK_THROWS(qec::gate_constant("T"));
}

TEST_CASE("qubit 0 is the most significant ket position") {
  StateVector s = StateVector::ket("100");
  CHECK(std::abs(s.amps[4] - Complex(1, 0)) < 1e-15);
  // X on qubit 0 clears it.
  StateVector flipped = qec::apply_pauli(s, PauliOperator::parse("XII"));
  CHECK(std::abs(flipped.amps[0] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("apply_pauli equals the dense matrix action") {
  qec::RngStream rng(41, 0);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t n = 3;
    qec::BitVec x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
      x.set(q, rng.next_below(2));
      z.set(q, rng.next_below(2));
    }
    PauliOperator p(x, z, static_cast<int>(rng.next_below(4)));
    StateVector psi{n, qec::CVector::Random(8)};
    psi.amps /= psi.amps.norm();
    StateVector via_apply = qec::apply_pauli(psi, p);
    qec::CVector via_matrix = qec::pauli_to_dense(p) * psi.amps;
    CHECK((via_apply.amps - via_matrix).norm() < 1e-12);
  }
}

TEST_CASE("dense bridge: products map to matrix products, exhaustively to 2 qubits") {
  // Includes every phase prefix; this pins the Y = i XZ bookkeeping.
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<PauliOperator> all;
    std::vector<int> digits(n, 0);
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    while (true) {
      std::string label;
      for (std::size_t q = 0; q < n; ++q) label.push_back(letters[digits[q]]);
      PauliOperator base = PauliOperator::parse(label);
      for (int extra = 0; extra < 4; ++extra) {
        all.push_back(PauliOperator(base.x_bits(), base.z_bits(),
                                    base.phase_exp() + extra));
      }
      std::size_t q = 0;
      while (q < n && digits[q] == 3) digits[q++] = 0;
      if (q == n) break;
      ++digits[q];
    }
    double worst = 0.0;
    for (const auto& a : all) {
      for (const auto& b : all) {
        worst = std::max(worst, norm_of(qec::pauli_to_dense(a * b) -
                                        qec::pauli_to_dense(a) * qec::pauli_to_dense(b)));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("dense bridge on 3 qubits, every operator pair including phases") {
  std::vector<PauliOperator> all;
  std::vector<int> digits(3, 0);
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  while (true) {
    std::string label;
    for (std::size_t q = 0; q < 3; ++q) label.push_back(letters[digits[q]]);
    PauliOperator base = PauliOperator::parse(label);
    for (int extra = 0; extra < 4; ++extra) {
      all.push_back(PauliOperator(base.x_bits(), base.z_bits(), base.phase_exp() + extra));
    }
    std::size_t q = 0;
    while (q < 3 && digits[q] == 3) digits[q++] = 0;
    if (q == 3) break;
    ++digits[q];
  }
  REQUIRE(all.size() == 256);

  // Cache dense forms keyed on (x bits, z bits, phase).
  auto key_of = [](const PauliOperator& p) {
    uint64_t key = 0;
    for (std::size_t q = 0; q < 3; ++q) {
      key |= static_cast<uint64_t>(p.x(q)) << q;
      key |= static_cast<uint64_t>(p.z(q)) << (3 + q);
    }
    return key | (static_cast<uint64_t>(p.phase_exp()) << 6);
  };
  std::vector<qec::CMatrix> cache(256);
  std::vector<bool> cached(256, false);
  auto dense_of = [&](const PauliOperator& p) -> const qec::CMatrix& {
    uint64_t key = key_of(p);
    if (!cached[key]) {
      cache[key] = qec::pauli_to_dense(p);
      cached[key] = true;
    }
    return cache[key];
  };

  double worst = 0.0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      worst = std::max(worst, norm_of(dense_of(a * b) - dense_of(a) * dense_of(b)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("codewords: bitflip3 and shor9 from the printed superpositions") {
  StateVector zero = qec::encode_codeword("bitflip3", 1.0, 0.0);
  CHECK(std::abs(zero.amps[0] - Complex(1, 0)) < 1e-15);

  StateVector shor_one = qec::encode_codeword("shor9", 0.0, 1.0);
  // (|000>-|111>)^3 / sqrt(8): amplitude of |000 000 000> is +1/sqrt(8),
  // of |111 000 000> is -1/sqrt(8), of |111 111 000> is +1/sqrt(8).
  double a = 1.0 / std::sqrt(8.0);
  CHECK(std::abs(shor_one.amps[0] - Complex(a, 0)) < 1e-12);
  CHECK(std::abs(shor_one.amps[0b111000000] - Complex(-a, 0)) < 1e-12);
  CHECK(std::abs(shor_one.amps[0b111111000] - Complex(a, 0)) < 1e-12);

  StateVector steane_zero = qec::encode_codeword("steane7", 1.0, 0.0);
  CHECK(std::abs(steane_zero.amps[0] - Complex(1.0 / std::sqrt(8.0), 0)) < 1e-12);
  CHECK(std::abs(steane_zero.amps[0b0001111] - Complex(1.0 / std::sqrt(8.0), 0)) < 1e-12);
  CHECK(std::abs(steane_zero.norm() - 1.0) < 1e-12);

  CHECK_THROWS(qec::encode_codeword("bitflip3", 1.0, 1.0));
  CHECK_THROWS(qec::encode_codeword("five_qubit", 1.0, 0.0));
}

TEST_CASE("encoded pairs are orthonormal") {
  for (const char* name : {"bitflip3", "steane7", "shor9"}) {
    StateVector zero = qec::encode_codeword(name, 1.0, 0.0);
    StateVector one = qec::encode_codeword(name, 0.0, 1.0);
    CHECK(std::abs(zero.norm() - 1.0) < 1e-12);
    CHECK(std::abs(one.norm() - 1.0) < 1e-12);
    CHECK(std::abs(zero.inner(one)) < 1e-12);
  }
}

TEST_CASE("generators fix the encoded states; a sign flip breaks it") {
  for (const char* name : {"bitflip3", "steane7", "shor9"}) {
    qec::StabilizerCode code = qec::builtin_code(name);
    CHECK(qec::codeword_stabilizer_residual(code, name) < 1e-10);
  }
  // Mutation fixture: wrong sign on one Shor generator.
  qec::StabilizerCode mutated = qec::builtin_code("shor9");
  mutated.generators[0] = PauliOperator::parse("-ZZIIIIIII");
  CHECK(qec::codeword_stabilizer_residual(mutated, "shor9") > 1.0);
}

TEST_CASE("logical operators act as encoded flips on the printed codewords") {
  for (const char* name : {"bitflip3", "steane7", "shor9"}) {
    qec::StabilizerCode code = qec::builtin_code(name);
    StateVector zero = qec::encode_codeword(name, 1.0, 0.0);
    StateVector one = qec::encode_codeword(name, 0.0, 1.0);
    // X-bar exchanges the basis codewords.
    CHECK((qec::apply_pauli(zero, code.logical_x[0]) - one).norm() < 1e-10);
    CHECK((qec::apply_pauli(one, code.logical_x[0]) - zero).norm() < 1e-10);
    // Z-bar fixes |0> and negates |1>.
    CHECK((qec::apply_pauli(zero, code.logical_z[0]) - zero).norm() < 1e-10);
    CHECK((qec::apply_pauli(one, code.logical_z[0]) + one).norm() < 1e-10);
  }
}

TEST_CASE("hadamard_all involution and the block identity") {
  StateVector zero = StateVector::ket("0");
  StateVector plus = qec::hadamard_all(zero);
  CHECK(std::abs(plus.amps[0] - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(plus.amps[1] - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);

  qec::RngStream rng(43, 0);
  StateVector psi{3, qec::CVector::Random(8)};
  psi.amps /= psi.amps.norm();
  CHECK((qec::hadamard_all(qec::hadamard_all(psi)) - psi).norm() < 1e-12);

  // H^3 (|000>+|111>)/sqrt(2) = (|000>+|110>+|101>+|011>)/2
  StateVector ghz = Complex(1 / std::sqrt(2.0)) *
                    (StateVector::ket("000") + StateVector::ket("111"));
  StateVector even = qec::hadamard_all(ghz);
  for (uint64_t idx : {0b000u, 0b110u, 0b101u, 0b011u}) {
    CHECK(std::abs(even.amps[idx] - Complex(0.5, 0)) < 1e-12);
  }
  for (uint64_t idx : {0b001u, 0b010u, 0b100u, 0b111u}) {
    CHECK(std::abs(even.amps[idx]) < 1e-12);
  }
}

TEST_CASE("steane hadamard duality") {
  StateVector zero = qec::encode_codeword("steane7", 1.0, 0.0);
  StateVector one = qec::encode_codeword("steane7", 0.0, 1.0);
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK((qec::hadamard_all(zero) - Complex(inv_sqrt2) * (zero + one)).norm() < 1e-10);
  CHECK((qec::hadamard_all(one) - Complex(inv_sqrt2) * (zero - one)).norm() < 1e-10);
}

TEST_CASE("qecc condition matrix") {
  // Identity only: c = [[1]], violation 0.
  StateVector zero = qec::encode_codeword("shor9", 1.0, 0.0);
  StateVector one = qec::encode_codeword("shor9", 0.0, 1.0);
  auto only_id = qec::qecc_condition_matrix({zero, one}, {PauliOperator::identity(9)});
  CHECK(std::abs(only_id.c[0][0] - Complex(1, 0)) < 1e-12);
  CHECK(only_id.max_violation < 1e-10);

  // Weight <= 1 errors on shor9: the defining oracle check.
  auto errors = qec::paulis_up_to_weight(9, 1, true);
  auto full = qec::qecc_condition_matrix({zero, one}, errors);
  CHECK(full.max_violation < 1e-10);

  // bitflip3 with {I, Z1} violates the structure.
  StateVector bzero = qec::encode_codeword("bitflip3", 1.0, 0.0);
  StateVector bone = qec::encode_codeword("bitflip3", 0.0, 1.0);
  auto bad = qec::qecc_condition_matrix(
      {bzero, bone}, {PauliOperator::identity(3), PauliOperator::parse("ZII")});
  CHECK(bad.max_violation > 0.5);
}

TEST_CASE("collective operators") {
  qec::CMatrix sz1 = qec::collective_operator(1, 'z');
  CHECK(std::abs(sz1(0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(sz1(1, 1) - Complex(-1, 0)) < 1e-15);

  // S_z annihilates the singlet.
  StateVector singlet = qec::singlet_state();
  CHECK(qec::apply_collective(singlet, 'z').amps.norm() < 1e-12);

  // S_x |00> = |10> + |01>
  StateVector sx = qec::apply_collective(StateVector::ket("00"), 'x');
  CHECK(std::abs(sx.amps[0b10] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(sx.amps[0b01] - Complex(1, 0)) < 1e-15);

  // Matrix and direct application agree.
  qec::RngStream rng(47, 0);
  StateVector psi{2, qec::CVector::Random(4)};
  psi.amps /= psi.amps.norm();
  for (char axis : {'x', 'y', 'z'}) {
    qec::CVector via_matrix = qec::collective_operator(2, axis) * psi.amps;
    CHECK((qec::apply_collective(psi, axis).amps - via_matrix).norm() < 1e-12);
  }
}

TEST_CASE("dfs: singlet and the 4-qubit code are collective-noise free") {
  auto singlet_results = qec::dfs_check({qec::singlet_state()});
  for (const auto& r : singlet_results) {
    CHECK(std::abs(r.c_alpha) < 1e-12);
    CHECK(r.max_residual < 1e-10);
  }
  auto four_results = qec::dfs_check({qec::dfs4_codeword(0), qec::dfs4_codeword(1)});
  for (const auto& r : four_results) {
    CHECK(std::abs(r.c_alpha) < 1e-12);
    CHECK(r.max_residual < 1e-10);
    CHECK(r.c_inconsistency < 1e-10);
  }
}

TEST_CASE("dfs: |00> is a z eigenstate but fails on x") {
  auto results = qec::dfs_check({StateVector::ket("00")}, "zx");
  REQUIRE(results.size() == 2);
  CHECK(results[0].axis == 'z');
  CHECK(std::abs(results[0].c_alpha - Complex(2, 0)) < 1e-12);
  CHECK(results[0].max_residual < 1e-10);
  CHECK(results[1].axis == 'x');
  CHECK(results[1].max_residual > 0.5);
}

TEST_CASE("3-qubit subsystem pairs are invariant; |000> alone is not") {
  for (int logical : {0, 1}) {
    for (const auto& r : qec::subsystem_invariance(qec::subsystem3_basis(logical))) {
      CHECK(r.leakage < 1e-10);
    }
  }
  auto leaky = qec::subsystem_invariance({StateVector::ket("000")}, "x");
  CHECK(leaky[0].leakage > 0.5);

  // The full space is trivially invariant.
  std::vector<StateVector> full;
  for (uint64_t i = 0; i < 4; ++i) full.push_back(StateVector::basis_state(2, i));
  for (const auto& r : qec::subsystem_invariance(full)) {
    CHECK(r.leakage < 1e-10);
  }
}

TEST_CASE("4-qubit codeword normalization confirms the printed 1/sqrt(3)") {
  CHECK(std::abs(qec::dfs4_codeword(0).norm() - 1.0) < 1e-12);
  CHECK(std::abs(qec::dfs4_codeword(1).norm() - 1.0) < 1e-12);
}

TEST_CASE("transversal gate images on steane7") {
  qec::StabilizerCode steane = qec::builtin_code("steane7");
  auto h = qec::transversal_gate_image(steane, qec::TransversalGate::BitwiseH);
  CHECK(h.encoded_gate == "H");
  CHECK(h.verified);
  auto x = qec::transversal_gate_image(steane, qec::TransversalGate::BitwiseX);
  CHECK(x.encoded_gate == "X");
  CHECK(x.verified);
  auto z = qec::transversal_gate_image(steane, qec::TransversalGate::BitwiseZ);
  CHECK(z.encoded_gate == "Z");
  CHECK(z.verified);
  auto cnot = qec::transversal_gate_image(steane, qec::TransversalGate::TransversalCnot);
  CHECK(cnot.encoded_gate == "CNOT");
  CHECK(cnot.verified);

  CHECK_THROWS(qec::transversal_gate_image(qec::builtin_code("shor9"),
                                           qec::TransversalGate::BitwiseH));
}

TEST_CASE("oracle suite passes end to end") {
  qec::OracleReport report = qec::run_oracle_suite();
  for (const auto& c : report.checks) {
    INFO(c.name, " residual ", c.residual, " tolerance ", c.tolerance);
    CHECK(c.pass);
  }
  CHECK(report.all_pass());

  // Empty selection is a no-op.
  qec::OracleReport none = qec::run_oracle_suite(std::vector<std::string>{});
  CHECK(none.checks.empty());
  CHECK(none.all_pass());

  // Named selection runs just that check.
  qec::OracleReport one =
      qec::run_oracle_suite(std::vector<std::string>{"hadamard_duality"});
  REQUIRE(one.checks.size() == 1);
  CHECK(one.checks[0].name == "hadamard_duality");
}
