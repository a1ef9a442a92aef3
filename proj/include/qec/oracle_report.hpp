#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qec/stabilizer_code.hpp"

namespace qec {

struct OracleCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_pass() const;
  std::string to_json() const;
};

// Runs the dense verification suite: Pauli-product bridge, QECC conditions,
// Hadamard duality, transversal gate images, DFS/subsystem residuals and the
// channel laws. `selection` nullopt runs everything; an empty list runs
// nothing (no-op).
OracleReport run_oracle_suite(
    const std::optional<std::vector<std::string>>& selection = std::nullopt,
    uint64_t seed = 0x5eedULL);

// max over generators and both encoded basis states of ||S|psi> - |psi>||.
// encode_name selects the printed codewords (bitflip3, steane7, shor9).
double codeword_stabilizer_residual(const StabilizerCode& code,
                                    const std::string& encode_name);

}  // namespace qec
