#pragma once

#include <string>

#include "qec/stabilizer_code.hpp"

namespace qec {

enum class TransversalGate { BitwiseH, BitwiseX, BitwiseZ, TransversalCnot };

struct TransversalGateResult {
  std::string encoded_gate;  // induced logical action: H, X, Z or CNOT
  double mismatch_norm;      // worst deviation from the claimed codeword map
  bool verified;             // mismatch below 1e-10
};

// Verifies, on dense encoded basis states, that the bitwise (or pairwise)
// physical operation induces the claimed logical gate. Only steane7 carries
// this set of transversality facts among the built-ins.
TransversalGateResult transversal_gate_image(const StabilizerCode& code,
                                             TransversalGate gate);

TransversalGate parse_transversal_gate(const std::string& name);

}  // namespace qec
