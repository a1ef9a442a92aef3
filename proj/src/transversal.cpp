#include "qec/transversal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qec/dense.hpp"

namespace qec {

TransversalGate parse_transversal_gate(const std::string& name) {
  if (name == "bitwise_H") return TransversalGate::BitwiseH;
  if (name == "bitwise_X") return TransversalGate::BitwiseX;
  if (name == "bitwise_Z") return TransversalGate::BitwiseZ;
  if (name == "transversal_CNOT") return TransversalGate::TransversalCnot;
  throw std::invalid_argument("unknown transversal gate: " + name);
}

TransversalGateResult transversal_gate_image(const StabilizerCode& code,
                                             TransversalGate gate) {
  if (code.name != "steane7") {
    throw std::invalid_argument(
        "transversal_gate_image: only steane7 is supported");
  }
  StateVector zero = encode_codeword("steane7", 1.0, 0.0);
  StateVector one = encode_codeword("steane7", 0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  auto bitwise = [&](const StateVector& s, const std::string& g) {
    StateVector out = s;
    CMatrix u = gate_constant(g);
    for (std::size_t q = 0; q < s.n; ++q) out = apply_1q_gate(out, q, u);
    return out;
  };

  double mismatch = 0.0;
  std::string encoded;
  switch (gate) {
    case TransversalGate::BitwiseH: {
      StateVector plus = Complex(inv_sqrt2) * (zero + one);
      StateVector minus = Complex(inv_sqrt2) * (zero - one);
      mismatch = std::max((bitwise(zero, "H") - plus).norm(),
                          (bitwise(one, "H") - minus).norm());
      encoded = "H";
      break;
    }
    case TransversalGate::BitwiseX: {
      mismatch = std::max((bitwise(zero, "X") - one).norm(),
                          (bitwise(one, "X") - zero).norm());
      encoded = "X";
      break;
    }
    case TransversalGate::BitwiseZ: {
      mismatch = std::max((bitwise(zero, "Z") - zero).norm(),
                          (bitwise(one, "Z") - (Complex(-1.0) * one)).norm());
      encoded = "Z";
      break;
    }
    case TransversalGate::TransversalCnot: {
      const StateVector* words[2] = {&zero, &one};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          StateVector in = tensor_states(*words[a], *words[b]);
          StateVector out = in;
          for (std::size_t q = 0; q < 7; ++q) out = apply_cnot(out, q, q + 7);
          StateVector expect = tensor_states(*words[a], *words[a ^ b]);
          mismatch = std::max(mismatch, (out - expect).norm());
        }
      }
      encoded = "CNOT";
      break;
    }
  }
  return TransversalGateResult{encoded, mismatch, mismatch < 1e-10};
}

}  // namespace qec
