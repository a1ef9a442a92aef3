#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qec/bitvec.hpp"

namespace qec {

// n-qubit Pauli in the symplectic binary representation.
//
// An operator is stored as i^phase_exp * prod_q X_q^{x(q)} Z_q^{z(q)}, with
// the X factor to the left of the Z factor on every qubit. A qubit carries
// the Hermitian letter Y exactly when both bits are set; since Y = i*XZ,
// parsing the letter Y adds 1 to phase_exp and printing folds it back out.
// Qubit 0 is the leftmost letter in text form.
class PauliOperator {
 public:
  PauliOperator() = default;

  // Identity on n qubits.
  static PauliOperator identity(std::size_t n);

  // Single letter ('I','X','Y','Z') on qubit q of n, all other qubits I.
  static PauliOperator single(std::size_t n, std::size_t q, char letter);

  // Parses "XIZ", "-Y", "+iXX", ... Throws std::invalid_argument naming the
  // offending position on malformed input.
  static PauliOperator parse(std::string_view label);

  // Raw symplectic constructor; phase is the i-exponent of the XZ normal form.
  PauliOperator(BitVec x, BitVec z, int phase_exp);

  std::size_t n() const { return x_.size(); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  bool x(std::size_t q) const { return x_.get(q); }
  bool z(std::size_t q) const { return z_.get(q); }
  char letter(std::size_t q) const;

  // i-exponent of the sign prefix in letter form, i.e. with each XZ pair
  // rewritten as -iY. This is what canonical printing shows.
  int effective_phase() const;

  // Canonical text: sign prefix ("+i", "-", "-i") only when the effective
  // phase is nonzero, then one letter per qubit.
  std::string str() const;

  // Number of qubits acted on non-trivially.
  std::size_t weight() const;

  bool is_identity_bits() const { return !x_.any() && !z_.any(); }

  // Exact product with mod-4 phase tracking. Throws on mismatched n.
  friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);

  // Hermitian conjugate.
  PauliOperator dagger() const;

  // Concatenation onto a.n + b.n qubits; phases add mod 4.
  static PauliOperator tensor(const PauliOperator& a, const PauliOperator& b);

  // True iff the symplectic inner product vanishes. Throws on mismatched n.
  static bool commute(const PauliOperator& a, const PauliOperator& b);

  // Equal bit pattern, phase ignored.
  bool same_bits(const PauliOperator& o) const {
    return x_ == o.x_ && z_ == o.z_;
  }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVec x_;
  BitVec z_;
  int phase_ = 0;  // mod 4
};

inline bool commutes(const PauliOperator& a, const PauliOperator& b) {
  return PauliOperator::commute(a, b);
}

}  // namespace qec
