#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qec/gf2.hpp"
#include "qec/pauli.hpp"

namespace qec {

// Syndrome bits follow generator list order: bit i = 1 iff the error
// anticommutes with generators[i].
struct Syndrome {
  BitVec bits;

  std::size_t size() const { return bits.size(); }
  bool get(std::size_t i) const { return bits.get(i); }
  uint64_t to_index() const;
  std::string str() const;

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

// An [[n,k]] stabilizer code: n-k independent commuting generators plus a
// pinned choice of logical operators.
struct StabilizerCode {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliOperator> generators;
  std::vector<PauliOperator> logical_x;
  std::vector<PauliOperator> logical_z;

  // Generators as rows of an (n-k) x 2n matrix [x | z].
  BinaryMatrix symplectic_rows() const;

  // Text form: header line, then [generators]/[logical_x]/[logical_z]
  // sections with one operator per line.
  std::string serialize() const;
  static StabilizerCode deserialize(std::string_view text);
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
  std::string str() const;
};

// Lists every violated code invariant; an empty report means valid.
ValidationReport validate_code(const StabilizerCode& code);

// Commutation pattern of an error against the generators.
Syndrome syndrome(const StabilizerCode& code, const PauliOperator& error);

// True iff p's bit pattern lies in the GF(2) span of the generators
// (phases ignored).
bool in_stabilizer_span(const StabilizerCode& code, const PauliOperator& p);

// True iff p equals an actual product of generators, phase included.
bool in_stabilizer_group(const StabilizerCode& code, const PauliOperator& p);

enum class PairClass {
  Detected,      // E_a^dag E_b anticommutes with some generator
  InStabilizer,  // E_a^dag E_b is a generator product (phase +1)
  Violation,     // E_a^dag E_b in N(S) \ S: indistinguishable logical action
};

struct QeccCheckResult {
  // classification[a][b] for error pair (errors[a], errors[b]).
  std::vector<std::vector<PairClass>> classification;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  bool passes() const { return violations.empty(); }
};

// Classifies E_a^dag E_b for every error pair per the stabilizer-form QECC
// conditions. The code corrects the error set iff no pair is a violation.
QeccCheckResult stabilizer_qecc_check(const StabilizerCode& code,
                                      const std::vector<PauliOperator>& errors);

// Minimum weight of an element of N(S) \ S, by exhaustive enumeration in
// increasing weight. Returns nullopt if every element up to max_weight is
// detected or in the stabilizer ("greater than max_weight").
std::optional<std::size_t> distance(const StabilizerCode& code, std::size_t max_weight);

// Built-in codes: bitflip3, phaseflip3, shor9, steane7, five_qubit.
StabilizerCode builtin_code(const std::string& name);
const std::vector<std::string>& builtin_code_names();

// Cached distance for the built-ins (verified by tests against distance()).
std::size_t builtin_distance(const std::string& name);

// Enumerates every Pauli bit pattern of weight exactly w on n qubits
// (phase 0, letters I/X/Y/Z). Callback may return false to stop early.
void for_each_pauli_of_weight(std::size_t n, std::size_t w,
                              const std::function<bool(const PauliOperator&)>& fn);

// All patterns with 1 <= weight <= max_weight, ascending weight.
std::vector<PauliOperator> paulis_up_to_weight(std::size_t n, std::size_t max_weight,
                                               bool include_identity = false);

}  // namespace qec
