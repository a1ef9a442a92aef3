#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qec/pauli.hpp"
#include "qec/rng.hpp"
#include "qec/stabilizer_code.hpp"

namespace qec {

enum class StepKind { PrepZ, PrepPlus, Hadamard, Cnot, MeasZ, MeasX };

struct GadgetStep {
  StepKind kind;
  std::size_t q0;      // acted qubit; CNOT control
  std::size_t q1 = 0;  // CNOT target

  std::string str() const;
};

// A syndrome-extraction circuit over data qubits 0..num_data-1 and ancilla
// qubits num_data..num_data+num_ancilla-1. Classical post-processing: the
// syndrome bit is the XOR of the syndrome measurement outcomes; the run is
// rejected if any verification measurement reads 1.
struct CliffordGadget {
  std::string description;
  std::size_t num_data = 0;
  std::size_t num_ancilla = 0;
  std::vector<GadgetStep> steps;
  std::vector<std::size_t> syndrome_meas;
  std::vector<std::size_t> verify_meas;

  std::size_t num_qubits() const { return num_data + num_ancilla; }
};

// Checks the structural invariants: PREP first touch, MEAS last touch,
// measurement indices valid. Throws on violation.
void validate_gadget(const CliffordGadget& g);

struct FaultOutcome {
  int location;                       // step index injected after; -1 = input error
  PauliOperator injected;             // on all gadget qubits
  PauliOperator residual_data_error;  // frame restricted to data qubits
  bool syndrome_bit_flipped = false;
  bool rejected = false;
};

// Heisenberg-picture conjugation of a Pauli frame, phase exact.
PauliOperator conjugate_through_hadamard(const PauliOperator& p, std::size_t q);
PauliOperator conjugate_through_cnot(const PauliOperator& p, std::size_t control,
                                     std::size_t target);

// Pushes the fault through every step after `location` assuming those steps
// are ideal, recording measurement-bit flips and the classical verdicts.
FaultOutcome propagate(const CliffordGadget& g, int location, const PauliOperator& fault);

// Fig.-4/6 style circuit: one ancilla shared by all support qubits of the
// generator. Z-type generators use data-controlled CNOTs onto a |0> ancilla;
// X-type use a |+> ancilla controlling CNOTs onto the data.
CliffordGadget bare_syndrome_gadget(const StabilizerCode& code, std::size_t generator_index);

// Shor-style extraction: one ancilla qubit per support qubit, prepared
// through the verified construction (H, CNOT chain, two verification CNOTs
// onto a check qubit that must read 0). Z-type generators get the even-
// superposition ancilla (chain followed by a Hadamard layer) with data-
// controlled couplings; X-type keep the chain state and control the
// couplings. The syndrome bit is the parity of the ancilla outcomes.
CliffordGadget cat_syndrome_gadget(const StabilizerCode& code, std::size_t generator_index);

struct FaultSite {
  int location;
  PauliOperator fault;
};

// Every single-fault site: {X,Y,Z} after each step on its qubit(s), all 15
// two-qubit Paulis after a CNOT, and {X,Y,Z} on each data qubit idle in the
// step's time slice.
std::vector<FaultSite> enumerate_fault_sites(const CliffordGadget& g);

// Minimum weight of residual times any stabilizer group element.
std::size_t stabilizer_reduced_weight(const StabilizerCode& code,
                                      const PauliOperator& residual);

struct AuditEntry {
  int location;
  std::string step;
  std::string fault;
  std::size_t raw_weight = 0;
  std::size_t reduced_weight = 0;
  bool rejected = false;
  bool syndrome_bit_flipped = false;
};

struct AuditReport {
  std::vector<AuditEntry> worst_per_location;  // worst accepted fault at each location
  std::size_t max_reduced_weight = 0;          // over accepted runs
  bool ft_for_t1 = false;                      // max reduced weight <= 1
  std::size_t fault_count = 0;
  std::size_t rejected_count = 0;
};

// Exhaustive single-fault audit, reduced modulo the code stabilizer.
AuditReport ft_audit(const CliffordGadget& g, const StabilizerCode& code);

struct RepeatTwiceResult {
  Syndrome syndrome;
  std::size_t attempts = 0;  // total syndrome draws
  bool cap_hit = false;
};

// Draws syndrome pairs, each bit independently flipped with probability q,
// until a pair agrees; that value is accepted. Draw count capped at 100.
RepeatTwiceResult repeat_twice(const std::function<Syndrome()>& sampler, double q,
                               RngStream& rng);

}  // namespace qec
