#include "qec/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace qec {

std::string GadgetStep::str() const {
  switch (kind) {
    case StepKind::PrepZ:
      return "PREP_0(" + std::to_string(q0) + ")";
    case StepKind::PrepPlus:
      return "PREP_PLUS(" + std::to_string(q0) + ")";
    case StepKind::Hadamard:
      return "H(" + std::to_string(q0) + ")";
    case StepKind::Cnot:
      return "CNOT(" + std::to_string(q0) + "," + std::to_string(q1) + ")";
    case StepKind::MeasZ:
      return "MEAS_Z(" + std::to_string(q0) + ")";
    case StepKind::MeasX:
      return "MEAS_X(" + std::to_string(q0) + ")";
  }
  return "?";
}

namespace {

bool step_touches(const GadgetStep& s, std::size_t q) {
  if (s.q0 == q) return true;
  return s.kind == StepKind::Cnot && s.q1 == q;
}

bool is_meas(StepKind k) { return k == StepKind::MeasZ || k == StepKind::MeasX; }
bool is_prep(StepKind k) { return k == StepKind::PrepZ || k == StepKind::PrepPlus; }

}  // namespace

void validate_gadget(const CliffordGadget& g) {
  std::size_t nq = g.num_qubits();
  std::vector<bool> touched(nq, false), measured(nq, false);
  for (const auto& s : g.steps) {
    std::size_t qs[2] = {s.q0, s.kind == StepKind::Cnot ? s.q1 : s.q0};
    for (std::size_t q : {qs[0], qs[1]}) {
      if (q >= nq) throw std::invalid_argument("gadget step touches unknown qubit");
      if (measured[q]) throw std::invalid_argument("gadget touches a qubit after MEAS");
    }
    if (is_prep(s.kind) && touched[s.q0]) {
      throw std::invalid_argument("gadget PREP is not the first touch of its qubit");
    }
    touched[qs[0]] = touched[qs[1]] = true;
    if (is_meas(s.kind)) measured[s.q0] = true;
  }
  for (std::size_t idx : g.syndrome_meas) {
    if (idx >= g.steps.size() || !is_meas(g.steps[idx].kind)) {
      throw std::invalid_argument("syndrome_meas entry is not a measurement step");
    }
  }
  for (std::size_t idx : g.verify_meas) {
    if (idx >= g.steps.size() || !is_meas(g.steps[idx].kind)) {
      throw std::invalid_argument("verify_meas entry is not a measurement step");
    }
  }
}

PauliOperator conjugate_through_hadamard(const PauliOperator& p, std::size_t q) {
  BitVec x = p.x_bits(), z = p.z_bits();
  int phase = p.phase_exp();
  bool xb = x.get(q), zb = z.get(q);
  if (xb && zb) phase += 2;  // H Y H = -Y
  x.set(q, zb);
  z.set(q, xb);
  return PauliOperator(std::move(x), std::move(z), phase);
}

PauliOperator conjugate_through_cnot(const PauliOperator& p, std::size_t control,
                                     std::size_t target) {
  // X_c -> X_c X_t and Z_t -> Z_c Z_t; in the XZ normal form no sign appears.
  BitVec x = p.x_bits(), z = p.z_bits();
  if (x.get(control)) x.flip(target);
  if (z.get(target)) z.flip(control);
  return PauliOperator(std::move(x), std::move(z), p.phase_exp());
}

FaultOutcome propagate(const CliffordGadget& g, int location, const PauliOperator& fault) {
  if (fault.n() != g.num_qubits()) {
    throw std::invalid_argument("propagate: fault must act on all gadget qubits");
  }
  if (location < -1 || location >= static_cast<int>(g.steps.size())) {
    throw std::invalid_argument("propagate: invalid fault location");
  }
  BitVec x = fault.x_bits(), z = fault.z_bits();
  int phase = fault.phase_exp();
  std::vector<bool> meas_flipped(g.steps.size(), false);

  for (std::size_t s = static_cast<std::size_t>(location + 1); s < g.steps.size(); ++s) {
    const GadgetStep& step = g.steps[s];
    switch (step.kind) {
      case StepKind::PrepZ:
      case StepKind::PrepPlus:
        x.set(step.q0, false);
        z.set(step.q0, false);
        break;
      case StepKind::Hadamard: {
        bool xb = x.get(step.q0), zb = z.get(step.q0);
        if (xb && zb) phase += 2;
        x.set(step.q0, zb);
        z.set(step.q0, xb);
        break;
      }
      case StepKind::Cnot:
        if (x.get(step.q0)) x.flip(step.q1);
        if (z.get(step.q1)) z.flip(step.q0);
        break;
      case StepKind::MeasZ:
        meas_flipped[s] = x.get(step.q0);
        break;
      case StepKind::MeasX:
        meas_flipped[s] = z.get(step.q0);
        break;
    }
  }

  FaultOutcome out;
  out.location = location;
  out.injected = fault;
  BitVec dx(g.num_data), dz(g.num_data);
  for (std::size_t q = 0; q < g.num_data; ++q) {
    dx.set(q, x.get(q));
    dz.set(q, z.get(q));
  }
  out.residual_data_error = PauliOperator(std::move(dx), std::move(dz), phase);
  bool syndrome_flip = false;
  for (std::size_t idx : g.syndrome_meas) syndrome_flip ^= meas_flipped[idx];
  out.syndrome_bit_flipped = syndrome_flip;
  for (std::size_t idx : g.verify_meas) {
    if (meas_flipped[idx]) out.rejected = true;
  }
  return out;
}

namespace {

enum class GenType { ZType, XType };

GenType generator_type(const PauliOperator& gen) {
  bool has_x = false, has_z = false;
  for (std::size_t q = 0; q < gen.n(); ++q) {
    if (gen.x(q) && gen.z(q)) {
      throw std::invalid_argument("syndrome gadget: generator has a Y factor");
    }
    has_x |= gen.x(q);
    has_z |= gen.z(q);
  }
  if (has_x == has_z) {
    throw std::invalid_argument("syndrome gadget: generator must be pure Z-type or X-type");
  }
  return has_z ? GenType::ZType : GenType::XType;
}

std::vector<std::size_t> generator_support(const PauliOperator& gen) {
  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < gen.n(); ++q) {
    if (gen.x(q) || gen.z(q)) support.push_back(q);
  }
  return support;
}

const PauliOperator& checked_generator(const StabilizerCode& code, std::size_t index) {
  if (index >= code.generators.size()) {
    throw std::invalid_argument("syndrome gadget: generator index out of range");
  }
  return code.generators[index];
}

}  // namespace

CliffordGadget bare_syndrome_gadget(const StabilizerCode& code, std::size_t generator_index) {
  const PauliOperator& gen = checked_generator(code, generator_index);
  GenType type = generator_type(gen);
  std::vector<std::size_t> support = generator_support(gen);

  CliffordGadget g;
  g.description = "bare ancilla, generator " + gen.str() + " of " + code.name;
  g.num_data = code.n;
  g.num_ancilla = 1;
  std::size_t anc = code.n;

  if (type == GenType::ZType) {
    g.steps.push_back({StepKind::PrepZ, anc});
    for (std::size_t q : support) g.steps.push_back({StepKind::Cnot, q, anc});
    g.steps.push_back({StepKind::MeasZ, anc});
  } else {
    g.steps.push_back({StepKind::PrepPlus, anc});
    for (std::size_t q : support) g.steps.push_back({StepKind::Cnot, anc, q});
    g.steps.push_back({StepKind::MeasX, anc});
  }
  g.syndrome_meas = {g.steps.size() - 1};
  return g;
}

CliffordGadget cat_syndrome_gadget(const StabilizerCode& code, std::size_t generator_index) {
  const PauliOperator& gen = checked_generator(code, generator_index);
  GenType type = generator_type(gen);
  std::vector<std::size_t> support = generator_support(gen);
  std::size_t w = support.size();
  if (w < 2) {
    throw std::invalid_argument("cat gadget: generator weight must be at least 2");
  }

  CliffordGadget g;
  g.description = "verified cat ancilla, generator " + gen.str() + " of " + code.name;
  g.num_data = code.n;
  g.num_ancilla = w + 1;
  std::size_t cat0 = code.n;
  std::size_t verify = code.n + w;

  for (std::size_t i = 0; i <= w; ++i) g.steps.push_back({StepKind::PrepZ, code.n + i});
  g.steps.push_back({StepKind::Hadamard, cat0});
  for (std::size_t i = 0; i + 1 < w; ++i) {
    g.steps.push_back({StepKind::Cnot, cat0 + i, cat0 + i + 1});
  }
  // Both ends of the chain check into the verification qubit; a faulty
  // preparation that spreads bit flips shows up as outcome 1.
  g.steps.push_back({StepKind::Cnot, cat0, verify});
  g.steps.push_back({StepKind::Cnot, cat0 + w - 1, verify});

  if (type == GenType::ZType) {
    // Even-superposition ancilla; each data qubit controls one CNOT.
    for (std::size_t i = 0; i < w; ++i) g.steps.push_back({StepKind::Hadamard, cat0 + i});
    g.steps.push_back({StepKind::MeasZ, verify});
    g.verify_meas = {g.steps.size() - 1};
    for (std::size_t i = 0; i < w; ++i) {
      g.steps.push_back({StepKind::Cnot, support[i], cat0 + i});
    }
    for (std::size_t i = 0; i < w; ++i) {
      g.steps.push_back({StepKind::MeasZ, cat0 + i});
      g.syndrome_meas.push_back(g.steps.size() - 1);
    }
  } else {
    // Chain state stays; ancilla qubits control the couplings and are read
    // out transversally in the X basis.
    g.steps.push_back({StepKind::MeasZ, verify});
    g.verify_meas = {g.steps.size() - 1};
    for (std::size_t i = 0; i < w; ++i) {
      g.steps.push_back({StepKind::Cnot, cat0 + i, support[i]});
    }
    for (std::size_t i = 0; i < w; ++i) {
      g.steps.push_back({StepKind::MeasX, cat0 + i});
      g.syndrome_meas.push_back(g.steps.size() - 1);
    }
  }
  return g;
}

std::vector<FaultSite> enumerate_fault_sites(const CliffordGadget& g) {
  std::vector<FaultSite> sites;
  std::size_t nq = g.num_qubits();
  const char letters[3] = {'X', 'Y', 'Z'};

  for (std::size_t s = 0; s < g.steps.size(); ++s) {
    const GadgetStep& step = g.steps[s];
    if (step.kind == StepKind::Cnot) {
      // All 15 non-identity Paulis on the gate's qubit pair.
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (a == 0 && b == 0) continue;
          PauliOperator p = PauliOperator::identity(nq);
          if (a != 0) p = p * PauliOperator::single(nq, step.q0, letters[a - 1]);
          if (b != 0) p = p * PauliOperator::single(nq, step.q1, letters[b - 1]);
          sites.push_back({static_cast<int>(s), std::move(p)});
        }
      }
    } else {
      for (char l : letters) {
        sites.push_back({static_cast<int>(s), PauliOperator::single(nq, step.q0, l)});
      }
    }
    // Memory faults on data qubits idle in this time slice.
    for (std::size_t q = 0; q < g.num_data; ++q) {
      if (step_touches(step, q)) continue;
      for (char l : letters) {
        sites.push_back({static_cast<int>(s), PauliOperator::single(nq, q, l)});
      }
    }
  }
  return sites;
}

std::size_t stabilizer_reduced_weight(const StabilizerCode& code,
                                      const PauliOperator& residual) {
  std::size_t gcount = code.generators.size();
  if (gcount > 16) {
    throw std::invalid_argument("stabilizer_reduced_weight: too many generators");
  }
  // Gray-code walk over all stabilizer products.
  BitVec x = residual.x_bits(), z = residual.z_bits();
  std::size_t best = BitVec::or_popcount(x, z);
  uint32_t gray = 0;
  for (uint32_t i = 1; i < (uint32_t{1} << gcount); ++i) {
    uint32_t next_gray = i ^ (i >> 1);
    uint32_t changed = gray ^ next_gray;
    int bit = std::countr_zero(changed);
    gray = next_gray;
    x.xor_with(code.generators[bit].x_bits());
    z.xor_with(code.generators[bit].z_bits());
    best = std::min(best, BitVec::or_popcount(x, z));
  }
  return best;
}

AuditReport ft_audit(const CliffordGadget& g, const StabilizerCode& code) {
  if (g.num_data != code.n) {
    throw std::invalid_argument("ft_audit: gadget was not built for this code");
  }
  AuditReport report;
  std::vector<FaultSite> sites = enumerate_fault_sites(g);
  report.fault_count = sites.size();

  int current_location = -2;
  AuditEntry worst{};
  bool have_worst = false;
  auto flush = [&]() {
    if (have_worst) report.worst_per_location.push_back(worst);
    have_worst = false;
  };

  for (const auto& site : sites) {
    FaultOutcome out = propagate(g, site.location, site.fault);
    if (site.location != current_location) {
      flush();
      current_location = site.location;
    }
    if (out.rejected) {
      ++report.rejected_count;
      continue;
    }
    std::size_t reduced = stabilizer_reduced_weight(code, out.residual_data_error);
    report.max_reduced_weight = std::max(report.max_reduced_weight, reduced);
    if (!have_worst || reduced > worst.reduced_weight) {
      worst = AuditEntry{site.location,
                         g.steps[static_cast<std::size_t>(site.location)].str(),
                         site.fault.str(),
                         out.residual_data_error.weight(),
                         reduced,
                         false,
                         out.syndrome_bit_flipped};
      have_worst = true;
    }
  }
  flush();
  report.ft_for_t1 = report.max_reduced_weight <= 1;
  return report;
}

RepeatTwiceResult repeat_twice(const std::function<Syndrome()>& sampler, double q,
                               RngStream& rng) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("repeat_twice: q must lie in [0,1]");
  }
  constexpr std::size_t kMaxAttempts = 100;
  auto noisy = [&]() {
    Syndrome s = sampler();
    for (std::size_t i = 0; i < s.bits.size(); ++i) {
      if (rng.next_double() < q) s.bits.flip(i);
    }
    return s;
  };
  RepeatTwiceResult result;
  Syndrome last{};
  while (result.attempts + 2 <= kMaxAttempts) {
    Syndrome a = noisy();
    Syndrome b = noisy();
    result.attempts += 2;
    last = b;
    if (a == b) {
      result.syndrome = a;
      return result;
    }
  }
  result.syndrome = last;
  result.cap_hit = true;
  return result;
}

}  // namespace qec
