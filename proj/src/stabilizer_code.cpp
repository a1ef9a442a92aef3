#include "qec/stabilizer_code.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qec {

uint64_t Syndrome::to_index() const {
  if (bits.size() > 63) throw std::runtime_error("Syndrome::to_index: too many bits");
  uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits.get(i)) v |= uint64_t{1} << i;
  }
  return v;
}

std::string Syndrome::str() const {
  std::string s;
  s.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) s.push_back(bits.get(i) ? '1' : '0');
  return s;
}

BinaryMatrix StabilizerCode::symplectic_rows() const {
  BinaryMatrix m(generators.size(), 2 * n);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    for (std::size_t q = 0; q < n; ++q) {
      m.set(r, q, generators[r].x(q));
      m.set(r, n + q, generators[r].z(q));
    }
  }
  return m;
}

std::string StabilizerCode::serialize() const {
  std::ostringstream out;
  out << "n=" << n << " k=" << k << " name=" << name << "\n";
  out << "[generators]\n";
  for (const auto& g : generators) out << g.str() << "\n";
  out << "[logical_x]\n";
  for (const auto& l : logical_x) out << l.str() << "\n";
  out << "[logical_z]\n";
  for (const auto& l : logical_z) out << l.str() << "\n";
  return out.str();
}

StabilizerCode StabilizerCode::deserialize(std::string_view text) {
  StabilizerCode code;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("code file: empty input");
  {
    std::istringstream header(line);
    std::string tok;
    bool saw_n = false, saw_k = false;
    while (header >> tok) {
      if (tok.rfind("n=", 0) == 0) {
        code.n = std::stoul(tok.substr(2));
        saw_n = true;
      } else if (tok.rfind("k=", 0) == 0) {
        code.k = std::stoul(tok.substr(2));
        saw_k = true;
      } else if (tok.rfind("name=", 0) == 0) {
        code.name = tok.substr(5);
      } else {
        throw std::invalid_argument("code file: unexpected header token '" + tok + "'");
      }
    }
    if (!saw_n || !saw_k) throw std::invalid_argument("code file: header must set n= and k=");
  }
  std::vector<PauliOperator>* section = nullptr;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line == "[generators]") {
      section = &code.generators;
    } else if (line == "[logical_x]") {
      section = &code.logical_x;
    } else if (line == "[logical_z]") {
      section = &code.logical_z;
    } else if (line[0] == '[') {
      throw std::invalid_argument("code file: unknown section " + line);
    } else {
      if (!section) throw std::invalid_argument("code file: operator before any section");
      PauliOperator p = PauliOperator::parse(line);
      if (p.n() != code.n) {
        throw std::invalid_argument("code file: operator '" + line + "' is not on n=" +
                                    std::to_string(code.n) + " qubits");
      }
      section->push_back(std::move(p));
    }
  }
  return code;
}

std::string ValidationReport::str() const {
  if (violations.empty()) return "valid";
  std::string out;
  for (const auto& v : violations) {
    out += v;
    out += "\n";
  }
  return out;
}

ValidationReport validate_code(const StabilizerCode& code) {
  ValidationReport report;
  auto add = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  if (code.generators.size() != code.n - code.k) {
    add("generator count " + std::to_string(code.generators.size()) + " != n-k = " +
        std::to_string(code.n - code.k));
  }
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    if (code.generators[i].n() != code.n) {
      add("generator " + std::to_string(i) + " acts on wrong qubit count");
      return report;  // remaining checks would be ill-formed
    }
    if (code.generators[i].effective_phase() % 2 != 0) {
      add("generator " + std::to_string(i) + " has imaginary phase; no +1 eigenspace");
    }
  }
  for (const auto& l : code.logical_x) {
    if (l.n() != code.n) {
      add("logical operator acts on wrong qubit count");
      return report;
    }
  }
  for (const auto& l : code.logical_z) {
    if (l.n() != code.n) {
      add("logical operator acts on wrong qubit count");
      return report;
    }
  }

  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
      if (!commutes(code.generators[i], code.generators[j])) {
        add("generators " + std::to_string(i) + " and " + std::to_string(j) +
            " anticommute");
      }
    }
  }

  if (gf2::rank(code.symplectic_rows()) != code.generators.size()) {
    add("generators are dependent over GF(2): rank deficiency");
  }

  if (code.logical_x.size() != code.k || code.logical_z.size() != code.k) {
    add("logical operator counts must both equal k");
  } else {
    for (std::size_t i = 0; i < code.k; ++i) {
      for (std::size_t g = 0; g < code.generators.size(); ++g) {
        if (!commutes(code.logical_x[i], code.generators[g])) {
          add("logical_x[" + std::to_string(i) + "] anticommutes with generator " +
              std::to_string(g));
        }
        if (!commutes(code.logical_z[i], code.generators[g])) {
          add("logical_z[" + std::to_string(i) + "] anticommutes with generator " +
              std::to_string(g));
        }
      }
      for (std::size_t j = 0; j < code.k; ++j) {
        bool want_anticommute = (i == j);
        if (commutes(code.logical_x[i], code.logical_z[j]) == want_anticommute) {
          add("logical_x[" + std::to_string(i) + "] / logical_z[" + std::to_string(j) +
              "] commutation is wrong");
        }
      }
      if (in_stabilizer_span(code, code.logical_x[i])) {
        add("logical_x[" + std::to_string(i) + "] lies in the stabilizer span");
      }
      if (in_stabilizer_span(code, code.logical_z[i])) {
        add("logical_z[" + std::to_string(i) + "] lies in the stabilizer span");
      }
    }
  }
  return report;
}

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& error) {
  if (error.n() != code.n) {
    throw std::invalid_argument("syndrome: error acts on wrong qubit count");
  }
  Syndrome s{BitVec(code.generators.size())};
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    s.bits.set(i, !commutes(code.generators[i], error));
  }
  return s;
}

namespace {

BitVec symplectic_vector(const PauliOperator& p) {
  BitVec v(2 * p.n());
  for (std::size_t q = 0; q < p.n(); ++q) {
    v.set(q, p.x(q));
    v.set(p.n() + q, p.z(q));
  }
  return v;
}

}  // namespace

bool in_stabilizer_span(const StabilizerCode& code, const PauliOperator& p) {
  return gf2::in_row_span(code.symplectic_rows(), symplectic_vector(p));
}

bool in_stabilizer_group(const StabilizerCode& code, const PauliOperator& p) {
  auto coeffs = gf2::solve_row_combination(code.symplectic_rows(), symplectic_vector(p));
  if (!coeffs) return false;
  PauliOperator product = PauliOperator::identity(code.n);
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    if (coeffs->get(i)) product = product * code.generators[i];
  }
  return product == p;
}

QeccCheckResult stabilizer_qecc_check(const StabilizerCode& code,
                                      const std::vector<PauliOperator>& errors) {
  for (const auto& e : errors) {
    if (e.n() != code.n) {
      throw std::invalid_argument("stabilizer_qecc_check: error acts on wrong qubit count");
    }
  }
  QeccCheckResult result;
  result.classification.assign(errors.size(),
                               std::vector<PairClass>(errors.size(), PairClass::Detected));
  for (std::size_t a = 0; a < errors.size(); ++a) {
    for (std::size_t b = 0; b < errors.size(); ++b) {
      PauliOperator prod = errors[a].dagger() * errors[b];
      bool detected = false;
      for (const auto& g : code.generators) {
        if (!commutes(g, prod)) {
          detected = true;
          break;
        }
      }
      PairClass cls;
      if (detected) {
        cls = PairClass::Detected;
      } else if (in_stabilizer_group(code, prod)) {
        cls = PairClass::InStabilizer;
      } else {
        cls = PairClass::Violation;
        result.violations.emplace_back(a, b);
      }
      result.classification[a][b] = cls;
    }
  }
  return result;
}

void for_each_pauli_of_weight(std::size_t n, std::size_t w,
                              const std::function<bool(const PauliOperator&)>& fn) {
  if (w > n) return;
  if (w == 0) {
    fn(PauliOperator::identity(n));
    return;
  }
  std::vector<std::size_t> support(w);
  for (std::size_t i = 0; i < w; ++i) support[i] = i;
  std::vector<int> letters(w, 0);  // 0=X, 1=Y, 2=Z
  const char kLetters[3] = {'X', 'Y', 'Z'};

  while (true) {
    // All 3^w letter assignments on the current support.
    std::fill(letters.begin(), letters.end(), 0);
    while (true) {
      BitVec x(n), z(n);
      int phase = 0;
      for (std::size_t i = 0; i < w; ++i) {
        char c = kLetters[letters[i]];
        if (c != 'Z') x.set(support[i], true);
        if (c != 'X') z.set(support[i], true);
        if (c == 'Y') phase += 1;
      }
      if (!fn(PauliOperator(std::move(x), std::move(z), phase))) return;
      std::size_t d = 0;
      while (d < w && letters[d] == 2) {
        letters[d] = 0;
        ++d;
      }
      if (d == w) break;
      ++letters[d];
    }
    // Next support combination in lexicographic order.
    std::size_t i = w;
    while (i > 0) {
      --i;
      if (support[i] != i + n - w) break;
      if (i == 0) return;
    }
    ++support[i];
    for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
  }
}

std::vector<PauliOperator> paulis_up_to_weight(std::size_t n, std::size_t max_weight,
                                               bool include_identity) {
  std::vector<PauliOperator> out;
  if (include_identity) out.push_back(PauliOperator::identity(n));
  for (std::size_t w = 1; w <= max_weight; ++w) {
    for_each_pauli_of_weight(n, w, [&](const PauliOperator& p) {
      out.push_back(p);
      return true;
    });
  }
  return out;
}

std::optional<std::size_t> distance(const StabilizerCode& code, std::size_t max_weight) {
  BinaryMatrix gens = code.symplectic_rows();
  for (std::size_t w = 1; w <= max_weight; ++w) {
    bool found = false;
    for_each_pauli_of_weight(code.n, w, [&](const PauliOperator& p) {
      for (const auto& g : code.generators) {
        if (!commutes(g, p)) return true;  // detected, keep searching
      }
      if (gf2::in_row_span(gens, symplectic_vector(p))) return true;  // degenerate
      found = true;
      return false;
    });
    if (found) return w;
  }
  return std::nullopt;
}

namespace {

StabilizerCode make_code(std::string name, std::size_t n, std::size_t k,
                         std::vector<std::string> gens, std::vector<std::string> lx,
                         std::vector<std::string> lz) {
  StabilizerCode code;
  code.name = std::move(name);
  code.n = n;
  code.k = k;
  for (const auto& g : gens) code.generators.push_back(PauliOperator::parse(g));
  for (const auto& l : lx) code.logical_x.push_back(PauliOperator::parse(l));
  for (const auto& l : lz) code.logical_z.push_back(PauliOperator::parse(l));
  return code;
}

}  // namespace

const std::vector<std::string>& builtin_code_names() {
  static const std::vector<std::string> names = {"bitflip3", "phaseflip3", "shor9",
                                                 "steane7", "five_qubit"};
  return names;
}

StabilizerCode builtin_code(const std::string& name) {
  if (name == "bitflip3") {
    return make_code("bitflip3", 3, 1, {"ZZI", "IZZ"}, {"XXX"}, {"ZII"});
  }
  if (name == "phaseflip3") {
    return make_code("phaseflip3", 3, 1, {"XXI", "IXX"}, {"ZZZ"}, {"XII"});
  }
  if (name == "shor9") {
    // Z pairs detect bit flips; two independent weight-6 X generators detect
    // phase flips. Logical assignment is the one the encoded basis states
    // demand: Z1Z4Z7 exchanges them, X1X2X3 flips the relative sign.
    return make_code("shor9", 9, 1,
                     {"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI",
                      "IIIIIIIZZ", "XXXXXXIII", "XXXIIIXXX"},
                     {"ZIIZIIZII"}, {"XXXIIIIII"});
  }
  if (name == "steane7") {
    return make_code("steane7", 7, 1,
                     {"IIIZZZZ", "IZZIIZZ", "ZIZIZIZ", "IIIXXXX", "IXXIIXX", "XIXIXIX"},
                     {"XXXXXXX"}, {"ZZZZZZZ"});
  }
  if (name == "five_qubit") {
    return make_code("five_qubit", 5, 1, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, {"XXXXX"},
                     {"ZZZZZ"});
  }
  throw std::invalid_argument("unknown built-in code: " + name);
}

std::size_t builtin_distance(const std::string& name) {
  static const std::map<std::string, std::size_t> d = {
      {"bitflip3", 1}, {"phaseflip3", 1}, {"shor9", 3}, {"steane7", 3}, {"five_qubit", 3}};
  auto it = d.find(name);
  if (it == d.end()) throw std::invalid_argument("unknown built-in code: " + name);
  return it->second;
}

}  // namespace qec
