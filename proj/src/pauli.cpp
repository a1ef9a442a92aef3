#include "qec/pauli.hpp"

#include <stdexcept>

namespace qec {

PauliOperator::PauliOperator(BitVec x, BitVec z, int phase_exp)
    : x_(std::move(x)), z_(std::move(z)), phase_(((phase_exp % 4) + 4) % 4) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("PauliOperator: x/z bit vectors differ in length");
  }
}

PauliOperator PauliOperator::identity(std::size_t n) {
  return PauliOperator(BitVec(n), BitVec(n), 0);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char letter) {
  if (q >= n) {
    throw std::invalid_argument("PauliOperator::single: qubit index out of range");
  }
  BitVec x(n), z(n);
  int phase = 0;
  switch (letter) {
    case 'I':
      break;
    case 'X':
      x.set(q, true);
      break;
    case 'Z':
      z.set(q, true);
      break;
    case 'Y':
      x.set(q, true);
      z.set(q, true);
      phase = 1;  // Y = i*XZ
      break;
    default:
      throw std::invalid_argument("PauliOperator::single: unknown letter");
  }
  return PauliOperator(std::move(x), std::move(z), phase);
}

PauliOperator PauliOperator::parse(std::string_view label) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    bool neg = label[pos] == '-';
    ++pos;
    if (pos < label.size() && label[pos] == 'i') {
      phase = neg ? 3 : 1;
      ++pos;
    } else {
      phase = neg ? 2 : 0;
    }
  }
  std::size_t n = label.size() - pos;
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    switch (label[pos + q]) {
      case 'I':
        break;
      case 'X':
        x.set(q, true);
        break;
      case 'Z':
        z.set(q, true);
        break;
      case 'Y':
        x.set(q, true);
        z.set(q, true);
        phase += 1;
        break;
      default:
        throw std::invalid_argument("invalid Pauli label character at position " +
                                    std::to_string(pos + q));
    }
  }
  return PauliOperator(std::move(x), std::move(z), phase);
}

char PauliOperator::letter(std::size_t q) const {
  bool xb = x_.get(q), zb = z_.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

int PauliOperator::effective_phase() const {
  // XZ = -iY on every Y qubit, so extracting letters costs i^3 per Y.
  std::size_t y_count = BitVec::and_popcount(x_, z_);
  return static_cast<int>((phase_ + 3 * y_count) % 4);
}

std::string PauliOperator::str() const {
  static const char* prefixes[4] = {"", "+i", "-", "-i"};
  std::string out = prefixes[effective_phase()];
  out.reserve(out.size() + n());
  for (std::size_t q = 0; q < n(); ++q) out.push_back(letter(q));
  return out;
}

std::size_t PauliOperator::weight() const {
  return BitVec::or_popcount(x_, z_);
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("Pauli product: operators act on different qubit counts");
  }
  // Moving b's X factors left past a's Z factors gives (-1)^|z_a & x_b|.
  int phase = a.phase_ + b.phase_ +
              2 * static_cast<int>(BitVec::and_popcount(a.z_, b.x_) % 2);
  BitVec x = a.x_;
  x.xor_with(b.x_);
  BitVec z = a.z_;
  z.xor_with(b.z_);
  return PauliOperator(std::move(x), std::move(z), phase);
}

PauliOperator PauliOperator::dagger() const {
  // (i^p X Z)^dagger = i^{-p} Z X = i^{-p} (-1)^{|x&z|} X Z.
  int phase = -phase_ + 2 * static_cast<int>(BitVec::and_popcount(x_, z_) % 2);
  return PauliOperator(x_, z_, phase);
}

PauliOperator PauliOperator::tensor(const PauliOperator& a, const PauliOperator& b) {
  std::size_t n = a.n() + b.n();
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < a.n(); ++q) {
    x.set(q, a.x(q));
    z.set(q, a.z(q));
  }
  for (std::size_t q = 0; q < b.n(); ++q) {
    x.set(a.n() + q, b.x(q));
    z.set(a.n() + q, b.z(q));
  }
  return PauliOperator(std::move(x), std::move(z), a.phase_ + b.phase_);
}

bool PauliOperator::commute(const PauliOperator& a, const PauliOperator& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("Pauli commutation: operators act on different qubit counts");
  }
  std::size_t s = BitVec::and_popcount(a.x_, b.z_) + BitVec::and_popcount(a.z_, b.x_);
  return (s % 2) == 0;
}

}  // namespace qec
