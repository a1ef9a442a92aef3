#include "qec/css.hpp"

#include <stdexcept>
#include <string>

namespace qec {

namespace {

PauliOperator row_to_pauli(const BitVec& row, char letter) {
  std::size_t n = row.size();
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (!row.get(q)) continue;
    if (letter == 'X') {
      x.set(q, true);
    } else {
      z.set(q, true);
    }
  }
  return PauliOperator(std::move(x), std::move(z), 0);
}

// Rows of `space` that are independent of each other modulo the row span of
// `modulus`; these represent a basis of span(space) / span(modulus).
std::vector<BitVec> quotient_basis(const BinaryMatrix& space, const BinaryMatrix& modulus,
                                   std::size_t want) {
  std::vector<BitVec> reps;
  BinaryMatrix accum = modulus;
  for (std::size_t r = 0; r < space.rows() && reps.size() < want; ++r) {
    if (gf2::in_row_span(accum, space.row(r))) continue;
    reps.push_back(space.row(r));
    accum.append_row(space.row(r));
  }
  return reps;
}

}  // namespace

BinaryMatrix hamming_matrix() {
  return BinaryMatrix::parse(
      "0001111\n"
      "0110011\n"
      "1010101\n");
}

StabilizerCode css_code(const BinaryMatrix& h_z, const BinaryMatrix& h_x,
                        const std::string& name) {
  if (h_z.rows() > 0 && h_x.rows() > 0 && h_z.cols() != h_x.cols()) {
    throw std::invalid_argument("css_code: h_z and h_x column counts differ");
  }
  std::size_t n = h_z.rows() > 0 ? h_z.cols() : h_x.cols();
  if (n == 0) throw std::invalid_argument("css_code: no columns");

  for (std::size_t i = 0; i < h_x.rows(); ++i) {
    for (std::size_t j = 0; j < h_z.rows(); ++j) {
      if (BitVec::and_popcount(h_x.row(i), h_z.row(j)) % 2 != 0) {
        throw std::invalid_argument("css_code: h_x row " + std::to_string(i) +
                                    " is not orthogonal to h_z row " + std::to_string(j));
      }
    }
  }

  StabilizerCode code;
  code.name = name;
  code.n = n;

  // Drop dependent rows, preserving printed order.
  BinaryMatrix z_kept(0, n), x_kept(0, n);
  for (std::size_t r : gf2::independent_row_indices(h_z)) z_kept.append_row(h_z.row(r));
  for (std::size_t r : gf2::independent_row_indices(h_x)) x_kept.append_row(h_x.row(r));

  std::size_t rank_z = z_kept.rows();
  std::size_t rank_x = x_kept.rows();
  if (rank_z + rank_x > n) {
    throw std::invalid_argument("css_code: check ranks exceed qubit count");
  }
  code.k = n - rank_z - rank_x;

  for (std::size_t r = 0; r < z_kept.rows(); ++r) {
    code.generators.push_back(row_to_pauli(z_kept.row(r), 'Z'));
  }
  for (std::size_t r = 0; r < x_kept.rows(); ++r) {
    code.generators.push_back(row_to_pauli(x_kept.row(r), 'X'));
  }

  // Logical X supports live in ker(h_z) modulo rowspace(h_x); logical Z
  // supports in ker(h_x) modulo rowspace(h_z). The GF(2) pairing between the
  // two quotients is nondegenerate, so a change of basis makes it identity.
  if (code.k > 0) {
    BinaryMatrix ker_z = gf2::kernel_basis(z_kept);
    BinaryMatrix ker_x = gf2::kernel_basis(x_kept);

    std::vector<BitVec> u = quotient_basis(ker_z, x_kept, code.k);
    std::vector<BitVec> v = quotient_basis(ker_x, z_kept, code.k);
    if (u.size() != code.k || v.size() != code.k) {
      throw std::runtime_error("css_code: failed to complete logical operators");
    }

    BinaryMatrix pairing(code.k, code.k);
    for (std::size_t i = 0; i < code.k; ++i) {
      for (std::size_t j = 0; j < code.k; ++j) {
        pairing.set(i, j, BitVec::and_popcount(u[i], v[j]) % 2 != 0);
      }
    }
    BinaryMatrix pinv = gf2::inverse(pairing);
    // w_j = sum_l pinv[l][j] * v_l gives u_i . w_j = delta_ij.
    std::vector<BitVec> w(code.k, BitVec(n));
    for (std::size_t j = 0; j < code.k; ++j) {
      for (std::size_t l = 0; l < code.k; ++l) {
        if (pinv.get(l, j)) w[j].xor_with(v[l]);
      }
    }
    for (std::size_t i = 0; i < code.k; ++i) {
      code.logical_x.push_back(row_to_pauli(u[i], 'X'));
      code.logical_z.push_back(row_to_pauli(w[i], 'Z'));
    }
  }
  return code;
}

}  // namespace qec
