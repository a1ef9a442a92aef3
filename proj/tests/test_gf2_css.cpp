#include <doctest.h>

#include <stdexcept>

#include "qec/css.hpp"
#include "qec/gf2.hpp"
#include "qec/rng.hpp"
#include "qec/stabilizer_code.hpp"

using qec::BinaryMatrix;
using qec::BitVec;

namespace {

BitVec unit_vector(std::size_t n, std::size_t pos) {
  BitVec v(n);
  v.set(pos, true);
  return v;
}

}  // namespace

TEST_CASE("matrix text round trip") {
  BinaryMatrix m = BinaryMatrix::parse("101\n010\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.get(0, 0));
  CHECK_FALSE(m.get(1, 0));
  CHECK(BinaryMatrix::parse(m.str()) == m);
  CHECK_THROWS_AS(BinaryMatrix::parse("10\n111\n"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix::parse("102\n"), std::invalid_argument);
}

TEST_CASE("rank") {
  CHECK(qec::gf2::rank(qec::hamming_matrix()) == 3);
  CHECK(qec::gf2::rank(BinaryMatrix(3, 5)) == 0);
  BinaryMatrix id(4, 4);
  for (int i = 0; i < 4; ++i) id.set(i, i, true);
  CHECK(qec::gf2::rank(id) == 4);
}

TEST_CASE("kernel basis") {
  BinaryMatrix h = qec::hamming_matrix();
  BinaryMatrix k = qec::gf2::kernel_basis(h);
  CHECK(k.rows() == 4);  // 16 codewords
  for (std::size_t r = 0; r < k.rows(); ++r) {
    CHECK_FALSE(qec::gf2::classical_syndrome(h, k.row(r)).any());
  }
  CHECK(qec::gf2::rank(k) == 4);

  BinaryMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, true);
  CHECK(qec::gf2::kernel_basis(id).rows() == 0);

  BinaryMatrix parity = BinaryMatrix::parse("11\n");
  BinaryMatrix pk = qec::gf2::kernel_basis(parity);
  REQUIRE(pk.rows() == 1);
  CHECK(pk.get(0, 0));
  CHECK(pk.get(0, 1));
}

TEST_CASE("rank plus kernel rows equals columns") {
  qec::RngStream rng(23, 0);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t rows = 1 + rng.next_below(6);
    std::size_t cols = 1 + rng.next_below(10);
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.next_below(2));
    }
    CHECK(qec::gf2::rank(m) + qec::gf2::kernel_basis(m).rows() == cols);
  }
}

TEST_CASE("classical syndromes of the Hamming code") {
  BinaryMatrix h = qec::hamming_matrix();
  // Any codeword maps to zero.
  BinaryMatrix k = qec::gf2::kernel_basis(h);
  BitVec word = k.row(0);
  word.xor_with(k.row(2));
  CHECK_FALSE(qec::gf2::classical_syndrome(h, word).any());

  // e4 (1-based position 4) maps to column 4 = (1,0,0)^T.
  BitVec e4 = unit_vector(7, 3);
  BitVec s = qec::gf2::classical_syndrome(h, e4);
  CHECK(s.get(0));
  CHECK_FALSE(s.get(1));
  CHECK_FALSE(s.get(2));

  CHECK_FALSE(qec::gf2::classical_syndrome(h, BitVec(7)).any());
  CHECK_THROWS_AS(qec::gf2::classical_syndrome(h, BitVec(6)), std::invalid_argument);
}

TEST_CASE("all seven single-bit Hamming syndromes are distinct and nonzero") {
  BinaryMatrix h = qec::hamming_matrix();
  std::vector<uint64_t> seen;
  for (std::size_t i = 0; i < 7; ++i) {
    BitVec s = qec::gf2::classical_syndrome(h, unit_vector(7, i));
    uint64_t v = (s.get(0) ? 1 : 0) | (s.get(1) ? 2 : 0) | (s.get(2) ? 4 : 0);
    CHECK(v != 0);
    for (uint64_t prev : seen) CHECK(prev != v);
    seen.push_back(v);
  }
}

TEST_CASE("dual containment") {
  BinaryMatrix h = qec::hamming_matrix();
  // The Hamming code contains its dual: check rows against a full generator
  // matrix of the code (kernel basis) and against themselves.
  CHECK(qec::gf2::dual_contains(h, h));
  CHECK(qec::gf2::dual_contains(h, qec::gf2::kernel_basis(h)));

  BinaryMatrix repetition = BinaryMatrix::parse("111\n");
  BinaryMatrix parity = BinaryMatrix::parse("110\n011\n");
  CHECK(qec::gf2::dual_contains(repetition, parity));

  BinaryMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, true);
  CHECK_FALSE(qec::gf2::dual_contains(id, id));
  CHECK_THROWS_AS(qec::gf2::dual_contains(id, h), std::invalid_argument);
}

TEST_CASE("solve and span membership") {
  BinaryMatrix h = qec::hamming_matrix();
  BitVec target = h.row(0);
  target.xor_with(h.row(2));
  auto coeffs = qec::gf2::solve_row_combination(h, target);
  REQUIRE(coeffs.has_value());
  CHECK(coeffs->get(0));
  CHECK_FALSE(coeffs->get(1));
  CHECK(coeffs->get(2));
  CHECK(qec::gf2::in_row_span(h, target));
  CHECK_FALSE(qec::gf2::in_row_span(h, unit_vector(7, 0)));
}

TEST_CASE("inverse") {
  BinaryMatrix m = BinaryMatrix::parse("11\n01\n");
  BinaryMatrix inv = qec::gf2::inverse(m);
  // m * inv = I
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      int sum = 0;
      for (std::size_t k = 0; k < 2; ++k) sum ^= (m.get(r, k) && inv.get(k, c)) ? 1 : 0;
      CHECK(sum == (r == c ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(qec::gf2::inverse(BinaryMatrix::parse("11\n11\n")),
                  std::invalid_argument);
}

TEST_CASE("css of Hamming with itself spans the Steane generators") {
  qec::StabilizerCode steane_like = qec::css_code(qec::hamming_matrix(),
                                                  qec::hamming_matrix(), "css-steane");
  CHECK(steane_like.n == 7);
  CHECK(steane_like.k == 1);
  CHECK(qec::validate_code(steane_like).valid());

  qec::StabilizerCode steane = qec::builtin_code("steane7");
  CHECK(qec::gf2::rref(steane_like.symplectic_rows()) ==
        qec::gf2::rref(steane.symplectic_rows()));
}

TEST_CASE("css of the repetition checks reproduces the bit-flip code") {
  BinaryMatrix h_z = BinaryMatrix::parse("110\n011\n");
  qec::StabilizerCode code = qec::css_code(h_z, BinaryMatrix(0, 3), "css-bitflip");
  CHECK(code.k == 1);
  REQUIRE(code.generators.size() == 2);
  CHECK(code.generators[0].str() == "ZZI");
  CHECK(code.generators[1].str() == "IZZ");
  CHECK(qec::validate_code(code).valid());
}

TEST_CASE("css rejects non-orthogonal inputs") {
  BinaryMatrix h_z = BinaryMatrix::parse("110\n");
  BinaryMatrix h_x = BinaryMatrix::parse("100\n");
  CHECK_THROWS_AS(qec::css_code(h_z, h_x), std::invalid_argument);
}

TEST_CASE("css with full-rank checks encodes nothing") {
  BinaryMatrix h_z = BinaryMatrix::parse("10\n01\n");
  qec::StabilizerCode code = qec::css_code(h_z, BinaryMatrix(0, 2));
  CHECK(code.k == 0);
  CHECK(code.logical_x.empty());
  CHECK(qec::validate_code(code).valid());
}

TEST_CASE("css drops dependent rows in printed order") {
  // Three dependent parity rows; the third is the sum of the first two.
  BinaryMatrix h_z = BinaryMatrix::parse("110\n011\n101\n");
  qec::StabilizerCode code = qec::css_code(h_z, BinaryMatrix(0, 3));
  REQUIRE(code.generators.size() == 2);
  CHECK(code.generators[0].str() == "ZZI");
  CHECK(code.generators[1].str() == "IZZ");
  CHECK(qec::validate_code(code).valid());
}

TEST_CASE("css X-sector syndrome of a single Z error matches the classical syndrome") {
  qec::StabilizerCode code = qec::css_code(qec::hamming_matrix(), qec::hamming_matrix());
  BinaryMatrix h = qec::hamming_matrix();
  for (std::size_t q = 0; q < 7; ++q) {
    qec::PauliOperator err = qec::PauliOperator::single(7, q, 'Z');
    qec::Syndrome s = qec::syndrome(code, err);
    BitVec classical = qec::gf2::classical_syndrome(h, unit_vector(7, q));
    // X-type generators occupy table slots after the 3 Z-type rows.
    for (std::size_t r = 0; r < 3; ++r) {
      CHECK(s.get(3 + r) == classical.get(r));
    }
  }
}
