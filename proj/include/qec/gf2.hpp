#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qec/bitvec.hpp"

namespace qec {

// Dense matrix over GF(2), rows stored as packed bit vectors.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BinaryMatrix from_rows(const std::vector<BitVec>& rows);

  // One row per line of 0/1 characters.
  static BinaryMatrix parse(std::string_view text);
  std::string str() const;

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }

  void append_row(const BitVec& r);

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

namespace gf2 {

// Rank by Gaussian elimination.
std::size_t rank(const BinaryMatrix& m);

// Rows spanning {v : m v = 0}; row count = cols - rank.
BinaryMatrix kernel_basis(const BinaryMatrix& m);

// m * word over GF(2). Throws on length mismatch.
BitVec classical_syndrome(const BinaryMatrix& m, const BitVec& word);

// True iff every row of c2_gens is orthogonal to every row of c1_checks,
// i.e. the code generated by c2_gens lies in the dual of the code generated
// by the check rows. This is the CSS commutation prerequisite.
bool dual_contains(const BinaryMatrix& c1_checks, const BinaryMatrix& c2_gens);

// Reduced row echelon form (canonical for span comparison).
BinaryMatrix rref(const BinaryMatrix& m);

// Indices of rows that are independent of all earlier rows.
std::vector<std::size_t> independent_row_indices(const BinaryMatrix& m);

// Coefficients c with c^T * rows(m) = target, if target is in the row span.
std::optional<BitVec> solve_row_combination(const BinaryMatrix& m, const BitVec& target);

// True iff target is in the row span of m.
bool in_row_span(const BinaryMatrix& m, const BitVec& target);

// Inverse of a square invertible matrix. Throws if singular.
BinaryMatrix inverse(const BinaryMatrix& m);

}  // namespace gf2
}  // namespace qec
