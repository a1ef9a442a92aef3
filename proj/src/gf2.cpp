#include "qec/gf2.hpp"

#include <stdexcept>

namespace qec {

BinaryMatrix BinaryMatrix::from_rows(const std::vector<BitVec>& rows) {
  BinaryMatrix m;
  if (rows.empty()) return m;
  m.cols_ = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) {
      throw std::invalid_argument("BinaryMatrix: ragged rows");
    }
  }
  m.rows_ = rows;
  return m;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::vector<BitVec> rows;
  std::size_t cols = 0;
  std::size_t line_start = 0;
  auto flush_line = [&](std::size_t end) {
    std::string_view line = text.substr(line_start, end - line_start);
    if (line.empty()) return;
    if (rows.empty()) {
      cols = line.size();
    } else if (line.size() != cols) {
      throw std::invalid_argument("BinaryMatrix::parse: ragged rows");
    }
    BitVec r(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] == '1') {
        r.set(c, true);
      } else if (line[c] != '0') {
        throw std::invalid_argument("BinaryMatrix::parse: expected 0/1");
      }
    }
    rows.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      flush_line(i);
      line_start = i + 1;
    }
  }
  flush_line(text.size());
  return from_rows(rows);
}

std::string BinaryMatrix::str() const {
  std::string out;
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(r.get(c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

void BinaryMatrix::append_row(const BitVec& r) {
  if (rows_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("BinaryMatrix: ragged rows");
  rows_.push_back(r);
}

namespace gf2 {
namespace {

// Forward elimination; returns pivot column per eliminated row.
std::vector<std::size_t> eliminate(std::vector<BitVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t done = 0;
  for (std::size_t col = 0; col < cols && done < rows.size(); ++col) {
    std::size_t pivot = done;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[done], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != done && rows[r].get(col)) rows[r].xor_with(rows[done]);
    }
    pivots.push_back(col);
    ++done;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const BinaryMatrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return eliminate(rows, m.cols()).size();
}

BinaryMatrix rref(const BinaryMatrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::size_t rk = eliminate(rows, m.cols()).size();
  rows.resize(rk, BitVec(m.cols()));
  return BinaryMatrix::from_rows(rows);
}

BinaryMatrix kernel_basis(const BinaryMatrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::vector<std::size_t> pivots = eliminate(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v(m.cols());
    v.set(free, true);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (rows[r].get(free)) v.set(pivots[r], true);
    }
    basis.push_back(std::move(v));
  }
  BinaryMatrix out(0, m.cols());
  for (auto& v : basis) out.append_row(v);
  return out;
}

BitVec classical_syndrome(const BinaryMatrix& m, const BitVec& word) {
  if (word.size() != m.cols()) {
    throw std::invalid_argument("classical_syndrome: word length does not match columns");
  }
  BitVec s(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s.set(r, BitVec::and_popcount(m.row(r), word) % 2 != 0);
  }
  return s;
}

bool dual_contains(const BinaryMatrix& c1_checks, const BinaryMatrix& c2_gens) {
  if (c1_checks.cols() != c2_gens.cols()) {
    throw std::invalid_argument("dual_contains: column counts differ");
  }
  for (std::size_t i = 0; i < c1_checks.rows(); ++i) {
    for (std::size_t j = 0; j < c2_gens.rows(); ++j) {
      if (BitVec::and_popcount(c1_checks.row(i), c2_gens.row(j)) % 2 != 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> independent_row_indices(const BinaryMatrix& m) {
  std::vector<std::size_t> kept;
  std::vector<BitVec> reduced;
  std::vector<std::size_t> pivot_col;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVec v = m.row(r);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (v.get(pivot_col[k])) v.xor_with(reduced[k]);
    }
    std::size_t col = 0;
    while (col < m.cols() && !v.get(col)) ++col;
    if (col == m.cols()) continue;  // dependent
    kept.push_back(r);
    reduced.push_back(std::move(v));
    pivot_col.push_back(col);
  }
  return kept;
}

std::optional<BitVec> solve_row_combination(const BinaryMatrix& m, const BitVec& target) {
  if (target.size() != m.cols()) {
    throw std::invalid_argument("solve_row_combination: length mismatch");
  }
  // Augment each row with its coefficient indicator and eliminate.
  std::size_t nrows = m.rows();
  std::vector<BitVec> aug;
  aug.reserve(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    BitVec v(m.cols() + nrows);
    for (std::size_t c = 0; c < m.cols(); ++c) v.set(c, m.get(r, c));
    v.set(m.cols() + r, true);
    aug.push_back(std::move(v));
  }
  BitVec t(m.cols() + nrows);
  for (std::size_t c = 0; c < target.size(); ++c) t.set(c, target.get(c));

  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> used;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    BitVec v = aug[r];
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (v.get(pivot_col[k])) v.xor_with(aug[used[k]]);
    }
    std::size_t col = 0;
    while (col < m.cols() && !v.get(col)) ++col;
    if (col == m.cols()) continue;
    aug[r] = std::move(v);
    used.push_back(r);
    pivot_col.push_back(col);
  }
  for (std::size_t k = 0; k < used.size(); ++k) {
    if (t.get(pivot_col[k])) t.xor_with(aug[used[k]]);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (t.get(c)) return std::nullopt;  // not in span
  }
  BitVec coeffs(nrows);
  for (std::size_t r = 0; r < nrows; ++r) coeffs.set(r, t.get(m.cols() + r));
  return coeffs;
}

bool in_row_span(const BinaryMatrix& m, const BitVec& target) {
  return solve_row_combination(m, target).has_value();
}

BinaryMatrix inverse(const BinaryMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = m.rows();
  std::vector<BitVec> aug;
  aug.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    BitVec v(2 * n);
    for (std::size_t c = 0; c < n; ++c) v.set(c, m.get(r, c));
    v.set(n + r, true);
    aug.push_back(std::move(v));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !aug[pivot].get(col)) ++pivot;
    if (pivot == n) throw std::invalid_argument("inverse: matrix is singular");
    std::swap(aug[col], aug[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && aug[r].get(col)) aug[r].xor_with(aug[col]);
    }
  }
  BinaryMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, aug[r].get(n + c));
  }
  return out;
}

}  // namespace gf2
}  // namespace qec
