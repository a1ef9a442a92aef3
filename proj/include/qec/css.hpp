#pragma once

#include "qec/gf2.hpp"
#include "qec/stabilizer_code.hpp"

namespace qec {

// CSS construction. Z-type generators come from the rows of h_z (they detect
// bit flips), X-type generators from the rows of h_x (phase flips). Rows that
// are GF(2)-dependent on earlier rows of the same matrix are dropped, so the
// surviving generators are independent and k = n - rank(h_z) - rank(h_x).
// Logical operators are completed internally and the result passes
// validate_code. Throws if some h_x row fails to commute with some h_z row.
StabilizerCode css_code(const BinaryMatrix& h_z, const BinaryMatrix& h_x,
                        const std::string& name = "css");

// The parity check matrix of the [7,4] Hamming code, rows in printed order.
BinaryMatrix hamming_matrix();

}  // namespace qec
