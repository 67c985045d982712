#pragma once

#include "k3lattice/matrix.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3lattice {

// Matrix text format, ASCII:
//   line 1:            "<rows> <cols>"
//   lines 2..rows+1:   one row of whitespace-separated entries
// Integer entries are optional-sign decimal; rational entries are "p/q".

struct matrix_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntegerMatrix parse_integer_matrix(std::string_view text);
RationalMatrix parse_rational_matrix(std::string_view text);

std::string to_text(const IntegerMatrix& m);
std::string to_text(const RationalMatrix& m);

} // namespace k3lattice
