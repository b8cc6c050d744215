#pragma once

// Text grammar shared by the registry, config files and the CLI:
//   expr  := ['-'] term (('+'|'-') term)*      unary minus binds below * and /
//   term  := power (('*'|'/') power)*          division only by scalars
//   power := atom ['^' ['-'] integer]
//   atom  := integer | name | zeta{m} | sqrt3 | x1..x3 | y1..y3 | z1..z3 | '(' expr ')'
// Unknown names become formal parameters.

#include <string_view>

#include "pdq/poisson.hpp"
#include "pdq/quantize.hpp"
#include "pdq/scalar.hpp"

namespace pdq {

Scalar parse_scalar(std::string_view text);
// alphabet 'x' or 'z'
CPoly parse_cpoly(std::string_view text, char alphabet = 'x');
// alphabet 'y' or 'z'; products keep factor order, no relations applied.
NCPoly parse_ncpoly(std::string_view text, char alphabet = 'y');
// Row-major, rows separated by ';', e.g. "[-1,0,0; 0,1,0; 2,0,1]".
Matrix3 parse_matrix(std::string_view text);

}  // namespace pdq
