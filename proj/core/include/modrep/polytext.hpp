#pragma once

// Line format for explicit polynomials:
//
//   m=<int> n=<int>; <coeff>*x{i,j,...}; <coeff>*1; ...
//
// Variables are 1-based. A term may omit "<coeff>*" (coefficient 1) and a
// bare integer is a constant. Coefficients may be negative and are reduced
// mod m; repeated monomials are summed. Whitespace is insignificant and a
// trailing ';' is allowed. format_poly writes the canonical form: nonzero
// coefficients in [1, m), terms by degree then by index list, constants as
// "<c>*1". parse_poly(format_poly(p)) == p.

#include <string>
#include <string_view>

#include "modrep/boolpoly.hpp"

namespace modrep {

std::string format_poly(const MultilinearPoly& p);
MultilinearPoly parse_poly(std::string_view text);

}  // namespace modrep
