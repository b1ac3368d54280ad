#pragma once

#include <string>
#include <string_view>

#include "toeplitz/gaussian_rational.hpp"
#include "toeplitz/poly.hpp"

namespace toeplitz {

// RAT     ::= ["-"] INT [ "/" POSINT ]
// COMPLEX ::= RAT | [RAT] ("+"|"-") [RAT] "i" | RAT "i"
// plus the bare "i". A polynomial literal is a bracketed, comma-separated
// list of COMPLEX entries in ascending order; entries may be JSON strings.

/// Throws ParseError with the offending offset.
GaussianRational parse_complex_literal(std::string_view text);
Poly parse_poly_literal(std::string_view text);

/// ["c0", "c1", ...]; parse_poly_literal reads it back unchanged.
std::string emit_poly_literal(const Poly& p);

}  // namespace toeplitz
