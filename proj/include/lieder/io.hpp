#pragma once

// Line-oriented text formats for algebras and derivations.
//
// Algebra file:
//
//   # comment
//   field Q            (or: field GF(7))
//   dim 3
//   b 1 2 : 1*3        [e_1, e_2] = e_3
//   b 3 1 : 2*1 -1/2*2
//
// Bracket terms are `c*k` (coefficient c on e_k) or a bare `k` for 1*e_k.
// Unlisted brackets are zero and [e_j, e_i] is filled in by antisymmetry;
// listing both orders with inconsistent values is an error.
//
// Derivation file: `dim n` followed by n rows of n scalars; column j holds
// the image of e_j.

#include <cstdint>
#include <string>
#include <string_view>

#include "lieder/liealg.hpp"

namespace lieder {

LieAlgebra parse_algebra(std::string_view text);
std::string format_algebra(const LieAlgebra& algebra);

Matrix parse_derivation(std::string_view text, FieldSpec field);
std::string format_derivation(const Matrix& m);

/// Throws ParseError (line 0) if the file cannot be read.
std::string read_file(const std::string& path);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace lieder
