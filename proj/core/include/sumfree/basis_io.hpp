#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sumfree/gf2n.hpp"

namespace sumfree {

/// A list of field elements with the field they live in.
///
/// Text format: '#' starts a comment; header lines `n=<degree>` (required)
/// and `modulus=<hex>` (default: default_modulus(n)); then one element per
/// line, either n space-separated 0/1 digits with column j the coefficient
/// of X^j, or a single 0x-prefixed hex word.
struct BasisFile {
  Field field;
  std::vector<Fe> rows;
};

/// Throws ParseError on malformed input, InvalidModulus on a bad modulus.
BasisFile parse_basis_text(std::string_view text);
BasisFile read_basis_file(const std::string& path);
/// Inverse of parse_basis_text using the 0/1 digit layout.
std::string format_basis_text(const Field& f, const std::vector<Fe>& rows);

}  // namespace sumfree
