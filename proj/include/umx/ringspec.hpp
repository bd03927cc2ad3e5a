#pragma once

#include <array>
#include <string>

#include "umx/mat.hpp"
#include "umx/ring.hpp"

namespace umx {

// Grammar (whitespace insignificant; " x " is the product separator):
//   ring   := atom (" x " atom)*
//   atom   := "Z" | "Z/" INT | "GF(" PRIME ")" | "GF(" PRIME ")[x]"
//           | "GF(" PRIME ")[x]/(" POLY ")"
//   POLY   := signed sum of terms "c", "x", "x^k", "c*x^k"
// Element literals: signed integers for Z, Z/n, GF(p); POLY for the
// polynomial kinds; "(e1,...,ek)" tuples for products.
// Matrices: "[[e,e],[e,e]]" and the 3x3 analogue; quadruples: "[e,e,e,e]".
//
// Errors carry the byte offset of the first offending character
// (UmxError::offset).

RingDescriptor parse_ring_spec(const std::string& s);

// canonical spelling; parse_ring_spec(ring_spec_string(d)) == normalized d
std::string ring_spec_string(const RingDescriptor& d);

Elem parse_element(const std::string& s, const Ring& ring);
std::array<Elem, 4> parse_quad(const std::string& s, const Ring& ring);
Mat2 parse_matrix2(const std::string& s, const Ring& ring);
Mat3 parse_matrix3(const std::string& s, const Ring& ring);

}  // namespace umx
