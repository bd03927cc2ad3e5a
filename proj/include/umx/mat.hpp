#pragma once

#include <array>
#include <optional>
#include <string>

#include "umx/ring.hpp"

namespace umx {

// 2x2 matrix [[a,b],[c,d]], all entries in one ring
struct Mat2 {
  Elem a, b, c, d;
  const Ring& ring() const { return a.ring; }
  bool operator==(const Mat2&) const = default;
};

// 3x3 matrix, row-major
struct Mat3 {
  std::array<Elem, 9> e;
  const Ring& ring() const { return e[0].ring; }
  bool operator==(const Mat3&) const = default;
};

// constructors that enforce the one-ring invariant (MixedRings otherwise)
Mat2 mat2(Elem a, Elem b, Elem c, Elem d);
Mat3 mat3(std::array<Elem, 9> entries);
Mat2 mat2_identity(const Ring& ring);
Mat3 mat3_identity(const Ring& ring);

Elem det2(const Mat2& A);
Elem trace2(const Mat2& A);
// [[d,-b],[-c,a]]; satisfies A*adj(A) = adj(A)*A = det(A)*I
Mat2 adjugate2(const Mat2& A);
// cofactor expansion along the first row
Elem det3(const Mat3& M);

Mat2 mat_mul(const Mat2& A, const Mat2& B);
Mat3 mat_mul(const Mat3& A, const Mat3& B);
Mat2 mat_add(const Mat2& A, const Mat2& B);
// entrywise s*A
Mat2 mat_scale(const Elem& s, const Mat2& A);

// coefficients (x,y,z,w) with a*x + b*y + c*z + d*w = 1 iff the entries
// generate the unit ideal; delegates to ideal_contains_one
std::optional<std::array<Elem, 4>> is_unimodular2(const Mat2& A);

// true iff every entry of B - C lies in the principal ideal Rg
bool congruent_mod(const Mat2& B, const Mat2& C, const Elem& g);

// canonical literals, re-parseable by ringspec
std::string to_string(const Mat2& A);
std::string to_string(const Mat3& M);

}  // namespace umx
