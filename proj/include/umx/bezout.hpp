#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "umx/construct.hpp"
#include "umx/mat.hpp"

namespace umx {

// Small rectangular matrix over one ring, used by the diagonal-reduction
// routines. Rows are stored as vectors of equal length.
struct MatMN {
  std::vector<std::vector<Elem>> rows;

  std::size_t height() const { return rows.size(); }
  std::size_t width() const { return rows.empty() ? 0 : rows[0].size(); }
  const Ring& ring() const { return rows[0][0].ring; }
};

// validates that the rows are nonempty, rectangular and share one ring
MatMN mat_mn(std::vector<std::vector<Elem>> rows);
MatMN mat_mn(const Mat2& a);
MatMN identity_mn(const Ring& ring, std::size_t n);
MatMN mat_mul(const MatMN& a, const MatMN& b);
std::string to_string(const MatMN& m);

// m = U * D * V exactly, with U and V of unit determinant and D diagonal
// with d1 | d2 | ... (nonnegative over Z, monic or zero over GF(p)[x])
struct SnfResult {
  MatMN u, d, v;
};

// diagonal reduction over Z or GF(p)[x] (UnsupportedRing otherwise);
// deterministic: smallest-absolute-value / lowest-degree pivot, scanned
// row-major, rows eliminated before columns
SnfResult smith_normal_form(const MatMN& m);

// col (l,m) and row (o,q) with outer product [[l*o, l*q],[m*o, m*q]] equal
// to the factored matrix entrywise
struct NonFullFactorization {
  std::array<Elem, 2> col;  // (l, m)
  std::array<Elem, 2> row;  // (o, q)
};

// factors a zero-determinant matrix over Z or GF(p)[x] as an outer product
// (NonzeroDeterminant / UnsupportedRing otherwise); g = gcd of the first
// row, degenerate zero rows handled separately
NonFullFactorization nonfull_factor(const Mat2& m);

// SimpleExtension witness for unimodular A over Z or GF(p)[x]: diagonal
// reduction gives A = U*diag(1,delta)*V, whose base witness (1,0,0,1) is
// transported through U, V (NotUnimodular / UnsupportedRing otherwise)
Witness simple_extension_witness(const Mat2& a);

struct DetLiftResult {
  Witness witness;  // role DetLift
  Mat2 b;           // A + det(A)*C_quad: unimodular, det zero
};

// composes simple_extension_witness with the quad map
// (x,y,z,w) -> (xw,xz,yw,yz) and builds the lifted matrix; all three
// postconditions (witness equations, det(B)=0, B unimodular) are checked
DetLiftResult det_lift_witness(const Mat2& a);

// B ~ A mod t with det(B) divisible by t^(2^k), entries canonical in
// [0, t^(2^k))
struct HenselLift {
  Elem t;
  std::uint64_t precision_exponent = 0;  // 2^k
  Mat2 b;
};

// quadratically convergent determinant lift over Z: each rung solves
// a*w + d*x - b*z - c*y = -s for the correction M = [[x,y],[z,w]], where
// det(B_n) = s*t^(2^n), and sets B_{n+1} = B_n + t^(2^n)*M reduced into
// [0, t^(2^{n+1})). Requires A unimodular (NotUnimodular), t >= 2 and
// k >= 1 (PreconditionFailed), t | det(A) (NotDivisible).
HenselLift hensel_det_lift(const Mat2& a, const Elem& t, unsigned k);

}  // namespace umx
