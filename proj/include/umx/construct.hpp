#pragma once

#include <array>
#include <optional>
#include <string>

#include "umx/mat.hpp"

namespace umx {

// Phi_A(X,Y,Z,W) = 1 - aX - bY - cZ - dW + (ad-bc)(XW - YZ)
Elem phi_eval(const Mat2& A, const std::array<Elem, 4>& quad);

struct CompanionTriple {
  Mat2 c;  // C = [[-w,z],[y,-x]]
  Mat2 d;  // D = I + adj(A)*C
  Mat2 b;  // B = A*D = A + det(A)*C
};

CompanionTriple companion(const Mat2& A, const std::array<Elem, 4>& quad);

enum class Role {
  SimpleExtension,  // a*x*w + b*x*z + c*y*w + d*y*z = 1
  Extension,        // a*x*w + b*x*z + c*y*w + d*y*z + det(A)*v = 1
  DetLift,          // a*x + b*y + c*z + d*w = 1 and x*w = y*z
  PhiRoot,          // Phi_A(quad) = 0
  WeakLiftMatrix,   // det(A + det(A)*C_quad) = 0
};

const char* role_name(Role r);

// A witness can only be obtained through the verifying factories below, so a
// constructed Witness always satisfies its role equation for its matrix.
class Witness {
 public:
  static Witness simple_extension(const Mat2& A, std::array<Elem, 4> quad);
  static Witness extension(const Mat2& A, std::array<Elem, 4> quad, Elem v);
  static Witness det_lift(const Mat2& A, std::array<Elem, 4> quad);
  static Witness phi_root(const Mat2& A, std::array<Elem, 4> quad);
  // verifies det(B)=0 for B = A + det(A)*C_quad; when require_unimodular is
  // set, additionally that B is unimodular; stores B
  static Witness weak_lift(const Mat2& A, std::array<Elem, 4> quad,
                           bool require_unimodular);

  Role role() const { return role_; }
  const std::array<Elem, 4>& quad() const { return quad_; }
  const std::optional<Elem>& v() const { return v_; }
  const std::optional<Mat2>& matrix() const { return matrix_; }

 private:
  Witness(Role role, std::array<Elem, 4> quad, std::optional<Elem> v,
          std::optional<Mat2> matrix)
      : role_(role),
        quad_(std::move(quad)),
        v_(std::move(v)),
        matrix_(std::move(matrix)) {}

  Role role_;
  std::array<Elem, 4> quad_;
  std::optional<Elem> v_;
  std::optional<Mat2> matrix_;
};

// the bordered matrix [[a,b,y],[c,d,-x],[-z,w,v]]; requires
// a*x*w + b*x*z + c*y*w + d*y*z + det(A)*v = 1 (WitnessInvalid otherwise),
// which makes its determinant exactly 1
Mat3 build_extension(const Mat2& A, const std::array<Elem, 4>& quad,
                     const Elem& v);

// (x,y,z,w) -> (xw, xz, yw, yz); sends simple-extension witnesses of A to
// det-lift witnesses of A, and always satisfies x'w' - y'z' = 0
std::array<Elem, 4> rho_witness(const std::array<Elem, 4>& quad);

// transports a SimpleExtension/Extension witness of A to one of P*A*Q for
// invertible P, Q: conjugate the bordered matrix by diag(P,1), diag(Q,1) and
// scale the border column by (det(P)det(Q))^{-1}
Witness transport_witness(const Mat2& A, const Mat2& P, const Mat2& Q,
                          const Witness& w);

struct IdentitySide {
  Elem lhs, rhs;
  bool pass;
};

// det(D) = Phi(quad); det(B) = det(A)*Phi(quad);
// 1 - det(A)det(C) = Tr(D) - det(D)
struct IdentityReport {
  IdentitySide det_d_is_phi;
  IdentitySide det_b_is_det_phi;
  IdentitySide trace_identity;
  bool all_pass() const {
    return det_d_is_phi.pass && det_b_is_det_phi.pass && trace_identity.pass;
  }
};

IdentityReport check_identities(const Mat2& A, const std::array<Elem, 4>& quad);

}  // namespace umx
