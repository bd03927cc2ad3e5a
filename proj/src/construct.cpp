#include "umx/construct.hpp"

namespace umx {

const char* role_name(Role r) {
  switch (r) {
    case Role::SimpleExtension: return "simple-extension";
    case Role::Extension: return "extension";
    case Role::DetLift: return "det-lift";
    case Role::PhiRoot: return "phi-root";
    case Role::WeakLiftMatrix: return "weak-lift-matrix";
  }
  return "unknown";
}

namespace {

void check_quad(const Mat2& A, const std::array<Elem, 4>& quad) {
  const Ring& R = A.ring();
  for (const Elem& e : quad) R->check_mine(e);
}

// a*x*w + b*x*z + c*y*w + d*y*z
Elem extension_form(const Mat2& A, const std::array<Elem, 4>& q) {
  const Ring& R = A.ring();
  const Elem &x = q[0], &y = q[1], &z = q[2], &w = q[3];
  Elem t0 = R->mul(R->mul(A.a, x), w);
  Elem t1 = R->mul(R->mul(A.b, x), z);
  Elem t2 = R->mul(R->mul(A.c, y), w);
  Elem t3 = R->mul(R->mul(A.d, y), z);
  return R->add(R->add(t0, t1), R->add(t2, t3));
}

// a*x + b*y + c*z + d*w
Elem linear_form(const Mat2& A, const std::array<Elem, 4>& q) {
  const Ring& R = A.ring();
  return R->add(R->add(R->mul(A.a, q[0]), R->mul(A.b, q[1])),
                R->add(R->mul(A.c, q[2]), R->mul(A.d, q[3])));
}

}  // namespace

Elem phi_eval(const Mat2& A, const std::array<Elem, 4>& quad) {
  check_quad(A, quad);
  const Ring& R = A.ring();
  Elem lin = linear_form(A, quad);
  Elem cross = R->sub(R->mul(quad[0], quad[3]), R->mul(quad[1], quad[2]));
  return R->add(R->sub(R->one(), lin), R->mul(det2(A), cross));
}

CompanionTriple companion(const Mat2& A, const std::array<Elem, 4>& quad) {
  check_quad(A, quad);
  const Ring& R = A.ring();
  const Elem &x = quad[0], &y = quad[1], &z = quad[2], &w = quad[3];
  Mat2 C{R->neg(w), z, y, R->neg(x)};
  Mat2 D = mat_add(mat2_identity(R), mat_mul(adjugate2(A), C));
  Mat2 B = mat_mul(A, D);
  return CompanionTriple{std::move(C), std::move(D), std::move(B)};
}

Witness Witness::simple_extension(const Mat2& A, std::array<Elem, 4> quad) {
  check_quad(A, quad);
  const Ring& R = A.ring();
  if (!R->is_one(extension_form(A, quad)))
    fail(Err::WitnessInvalid, "simple extension equation fails");
  return Witness(Role::SimpleExtension, std::move(quad), std::nullopt,
                 std::nullopt);
}

Witness Witness::extension(const Mat2& A, std::array<Elem, 4> quad, Elem v) {
  check_quad(A, quad);
  const Ring& R = A.ring();
  R->check_mine(v);
  Elem total = R->add(extension_form(A, quad), R->mul(det2(A), v));
  if (!R->is_one(total))
    fail(Err::WitnessInvalid, "extension equation fails");
  return Witness(Role::Extension, std::move(quad), std::move(v), std::nullopt);
}

Witness Witness::det_lift(const Mat2& A, std::array<Elem, 4> quad) {
  check_quad(A, quad);
  const Ring& R = A.ring();
  if (!R->is_one(linear_form(A, quad)))
    fail(Err::WitnessInvalid, "det-lift linear equation fails");
  if (R->mul(quad[0], quad[3]) != R->mul(quad[1], quad[2]))
    fail(Err::WitnessInvalid, "det-lift cross equation fails");
  return Witness(Role::DetLift, std::move(quad), std::nullopt, std::nullopt);
}

Witness Witness::phi_root(const Mat2& A, std::array<Elem, 4> quad) {
  const Ring& R = A.ring();
  if (!R->is_zero(phi_eval(A, quad)))
    fail(Err::WitnessInvalid, "Phi does not vanish at the quadruple");
  return Witness(Role::PhiRoot, std::move(quad), std::nullopt, std::nullopt);
}

Witness Witness::weak_lift(const Mat2& A, std::array<Elem, 4> quad,
                           bool require_unimodular) {
  check_quad(A, quad);
  const Ring& R = A.ring();
  Mat2 B = mat_add(A, mat_scale(det2(A), companion(A, quad).c));
  if (!R->is_zero(det2(B)))
    fail(Err::WitnessInvalid, "lift matrix has nonzero determinant");
  if (require_unimodular && !is_unimodular2(B))
    fail(Err::WitnessInvalid, "lift matrix is not unimodular");
  return Witness(Role::WeakLiftMatrix, std::move(quad), std::nullopt,
                 std::move(B));
}

Mat3 build_extension(const Mat2& A, const std::array<Elem, 4>& quad,
                     const Elem& v) {
  check_quad(A, quad);
  const Ring& R = A.ring();
  R->check_mine(v);
  Elem total = R->add(extension_form(A, quad), R->mul(det2(A), v));
  if (!R->is_one(total))
    fail(Err::WitnessInvalid, "extension equation fails");
  const Elem &x = quad[0], &y = quad[1], &z = quad[2], &w = quad[3];
  return Mat3{{A.a, A.b, y, A.c, A.d, R->neg(x), R->neg(z), w, v}};
}

std::array<Elem, 4> rho_witness(const std::array<Elem, 4>& quad) {
  if (!quad[0].ring) fail(Err::MixedRings, "element without ring");
  const Ring& R = quad[0].ring;
  for (const Elem& e : quad) R->check_mine(e);
  return {R->mul(quad[0], quad[3]), R->mul(quad[0], quad[2]),
          R->mul(quad[1], quad[3]), R->mul(quad[1], quad[2])};
}

Witness transport_witness(const Mat2& A, const Mat2& P, const Mat2& Q,
                          const Witness& w) {
  const Ring& R = A.ring();
  R->check_mine(P.a);
  R->check_mine(Q.a);
  if (w.role() != Role::SimpleExtension && w.role() != Role::Extension)
    fail(Err::PreconditionFailed,
         "only extension witnesses can be transported");
  auto pu = R->is_unit(det2(P));
  auto qu = R->is_unit(det2(Q));
  if (!pu || !qu) fail(Err::NotInvertible, "P and Q must be invertible");
  Elem uinv = R->mul(*pu, *qu);  // (det(P) det(Q))^{-1}

  const Elem &x = w.quad()[0], &y = w.quad()[1], &z = w.quad()[2],
             &w4 = w.quad()[3];
  // border column (y,-x) maps to uinv * P * (y,-x); border row (-z,w) to
  // (-z,w) * Q; the corner v scales by uinv
  Elem x2 = R->mul(uinv, R->sub(R->mul(P.d, x), R->mul(P.c, y)));
  Elem y2 = R->mul(uinv, R->sub(R->mul(P.a, y), R->mul(P.b, x)));
  Elem z2 = R->sub(R->mul(z, Q.a), R->mul(w4, Q.c));
  Elem w2 = R->sub(R->mul(w4, Q.d), R->mul(z, Q.b));
  Mat2 PAQ = mat_mul(mat_mul(P, A), Q);
  if (w.role() == Role::SimpleExtension)
    return Witness::simple_extension(PAQ, {x2, y2, z2, w2});
  Elem v2 = R->mul(uinv, *w.v());
  return Witness::extension(PAQ, {x2, y2, z2, w2}, v2);
}

IdentityReport check_identities(const Mat2& A,
                                const std::array<Elem, 4>& quad) {
  const Ring& R = A.ring();
  CompanionTriple t = companion(A, quad);
  Elem phi = phi_eval(A, quad);
  Elem detA = det2(A);

  IdentityReport rep;
  rep.det_d_is_phi = {det2(t.d), phi, det2(t.d) == phi};
  Elem rhs_b = R->mul(detA, phi);
  rep.det_b_is_det_phi = {det2(t.b), rhs_b, det2(t.b) == rhs_b};
  Elem lhs_tr = R->sub(R->one(), R->mul(detA, det2(t.c)));
  Elem rhs_tr = R->sub(trace2(t.d), det2(t.d));
  rep.trace_identity = {lhs_tr, rhs_tr, lhs_tr == rhs_tr};
  return rep;
}

}  // namespace umx
