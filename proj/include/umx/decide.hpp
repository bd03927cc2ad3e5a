#pragma once

#include <array>
#include <optional>

#include "umx/construct.hpp"
#include "umx/mat.hpp"

namespace umx {

// Everything the exhaustive deciders can say about one matrix over a finite
// ring. Present witnesses always verify their defining equations (they come
// from the verifying factories), and det_liftable/det_liftable_direct are
// guaranteed to agree on presence.
struct Classification {
  bool unimodular = false;
  std::optional<Witness> simply_extendable;
  std::optional<Witness> extendable;
  std::optional<Witness> det_liftable;
  std::optional<Witness> det_liftable_direct;
  std::optional<Witness> weakly_det_liftable;
  std::optional<Witness> phi_root;
  Elem det;
  bool det_is_nilpotent = false;
  bool det_is_zero_divisor = false;
};

// The deciders below require a finite ring and a unimodular matrix
// (InfiniteRing / NotUnimodular otherwise). Quads (x,y,z,w) are scanned in
// lexicographic enumeration order — x most significant, w fastest — and the
// first witness found is the one returned, so results are deterministic.

// first quad with a*x*w + b*x*z + c*y*w + d*y*z = 1
std::optional<Witness> decide_simply_extendable(const Mat2& A);

// first quad for which some v solves a*x*w + b*x*z + c*y*w + d*y*z
// + det(A)*v = 1; v itself is the first solution of det(A)*v = 1 - s
std::optional<Witness> decide_extendable(const Mat2& A);

// first quad with a*x + b*y + c*z + d*w = 1 and x*w = y*z
std::optional<Witness> decide_det_liftable(const Mat2& A);

// first quad whose companion B = A + det(A)*C_quad has det(B) = 0 with B
// unimodular — the definitional check the previous decider must agree with
std::optional<Witness> decide_det_liftable_direct(const Mat2& A);

// same scan as above without the unimodularity requirement on B
std::optional<Witness> decide_weakly_det_liftable(const Mat2& A);

// first quad with Phi_A(quad) = 0; needs a finite ring but A may be
// arbitrary (no unimodularity precondition)
std::optional<std::array<Elem, 4>> phi_root_search(const Mat2& A);

// given quad with Phi_A(quad) nonzero of square zero (PreconditionFailed
// otherwise), scan quad' = quad + Phi(quad)*(r1,r2,r3,r4) over r in R^4
// (r1 most significant) for Phi_A(quad') = 0; first hit or absent
std::optional<std::array<Elem, 4>> refine_phi_root(
    const Mat2& A, const std::array<Elem, 4>& quad);

struct Wj21Counterexample {
  Elem a, b, c, d, psi, delta;
};

struct Wj21Report {
  bool holds = false;
  std::optional<Wj21Counterexample> counterexample;
};

// checks that for every unimodular (a,b,c,d) and every target pair
// (psi, delta) some quad satisfies a*x + b*y + c*z + d*w = psi and
// x*w - y*z = delta; reports the first failing (a,b,c,d,psi,delta) otherwise
Wj21Report wj21_check(const Ring& ring);

// runs every decider on A (ring must be finite); the five main deciders are
// skipped when A is not unimodular, while phi_root, det and the det flags
// are always filled in
Classification classify(const Mat2& A);

}  // namespace umx
