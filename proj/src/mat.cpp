#include "umx/mat.hpp"

namespace umx {

Mat2 mat2(Elem a, Elem b, Elem c, Elem d) {
  if (!a.ring) fail(Err::MixedRings, "matrix entry without ring");
  a.ring->check_mine(b);
  a.ring->check_mine(c);
  a.ring->check_mine(d);
  return Mat2{std::move(a), std::move(b), std::move(c), std::move(d)};
}

Mat3 mat3(std::array<Elem, 9> entries) {
  if (!entries[0].ring) fail(Err::MixedRings, "matrix entry without ring");
  for (size_t i = 1; i < 9; ++i) entries[0].ring->check_mine(entries[i]);
  return Mat3{std::move(entries)};
}

Mat2 mat2_identity(const Ring& ring) {
  return Mat2{ring->one(), ring->zero(), ring->zero(), ring->one()};
}

Mat3 mat3_identity(const Ring& ring) {
  Elem o = ring->one(), z = ring->zero();
  return Mat3{{o, z, z, z, o, z, z, z, o}};
}

Elem det2(const Mat2& A) {
  const Ring& R = A.ring();
  return R->sub(R->mul(A.a, A.d), R->mul(A.b, A.c));
}

Elem trace2(const Mat2& A) {
  const Ring& R = A.ring();
  return R->add(A.a, A.d);
}

Mat2 adjugate2(const Mat2& A) {
  const Ring& R = A.ring();
  return Mat2{A.d, R->neg(A.b), R->neg(A.c), A.a};
}

Elem det3(const Mat3& M) {
  const Ring& R = M.ring();
  auto minor = [&](size_t a, size_t b, size_t c, size_t d) {
    return R->sub(R->mul(M.e[a], M.e[d]), R->mul(M.e[b], M.e[c]));
  };
  Elem t0 = R->mul(M.e[0], minor(4, 5, 7, 8));
  Elem t1 = R->mul(M.e[1], minor(3, 5, 6, 8));
  Elem t2 = R->mul(M.e[2], minor(3, 4, 6, 7));
  return R->add(R->sub(t0, t1), t2);
}

Mat2 mat_mul(const Mat2& A, const Mat2& B) {
  const Ring& R = A.ring();
  R->check_mine(B.a);
  return Mat2{R->add(R->mul(A.a, B.a), R->mul(A.b, B.c)),
              R->add(R->mul(A.a, B.b), R->mul(A.b, B.d)),
              R->add(R->mul(A.c, B.a), R->mul(A.d, B.c)),
              R->add(R->mul(A.c, B.b), R->mul(A.d, B.d))};
}

Mat3 mat_mul(const Mat3& A, const Mat3& B) {
  const Ring& R = A.ring();
  R->check_mine(B.e[0]);
  Mat3 out;
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      Elem s = R->zero();
      for (size_t k = 0; k < 3; ++k) {
        s = R->add(s, R->mul(A.e[3 * i + k], B.e[3 * k + j]));
      }
      out.e[3 * i + j] = std::move(s);
    }
  }
  return out;
}

Mat2 mat_add(const Mat2& A, const Mat2& B) {
  const Ring& R = A.ring();
  return Mat2{R->add(A.a, B.a), R->add(A.b, B.b), R->add(A.c, B.c),
              R->add(A.d, B.d)};
}

Mat2 mat_scale(const Elem& s, const Mat2& A) {
  const Ring& R = A.ring();
  return Mat2{R->mul(s, A.a), R->mul(s, A.b), R->mul(s, A.c), R->mul(s, A.d)};
}

std::optional<std::array<Elem, 4>> is_unimodular2(const Mat2& A) {
  auto coeffs = ideal_contains_one({A.a, A.b, A.c, A.d});
  if (!coeffs) return std::nullopt;
  return std::array<Elem, 4>{(*coeffs)[0], (*coeffs)[1], (*coeffs)[2],
                             (*coeffs)[3]};
}

bool congruent_mod(const Mat2& B, const Mat2& C, const Elem& g) {
  const Ring& R = B.ring();
  R->check_mine(C.a);
  R->check_mine(g);
  return R->divides(g, R->sub(B.a, C.a)).has_value() &&
         R->divides(g, R->sub(B.b, C.b)).has_value() &&
         R->divides(g, R->sub(B.c, C.c)).has_value() &&
         R->divides(g, R->sub(B.d, C.d)).has_value();
}

std::string to_string(const Mat2& A) {
  const Ring& R = A.ring();
  return "[[" + R->to_string(A.a) + "," + R->to_string(A.b) + "],[" +
         R->to_string(A.c) + "," + R->to_string(A.d) + "]]";
}

std::string to_string(const Mat3& M) {
  const Ring& R = M.ring();
  std::string out = "[";
  for (size_t i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += "[";
    for (size_t j = 0; j < 3; ++j) {
      if (j) out += ",";
      out += R->to_string(M.e[3 * i + j]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace umx
