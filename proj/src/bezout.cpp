#include "umx/bezout.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace umx {

namespace {

void require_euclidean(const Ring& ring, const char* what) {
  Kind k = ring->descriptor().kind;
  if (k != Kind::Integers && k != Kind::PolyOverPrime)
    fail(Err::UnsupportedRing,
         std::string(what) + " needs Z or GF(p)[x], got " + ring->name());
}

// pivot measure: absolute value over Z, degree over GF(p)[x]; both
// arguments nonzero
bool strictly_smaller(const Elem& x, const Elem& y) {
  if (x.ring->descriptor().kind == Kind::Integers) return abs(x.z) < abs(y.z);
  return x.poly.size() < y.poly.size();
}

Elem must_divide(const Ring& ring, const Elem& a, const Elem& b,
                 const char* what) {
  auto q = ring->divides(a, b);
  if (!q)
    throw std::logic_error(std::string(what) +
                           ": expected exact division failed");
  return *q;
}

}  // namespace

MatMN mat_mn(std::vector<std::vector<Elem>> rows) {
  if (rows.empty() || rows[0].empty())
    fail(Err::ShapeMismatch, "matrix needs at least one row and one column");
  const Ring& ring = rows[0][0].ring;
  if (!ring) fail(Err::MixedRings, "element without ring");
  for (const auto& row : rows) {
    if (row.size() != rows[0].size())
      fail(Err::ShapeMismatch, "ragged rows in matrix");
    for (const Elem& e : row) ring->check_mine(e);
  }
  MatMN m;
  m.rows = std::move(rows);
  return m;
}

MatMN mat_mn(const Mat2& a) { return mat_mn({{a.a, a.b}, {a.c, a.d}}); }

MatMN identity_mn(const Ring& ring, std::size_t n) {
  MatMN m;
  m.rows.assign(n, std::vector<Elem>(n, ring->zero()));
  for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = ring->one();
  return m;
}

MatMN mat_mul(const MatMN& a, const MatMN& b) {
  if (a.width() != b.height())
    fail(Err::ShapeMismatch, "inner dimensions disagree in matrix product");
  const Ring& ring = a.ring();
  ring->check_mine(b.rows[0][0]);
  MatMN out;
  out.rows.assign(a.height(), std::vector<Elem>(b.width(), ring->zero()));
  for (std::size_t i = 0; i < a.height(); ++i)
    for (std::size_t kk = 0; kk < a.width(); ++kk)
      for (std::size_t j = 0; j < b.width(); ++j)
        out.rows[i][j] = ring->add(out.rows[i][j],
                                   ring->mul(a.rows[i][kk], b.rows[kk][j]));
  return out;
}

std::string to_string(const MatMN& m) {
  const Ring& ring = m.ring();
  std::string s = "[";
  for (std::size_t i = 0; i < m.height(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.width(); ++j) {
      if (j) s += ",";
      s += ring->to_string(m.rows[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

SnfResult smith_normal_form(const MatMN& m_in) {
  if (m_in.rows.empty() || m_in.rows[0].empty())
    fail(Err::ShapeMismatch, "matrix needs at least one row and one column");
  const Ring ring = m_in.ring();
  require_euclidean(ring, "smith normal form");
  const std::size_t h = m_in.height(), w = m_in.width();

  MatMN a = m_in;
  MatMN u = identity_mn(ring, h);
  MatMN v = identity_mn(ring, w);

  // every elementary operation applied to the working copy is compensated
  // in U or V so that U * a * V = m_in stays true throughout
  auto swap_rows = [&](std::size_t i1, std::size_t i2) {
    if (i1 == i2) return;
    std::swap(a.rows[i1], a.rows[i2]);
    for (std::size_t r = 0; r < h; ++r)
      std::swap(u.rows[r][i1], u.rows[r][i2]);
  };
  auto swap_cols = [&](std::size_t j1, std::size_t j2) {
    if (j1 == j2) return;
    for (std::size_t r = 0; r < h; ++r)
      std::swap(a.rows[r][j1], a.rows[r][j2]);
    std::swap(v.rows[j1], v.rows[j2]);
  };
  auto row_sub = [&](std::size_t i, std::size_t k, const Elem& q) {
    for (std::size_t j = 0; j < w; ++j)
      a.rows[i][j] = ring->sub(a.rows[i][j], ring->mul(q, a.rows[k][j]));
    for (std::size_t r = 0; r < h; ++r)
      u.rows[r][k] = ring->add(u.rows[r][k], ring->mul(q, u.rows[r][i]));
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const Elem& q) {
    for (std::size_t r = 0; r < h; ++r)
      a.rows[r][j] = ring->sub(a.rows[r][j], ring->mul(q, a.rows[r][k]));
    for (std::size_t c = 0; c < w; ++c)
      v.rows[k][c] = ring->add(v.rows[k][c], ring->mul(q, v.rows[j][c]));
  };
  auto row_add = [&](std::size_t k, std::size_t i) {
    for (std::size_t j = 0; j < w; ++j)
      a.rows[k][j] = ring->add(a.rows[k][j], a.rows[i][j]);
    for (std::size_t r = 0; r < h; ++r)
      u.rows[r][i] = ring->sub(u.rows[r][i], u.rows[r][k]);
  };
  auto scale_row = [&](std::size_t k, const Elem& s) {
    Elem sinv = *ring->is_unit(s);
    for (std::size_t j = 0; j < w; ++j)
      a.rows[k][j] = ring->mul(s, a.rows[k][j]);
    for (std::size_t r = 0; r < h; ++r)
      u.rows[r][k] = ring->mul(sinv, u.rows[r][k]);
  };

  const std::size_t steps = std::min(h, w);
  for (std::size_t k = 0; k < steps; ++k) {
    bool block_empty = false;
    // bring the smallest nonzero entry of the trailing block to (k,k),
    // shrink it until row k and column k are clear, then force the
    // divisibility chain; the pivot measure strictly decreases whenever a
    // remainder survives, so this terminates
    while (true) {
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = k; i < h; ++i)
        for (std::size_t j = k; j < w; ++j) {
          if (ring->is_zero(a.rows[i][j])) continue;
          if (!found || strictly_smaller(a.rows[i][j], a.rows[pi][pj])) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        block_empty = true;
        break;
      }
      swap_rows(k, pi);
      swap_cols(k, pj);
      bool dirty = false;
      for (std::size_t i = k + 1; i < h; ++i) {
        if (ring->is_zero(a.rows[i][k])) continue;
        auto [q, r] = ring->euclid_divmod(a.rows[i][k], a.rows[k][k]);
        row_sub(i, k, q);
        if (!ring->is_zero(a.rows[i][k])) dirty = true;
      }
      for (std::size_t j = k + 1; j < w; ++j) {
        if (ring->is_zero(a.rows[k][j])) continue;
        auto [q, r] = ring->euclid_divmod(a.rows[k][j], a.rows[k][k]);
        col_sub(j, k, q);
        if (!ring->is_zero(a.rows[k][j])) dirty = true;
      }
      if (dirty) continue;
      bool chain_fixed = true;
      for (std::size_t i = k + 1; i < h && chain_fixed; ++i)
        for (std::size_t j = k + 1; j < w && chain_fixed; ++j)
          if (!ring->divides(a.rows[k][k], a.rows[i][j])) {
            row_add(k, i);
            chain_fixed = false;
          }
      if (chain_fixed) break;
    }
    if (block_empty) break;
  }

  // canonical diagonal: nonnegative over Z, monic over GF(p)[x]
  for (std::size_t k = 0; k < steps; ++k) {
    const Elem& dk = a.rows[k][k];
    if (ring->is_zero(dk)) continue;
    if (ring->descriptor().kind == Kind::Integers) {
      if (dk.z < 0) scale_row(k, ring->from_int(-1));
    } else if (dk.poly.back() != 1) {
      Elem lead = ring->from_int(dk.poly.back());
      scale_row(k, *ring->is_unit(lead));
    }
  }
  SnfResult out;
  out.u = std::move(u);
  out.d = std::move(a);
  out.v = std::move(v);
  return out;
}

NonFullFactorization nonfull_factor(const Mat2& m) {
  const Ring& ring = m.ring();
  require_euclidean(ring, "non-full factorization");
  Elem det = det2(m);
  if (!ring->is_zero(det))
    fail(Err::NonzeroDeterminant,
         "matrix has determinant " + ring->to_string(det) + ", expected 0");
  const Elem zero = ring->zero(), one = ring->one();
  if (ring->is_zero(m.a) && ring->is_zero(m.b)) {
    if (ring->is_zero(m.c) && ring->is_zero(m.d))
      return {{zero, zero}, {zero, zero}};
    return {{zero, one}, {m.c, m.d}};
  }
  // a = g*o, b = g*q with gcd(o,q) = 1; zero determinant then forces
  // c = m*o and d = m*q for a single m
  auto [g, cu, cv] = extended_gcd(m.a, m.b);
  Elem o = must_divide(ring, g, m.a, "non-full factorization");
  Elem q = must_divide(ring, g, m.b, "non-full factorization");
  Elem mm = ring->is_zero(o)
                ? must_divide(ring, q, m.d, "non-full factorization")
                : must_divide(ring, o, m.c, "non-full factorization");
  return {{g, mm}, {o, q}};
}

Witness simple_extension_witness(const Mat2& a) {
  const Ring& ring = a.ring();
  require_euclidean(ring, "simple extension synthesis");
  if (!is_unimodular2(a))
    fail(Err::NotUnimodular,
         "matrix entries do not generate the unit ideal: " + to_string(a));
  SnfResult snf = smith_normal_form(mat_mn(a));
  // the first elementary divisor is the gcd of the entries, which
  // unimodularity over Z / GF(p)[x] makes a unit, normalized to 1
  if (!ring->is_one(snf.d.rows[0][0]))
    throw std::logic_error(
        "diagonal reduction of a unimodular matrix must start at 1");
  Mat2 d = mat2(snf.d.rows[0][0], snf.d.rows[0][1], snf.d.rows[1][0],
                snf.d.rows[1][1]);
  Mat2 u = mat2(snf.u.rows[0][0], snf.u.rows[0][1], snf.u.rows[1][0],
                snf.u.rows[1][1]);
  Mat2 v = mat2(snf.v.rows[0][0], snf.v.rows[0][1], snf.v.rows[1][0],
                snf.v.rows[1][1]);
  Witness base = Witness::simple_extension(
      d, {ring->one(), ring->zero(), ring->zero(), ring->one()});
  return transport_witness(d, u, v, base);
}

DetLiftResult det_lift_witness(const Mat2& a) {
  Witness se = simple_extension_witness(a);
  std::array<Elem, 4> quad = rho_witness(se.quad());
  Witness w = Witness::det_lift(a, quad);
  Mat2 b = companion(a, quad).b;
  const Ring& ring = a.ring();
  if (!ring->is_zero(det2(b)) || !is_unimodular2(b) ||
      !congruent_mod(b, a, det2(a)))
    throw std::logic_error("determinant lift postcondition failed for " +
                           to_string(a));
  DetLiftResult out{std::move(w), std::move(b)};
  return out;
}

HenselLift hensel_det_lift(const Mat2& a_in, const Elem& t, unsigned k) {
  const Ring ring = a_in.ring();
  if (ring->descriptor().kind != Kind::Integers)
    fail(Err::UnsupportedRing,
         "hensel determinant lift runs over Z, got " + ring->name());
  ring->check_mine(t);
  if (t.z < 2) fail(Err::PreconditionFailed, "modulus t must be at least 2");
  if (k < 1)
    fail(Err::PreconditionFailed, "the lift ladder needs at least one rung");
  if (k > 30)
    fail(Err::BudgetExceeded, "precision exponent 2^k out of range (k > 30)");
  if (!is_unimodular2(a_in))
    fail(Err::NotUnimodular,
         "matrix entries do not generate the unit ideal: " + to_string(a_in));
  Int a = a_in.a.z, b = a_in.b.z, c = a_in.c.z, d = a_in.d.z;
  if ((a * d - b * c) % t.z != 0)
    fail(Err::NotDivisible, "t does not divide det(A)");

  auto canon = [](const Int& val, const Int& mod) {
    Int r = val % mod;
    if (r < 0) r += mod;
    return r;
  };

  Int tau = t.z;  // t^(2^n)
  for (unsigned n = 0; n < k; ++n) {
    Int s = (a * d - b * c) / tau;  // exact: det(B_n) = s * t^(2^n)
    Int tau2 = tau * tau;

    // coefficient chain for the entry gcd G: G | s because G is coprime to
    // t while G^2 divides det(B_n); scaling the chain by -s/G solves
    // a*w + d*x - b*z - c*y = -s
    std::array<Elem, 4> gens{ring->from_int(a), ring->from_int(b),
                             ring->from_int(c), ring->from_int(d)};
    Elem g = gens[0];
    std::vector<Elem> coeffs{ring->one()};
    for (int i = 1; i < 4; ++i) {
      auto [g2, cu, cw] = extended_gcd(g, gens[i]);
      for (Elem& cc : coeffs) cc = ring->mul(cc, cu);
      coeffs.push_back(cw);
      g = g2;
    }
    if (g.z == 0 || s % g.z != 0)
      throw std::logic_error("hensel rung: entry gcd does not divide s");
    Int scale = -s / g.z;
    Int x = coeffs[3].z * scale;   // pairs with d
    Int y = -coeffs[2].z * scale;  // -c*y contributes c*gamma*scale
    Int z = -coeffs[1].z * scale;  // -b*z contributes b*beta*scale
    Int w = coeffs[0].z * scale;   // pairs with a

    a = canon(a + tau * x, tau2);
    b = canon(b + tau * y, tau2);
    c = canon(c + tau * z, tau2);
    d = canon(d + tau * w, tau2);
    tau = tau2;
  }

  HenselLift out;
  out.t = t;
  out.precision_exponent = std::uint64_t{1} << k;
  out.b = mat2(ring->from_int(a), ring->from_int(b), ring->from_int(c),
               ring->from_int(d));
  return out;
}

}  // namespace umx
