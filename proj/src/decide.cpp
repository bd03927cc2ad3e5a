#include "umx/decide.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "umx/table.hpp"

namespace umx {

namespace {

struct MatIdx {
  const FiniteRingTable* t;
  std::uint32_t a, b, c, d, det;
};

// resolves A against the shared table for its ring and checks the common
// preconditions of the exhaustive deciders
MatIdx prepare(const Mat2& A, bool require_unimodular) {
  const Ring& ring = A.ring();
  if (!ring->finite())
    fail(Err::InfiniteRing, "exhaustive decision needs a finite ring, got " +
                                ring->name());
  const FiniteRingTable& t = table_for(ring);
  MatIdx m;
  m.t = &t;
  m.a = static_cast<std::uint32_t>(ring->index_of(A.a));
  m.b = static_cast<std::uint32_t>(ring->index_of(A.b));
  m.c = static_cast<std::uint32_t>(ring->index_of(A.c));
  m.d = static_cast<std::uint32_t>(ring->index_of(A.d));
  m.det = t.sub(t.mul(m.a, m.d), t.mul(m.b, m.c));
  if (require_unimodular && !t.unimodular4(m.a, m.b, m.c, m.d))
    fail(Err::NotUnimodular,
         "matrix entries do not generate the unit ideal: " + to_string(A));
  return m;
}

std::array<Elem, 4> quad_elems(const FiniteRingTable& t, std::uint32_t x,
                               std::uint32_t y, std::uint32_t z,
                               std::uint32_t w) {
  return {t.elem(x), t.elem(y), t.elem(z), t.elem(w)};
}

}  // namespace

std::optional<Witness> decide_simply_extendable(const Mat2& A) {
  MatIdx m = prepare(A, true);
  const FiniteRingTable& t = *m.t;
  const std::uint32_t n = t.n();
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t ax = t.mul(m.a, x), bx = t.mul(m.b, x);
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t cy = t.mul(m.c, y), dy = t.mul(m.d, y);
      for (std::uint32_t z = 0; z < n; ++z) {
        const std::uint32_t bxz_dyz = t.add(t.mul(bx, z), t.mul(dy, z));
        for (std::uint32_t w = 0; w < n; ++w) {
          const std::uint32_t s =
              t.add(t.add(t.mul(ax, w), t.mul(cy, w)), bxz_dyz);
          if (s == t.one())
            return Witness::simple_extension(A, quad_elems(t, x, y, z, w));
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> decide_extendable(const Mat2& A) {
  MatIdx m = prepare(A, true);
  const FiniteRingTable& t = *m.t;
  const std::uint32_t n = t.n();
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t ax = t.mul(m.a, x), bx = t.mul(m.b, x);
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t cy = t.mul(m.c, y), dy = t.mul(m.d, y);
      for (std::uint32_t z = 0; z < n; ++z) {
        const std::uint32_t bxz_dyz = t.add(t.mul(bx, z), t.mul(dy, z));
        for (std::uint32_t w = 0; w < n; ++w) {
          const std::uint32_t s =
              t.add(t.add(t.mul(ax, w), t.mul(cy, w)), bxz_dyz);
          const std::uint16_t v = t.first_div(m.det, t.sub(t.one(), s));
          if (v != FiniteRingTable::kNoDiv)
            return Witness::extension(A, quad_elems(t, x, y, z, w), t.elem(v));
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> decide_det_liftable(const Mat2& A) {
  MatIdx m = prepare(A, true);
  const FiniteRingTable& t = *m.t;
  const std::uint32_t n = t.n();
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t ax = t.mul(m.a, x);
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t axby = t.add(ax, t.mul(m.b, y));
      for (std::uint32_t z = 0; z < n; ++z) {
        const std::uint32_t lin3 = t.add(axby, t.mul(m.c, z));
        const std::uint32_t yz = t.mul(y, z);
        for (std::uint32_t w = 0; w < n; ++w) {
          if (t.add(lin3, t.mul(m.d, w)) == t.one() && t.mul(x, w) == yz)
            return Witness::det_lift(A, quad_elems(t, x, y, z, w));
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// shared scan over companion matrices B = A + det(A)*C_quad with
// det(B) = 0; the direct det-liftability decider additionally requires B
// unimodular
std::optional<Witness> weak_lift_scan(const Mat2& A, bool require_unimodular) {
  MatIdx m = prepare(A, true);
  const FiniteRingTable& t = *m.t;
  const std::uint32_t n = t.n();
  std::vector<std::uint32_t> dm(n);  // det(A) * i
  for (std::uint32_t i = 0; i < n; ++i) dm[i] = t.mul(m.det, i);
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t bd = t.sub(m.d, dm[x]);
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t bc = t.add(m.c, dm[y]);
      for (std::uint32_t z = 0; z < n; ++z) {
        const std::uint32_t bb = t.add(m.b, dm[z]);
        const std::uint32_t bbbc = t.mul(bb, bc);
        for (std::uint32_t w = 0; w < n; ++w) {
          const std::uint32_t ba = t.sub(m.a, dm[w]);
          if (t.sub(t.mul(ba, bd), bbbc) != t.zero()) continue;
          if (require_unimodular && !t.unimodular4(ba, bb, bc, bd)) continue;
          return Witness::weak_lift(A, quad_elems(t, x, y, z, w),
                                    require_unimodular);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> decide_det_liftable_direct(const Mat2& A) {
  return weak_lift_scan(A, true);
}

std::optional<Witness> decide_weakly_det_liftable(const Mat2& A) {
  return weak_lift_scan(A, false);
}

std::optional<std::array<Elem, 4>> phi_root_search(const Mat2& A) {
  MatIdx m = prepare(A, false);
  const FiniteRingTable& t = *m.t;
  const std::uint32_t n = t.n();
  // Phi = 1 - ax - by - cz - dw + det(A)(xw - yz)
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t s1 = t.sub(t.one(), t.mul(m.a, x));
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t s2 = t.sub(s1, t.mul(m.b, y));
      for (std::uint32_t z = 0; z < n; ++z) {
        const std::uint32_t s3 = t.sub(s2, t.mul(m.c, z));
        const std::uint32_t yz = t.mul(y, z);
        for (std::uint32_t w = 0; w < n; ++w) {
          const std::uint32_t phi = t.add(
              t.sub(s3, t.mul(m.d, w)), t.mul(m.det, t.sub(t.mul(x, w), yz)));
          if (phi == t.zero())
            return quad_elems(t, x, y, z, w);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Elem, 4>> refine_phi_root(
    const Mat2& A, const std::array<Elem, 4>& quad) {
  const Ring& ring = A.ring();
  for (const Elem& e : quad) ring->check_mine(e);
  Elem phi = phi_eval(A, quad);
  if (ring->is_zero(phi))
    fail(Err::PreconditionFailed, "Phi(quad) is zero; nothing to refine");
  if (!ring->is_zero(ring->mul(phi, phi)))
    fail(Err::PreconditionFailed, "Phi(quad)^2 is nonzero");
  if (!ring->finite())
    fail(Err::InfiniteRing, "refinement scan needs a finite ring, got " +
                                ring->name());

  MatIdx m = prepare(A, false);
  const FiniteRingTable& t = *m.t;
  const std::uint32_t n = t.n();
  const std::uint32_t phi_i = static_cast<std::uint32_t>(ring->index_of(phi));
  std::vector<std::uint32_t> pm(n);  // Phi(quad) * r
  for (std::uint32_t r = 0; r < n; ++r) pm[r] = t.mul(phi_i, r);
  std::array<std::uint32_t, 4> q{};
  for (int i = 0; i < 4; ++i)
    q[i] = static_cast<std::uint32_t>(ring->index_of(quad[i]));

  for (std::uint32_t r1 = 0; r1 < n; ++r1) {
    const std::uint32_t x = t.add(q[0], pm[r1]);
    const std::uint32_t s1 = t.sub(t.one(), t.mul(m.a, x));
    for (std::uint32_t r2 = 0; r2 < n; ++r2) {
      const std::uint32_t y = t.add(q[1], pm[r2]);
      const std::uint32_t s2 = t.sub(s1, t.mul(m.b, y));
      for (std::uint32_t r3 = 0; r3 < n; ++r3) {
        const std::uint32_t z = t.add(q[2], pm[r3]);
        const std::uint32_t s3 = t.sub(s2, t.mul(m.c, z));
        const std::uint32_t yz = t.mul(y, z);
        for (std::uint32_t r4 = 0; r4 < n; ++r4) {
          const std::uint32_t w = t.add(q[3], pm[r4]);
          const std::uint32_t val = t.add(
              t.sub(s3, t.mul(m.d, w)), t.mul(m.det, t.sub(t.mul(x, w), yz)));
          if (val == t.zero())
            return quad_elems(t, x, y, z, w);
        }
      }
    }
  }
  return std::nullopt;
}

Wj21Report wj21_check(const Ring& ring) {
  if (!ring->finite())
    fail(Err::InfiniteRing, "WJ check needs a finite ring, got " +
                                ring->name());
  const FiniteRingTable& t = table_for(ring);
  const std::uint32_t n = t.n();
  const std::uint32_t pairs = n * n;
  std::vector<char> covered(pairs);

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          if (!t.unimodular4(a, b, c, d)) continue;
          std::fill(covered.begin(), covered.end(), 0);
          std::uint32_t remaining = pairs;
          for (std::uint32_t x = 0; x < n && remaining; ++x) {
            const std::uint32_t ax = t.mul(a, x);
            for (std::uint32_t y = 0; y < n && remaining; ++y) {
              const std::uint32_t axby = t.add(ax, t.mul(b, y));
              for (std::uint32_t z = 0; z < n && remaining; ++z) {
                const std::uint32_t lin3 = t.add(axby, t.mul(c, z));
                const std::uint32_t yz = t.mul(y, z);
                for (std::uint32_t w = 0; w < n && remaining; ++w) {
                  const std::uint32_t psi = t.add(lin3, t.mul(d, w));
                  const std::uint32_t delta = t.sub(t.mul(x, w), yz);
                  char& slot = covered[psi * n + delta];
                  if (!slot) {
                    slot = 1;
                    --remaining;
                  }
                }
              }
            }
          }
          if (remaining) {
            for (std::uint32_t psi = 0; psi < n; ++psi)
              for (std::uint32_t delta = 0; delta < n; ++delta)
                if (!covered[psi * n + delta]) {
                  Wj21Report rep;
                  rep.holds = false;
                  rep.counterexample = Wj21Counterexample{
                      t.elem(a),   t.elem(b),     t.elem(c),
                      t.elem(d),   t.elem(psi),   t.elem(delta)};
                  return rep;
                }
          }
        }
  Wj21Report rep;
  rep.holds = true;
  return rep;
}

Classification classify(const Mat2& A) {
  const Ring& ring = A.ring();
  if (!ring->finite())
    fail(Err::InfiniteRing, "classification needs a finite ring, got " +
                                ring->name());
  const FiniteRingTable& t = table_for(ring);
  const std::uint32_t ia = static_cast<std::uint32_t>(ring->index_of(A.a));
  const std::uint32_t ib = static_cast<std::uint32_t>(ring->index_of(A.b));
  const std::uint32_t ic = static_cast<std::uint32_t>(ring->index_of(A.c));
  const std::uint32_t id = static_cast<std::uint32_t>(ring->index_of(A.d));

  Classification out;
  out.det = det2(A);
  out.det_is_nilpotent = ring->is_nilpotent(out.det);
  out.det_is_zero_divisor = ring->is_zero_divisor(out.det);
  out.unimodular = t.unimodular4(ia, ib, ic, id);
  if (auto root = phi_root_search(A))
    out.phi_root = Witness::phi_root(A, *root);
  if (out.unimodular) {
    out.simply_extendable = decide_simply_extendable(A);
    out.extendable = decide_extendable(A);
    out.det_liftable = decide_det_liftable(A);
    out.det_liftable_direct = decide_det_liftable_direct(A);
    out.weakly_det_liftable = decide_weakly_det_liftable(A);
    if (out.det_liftable.has_value() != out.det_liftable_direct.has_value())
      throw std::logic_error(
          "classification invariant violated: det_liftable and "
          "det_liftable_direct disagree on presence for " + to_string(A) +
          " over " + ring->name());
  }
  return out;
}

}  // namespace umx
