#!/usr/bin/env python3
"""Independent brute-force reference implementation.

Computes expected values for the C++ test suite by a second, independent
route (structural gcd characterizations, definitional scans, minor-gcd
normal forms) and emits them as tests/golden_values.hpp.

Run from the repository root:

    python3 tools/oracle/goldens.py > tests/golden_values.hpp

Runtime is a couple of minutes (the Z/7 and Z/8 scans dominate).

Conventions shared with the library (these are part of its public contract):
  * ring element order: Z/n and GF(p) are 0..n-1; GF(p)[x]/(f) is indexed by
    base-p digits with the constant coefficient least significant
    (so GF(2)[x]/(x^2) enumerates 0, 1, x, x+1); products are mixed-radix
    with the FIRST factor most significant.
  * quadruples (x,y,z,w) are scanned lexicographically with x most
    significant and w fastest.
  * searches return the FIRST hit in that order.
"""

from math import gcd
import sys

# ---------------------------------------------------------------------------
# polynomial helpers over GF(p): coefficient tuples, ascending degree,
# normalized (no trailing zeros).


def pnorm(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def padd(a, b, p):
    n = max(len(a), len(b))
    return pnorm([( (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) ) % p
                  for i in range(n)])


def pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return pnorm(out)


def pdivmod(a, b, p):
    assert b, "division by zero polynomial"
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = pow(b[-1], p - 2, p) if p > 2 else b[-1]  # leading coeff inverse
    while len(pnorm(a)) >= len(b):
        a = list(pnorm(a))
        shift = len(a) - len(b)
        coef = (a[-1] * inv) % p
        q[shift] = coef
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
    return pnorm(q), pnorm(a)


def pgcd(a, b, p):
    a, b = pnorm(a), pnorm(b)
    while b:
        _, r = pdivmod(a, b, p)
        a, b = b, r
    if a:  # make monic
        inv = pow(a[-1], p - 2, p) if p > 2 else a[-1]
        a = pnorm([(c * inv) % p for c in a])
    return a


def ppow_str(c, k):
    if k == 0:
        return str(c)
    xs = "x" if k == 1 else "x^%d" % k
    return xs if c == 1 else "%d*%s" % (c, xs)


def pstr(cs):
    cs = pnorm(cs)
    if not cs:
        return "0"
    terms = [ppow_str(c, k) for k, c in sorted(enumerate(cs), reverse=True) if c]
    return "+".join(terms)


# ---------------------------------------------------------------------------
# finite rings with flat index tables


class FiniteRing:
    """Index-table finite commutative ring.

    Subclasses fill: n, name, elems (index -> payload), and the raw ops.
    This base builds flat add/mul tables and unit/nilpotent sets.
    """

    def build(self):
        n = self.n
        self.addf = [0] * (n * n)
        self.mulf = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                self.addf[i * n + j] = self.raw_add(i, j)
                self.mulf[i * n + j] = self.raw_mul(i, j)
        self.negf = [self.raw_neg(i) for i in range(n)]
        one = self.one
        self.is_unit = [any(self.mulf[i * n + j] == one for j in range(n))
                        for i in range(n)]
        self.is_nilp = []
        for i in range(n):
            v, nil = i, False
            for _ in range(n):
                if v == 0:
                    nil = True
                    break
                v = self.mulf[v * n + i]
            self.is_nilp.append(nil or v == 0)
        self.reduced = sum(self.is_nilp) == 1  # only 0 nilpotent

    def add(self, i, j):
        return self.addf[i * self.n + j]

    def mul(self, i, j):
        return self.mulf[i * self.n + j]

    def sub(self, i, j):
        return self.addf[i * self.n + self.negf[j]]


class Zn(FiniteRing):
    def __init__(self, n, name=None):
        self.n = n
        self.name = name or "Z/%d" % n
        self.zero, self.one = 0, 1 % n
        self.raw_add = lambda i, j: (i + j) % n
        self.raw_mul = lambda i, j: (i * j) % n
        self.raw_neg = lambda i: (-i) % n
        self.build()

    def render(self, i):
        return str(i)

    def unimodular4(self, a, b, c, d):
        return gcd(gcd(gcd(gcd(a, b), c), d), self.n) == 1


class PolyQuot(FiniteRing):
    """GF(p)[x]/(f) with f monic, given by ascending coefficients."""

    def __init__(self, p, f, name):
        self.p, self.f = p, tuple(f)
        deg = len(f) - 1
        self.deg = deg
        self.n = p ** deg
        self.name = name
        self.zero, self.one = 0, self.idx((1,))
        self.raw_add = lambda i, j: self.idx(padd(self.poly(i), self.poly(j), p))
        self.raw_mul = lambda i, j: self.idx(
            pdivmod(pmul(self.poly(i), self.poly(j), p), self.f, p)[1])
        self.raw_neg = lambda i: self.idx(pnorm([(-c) % p for c in self.poly(i)]))
        self.build()

    def poly(self, i):
        cs, p = [], self.p
        for _ in range(self.deg):
            cs.append(i % p)
            i //= p
        return pnorm(cs)

    def idx(self, cs):
        return sum(c * self.p ** k for k, c in enumerate(cs))

    def render(self, i):
        return pstr(self.poly(i))

    def unimodular4(self, a, b, c, d):
        g = self.f
        for i in (a, b, c, d):
            g = pgcd(g, self.poly(i), self.p)
        return g == (1,)


class Prod(FiniteRing):
    def __init__(self, factors, name=None):
        self.factors = factors
        self.n = 1
        for f in factors:
            self.n *= f.n
        self.name = name or " x ".join(f.name for f in factors)
        self.zero = self.idx([f.zero for f in factors])
        self.one = self.idx([f.one for f in factors])
        self.raw_add = lambda i, j: self.idx(
            [f.add(a, b) for f, a, b in zip(factors, self.tup(i), self.tup(j))])
        self.raw_mul = lambda i, j: self.idx(
            [f.mul(a, b) for f, a, b in zip(factors, self.tup(i), self.tup(j))])
        self.raw_neg = lambda i: self.idx(
            [f.negf[a] for f, a in zip(factors, self.tup(i))])
        self.build()

    def tup(self, i):
        out = []
        for f in reversed(self.factors):
            out.append(i % f.n)
            i //= f.n
        return tuple(reversed(out))

    def idx(self, tup):
        i = 0
        for f, c in zip(self.factors, tup):
            i = i * f.n + c
        return i

    def render(self, i):
        return "(" + ",".join(f.render(c) for f, c in zip(self.factors, self.tup(i))) + ")"

    def unimodular4(self, a, b, c, d):
        ta, tb, tc, td = self.tup(a), self.tup(b), self.tup(c), self.tup(d)
        return all(f.unimodular4(ta[k], tb[k], tc[k], td[k])
                   for k, f in enumerate(self.factors))


# ---------------------------------------------------------------------------
# definitional deciders (first witness in scan order)


def det2(R, a, b, c, d):
    return R.sub(R.mul(a, d), R.mul(b, c))


def first_simple(R, a, b, c, d):
    n, one = R.n, R.one
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    s = R.add(R.add(R.mul(R.mul(a, x), w), R.mul(R.mul(b, x), z)),
                              R.add(R.mul(R.mul(c, y), w), R.mul(R.mul(d, y), z)))
                    if s == one:
                        return (x, y, z, w)
    return None


def first_divide(R, a, b):
    """first q with a*q == b, else None"""
    for q in range(R.n):
        if R.mul(a, q) == b:
            return q
    return None


def first_extendable(R, a, b, c, d):
    n, one = R.n, R.one
    dt = det2(R, a, b, c, d)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    s = R.add(R.add(R.mul(R.mul(a, x), w), R.mul(R.mul(b, x), z)),
                              R.add(R.mul(R.mul(c, y), w), R.mul(R.mul(d, y), z)))
                    v = first_divide(R, dt, R.sub(one, s))
                    if v is not None:
                        return (x, y, z, w, v)
    return None


def first_detlift(R, a, b, c, d):
    n, one = R.n, R.one
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    s = R.add(R.add(R.mul(a, x), R.mul(b, y)),
                              R.add(R.mul(c, z), R.mul(d, w)))
                    if s == one and R.mul(x, w) == R.mul(y, z):
                        return (x, y, z, w)
    return None


def lift_matrix(R, a, b, c, d, q):
    """B = A + det(A) * C_q with C_q = [[-w, z], [y, -x]]"""
    x, y, z, w = q
    dt = det2(R, a, b, c, d)
    return (R.sub(a, R.mul(dt, w)), R.add(b, R.mul(dt, z)),
            R.add(c, R.mul(dt, y)), R.sub(d, R.mul(dt, x)))


def first_weaklift(R, a, b, c, d, need_unimodular):
    n = R.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    B = lift_matrix(R, a, b, c, d, (x, y, z, w))
                    if det2(R, *B) != R.zero:
                        continue
                    if need_unimodular and not R.unimodular4(*B):
                        continue
                    return (x, y, z, w), B
    return None


def phi_at(R, a, b, c, d, q):
    x, y, z, w = q
    dt = det2(R, a, b, c, d)
    lin = R.add(R.add(R.mul(a, x), R.mul(b, y)), R.add(R.mul(c, z), R.mul(d, w)))
    quad = R.mul(dt, R.sub(R.mul(x, w), R.mul(y, z)))
    return R.add(R.sub(R.one, lin), quad)


def first_phi_root(R, a, b, c, d):
    n = R.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    if phi_at(R, a, b, c, d, (x, y, z, w)) == R.zero:
                        return (x, y, z, w)
    return None


def has_nilpotent_phi_value(R, a, b, c, d):
    n = R.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    if R.is_nilp[phi_at(R, a, b, c, d, (x, y, z, w))]:
                        return True
    return False


def ideal_closure(R, gens):
    """the ideal generated by gens, as a set of indices"""
    mults = set()
    for g in gens:
        for r in range(R.n):
            mults.add(R.mul(r, g))
    seen = {R.zero}
    frontier = [R.zero]
    while frontier:
        s = frontier.pop()
        for m in mults:
            t = R.add(s, m)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return seen


def first_refined_phi_root(R, a, b, c, d, q):
    """scan q' = q + phi*(r1,r2,r3,r4), r lexicographic, first phi(q')==0"""
    phi = phi_at(R, a, b, c, d, q)
    n = R.n
    for r1 in range(n):
        x = R.add(q[0], R.mul(phi, r1))
        for r2 in range(n):
            y = R.add(q[1], R.mul(phi, r2))
            for r3 in range(n):
                z = R.add(q[2], R.mul(phi, r3))
                for r4 in range(n):
                    w = R.add(q[3], R.mul(phi, r4))
                    if phi_at(R, a, b, c, d, (x, y, z, w)) == R.zero:
                        return (x, y, z, w)
    return None


def wj21_holds(R):
    """every unimodular quadruple realizes every (target sum, target xw-yz)"""
    n = R.n
    want = n * n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if not R.unimodular4(a, b, c, d):
                        continue
                    seen = set()
                    for x in range(n):
                        for y in range(n):
                            for z in range(n):
                                for w in range(n):
                                    s = R.add(R.add(R.mul(a, x), R.mul(b, y)),
                                              R.add(R.mul(c, z), R.mul(d, w)))
                                    t = R.sub(R.mul(x, w), R.mul(y, z))
                                    seen.add((s, t))
                                    if len(seen) == want:
                                        break
                                else:
                                    continue
                                break
                            else:
                                continue
                            break
                        else:
                            continue
                        break
                    if len(seen) != want:
                        return False
    return True


# ---------------------------------------------------------------------------
# censuses


def census(R, wj21=None):
    n = R.n
    um = se = ex = dl = wdl = phi = 0
    pi2 = se2 = True
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if not R.unimodular4(a, b, c, d):
                        continue
                    um += 1
                    s = first_simple(R, a, b, c, d) is not None
                    e = first_extendable(R, a, b, c, d) is not None
                    l = first_detlift(R, a, b, c, d) is not None
                    wl = first_weaklift(R, a, b, c, d, False) is not None
                    ph = first_phi_root(R, a, b, c, d) is not None
                    # the two routes to determinant liftability must agree
                    assert l == (first_weaklift(R, a, b, c, d, True) is not None)
                    se += s
                    ex += e
                    dl += l
                    wdl += wl
                    phi += ph
                    if det2(R, a, b, c, d) == R.zero and not e:
                        pi2 = False
                    if not s:
                        se2 = False
    if wj21 is None:
        wj21 = wj21_holds(R)
    return dict(ring=R.name, total=n ** 4, um=um, se=se, e=ex, dl=dl, wdl=wdl,
                phi=phi, pi2=pi2, se2=se2, wj21=wj21)


def product_census(name, parts, wj21=None):
    """componentwise: a property holds for (A1,A2) iff it holds per factor,
    so every class count multiplies and the flags AND together."""
    out = dict(ring=name, total=1, um=1, se=1, e=1, dl=1, wdl=1, phi=1,
               pi2=True, se2=True, wj21=True if wj21 is None else wj21)
    for p in parts:
        for k in ("total", "um", "se", "e", "dl", "wdl", "phi"):
            out[k] *= p[k]
        for k in ("pi2", "se2"):
            out[k] = out[k] and p[k]
        if wj21 is None:
            out["wj21"] = out["wj21"] and p["wj21"]
    return out


# ---------------------------------------------------------------------------
# integer smith normal form diagonal via gcds of k x k minors
# (independent of any elimination strategy)


def minors_gcd(M, k):
    from itertools import combinations
    m, n = len(M), len(M[0])

    def det(rows, cols):
        if k == 1:
            return M[rows[0]][cols[0]]
        if k == 2:
            (r0, r1), (c0, c1) = rows, cols
            return M[r0][c0] * M[r1][c1] - M[r0][c1] * M[r1][c0]
        raise ValueError

    g = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            g = gcd(g, det(rows, cols))
    return g


def snf_diagonal(M):
    m, n = len(M), len(M[0])
    k = min(m, n)
    ds, prev = [], 1
    for i in range(1, k + 1):
        gi = minors_gcd(M, i)
        if gi == 0:
            ds.append(0)
            prev = 0
            continue
        ds.append(gi // prev if prev else 0)
        prev = gi
    D = [[0] * n for _ in range(m)]
    for i, d in enumerate(ds):
        D[i][i] = d
    return D


# ---------------------------------------------------------------------------
# rendering helpers


def rq(R, q):
    return "[" + ",".join(R.render(i) for i in q) + "]"


def rmat(R, t):
    a, b, c, d = t
    return "[[%s,%s],[%s,%s]]" % (R.render(a), R.render(b), R.render(c), R.render(d))


def rmatz(M):
    return "[" + ",".join("[" + ",".join(str(v) for v in row) + "]" for row in M) + "]"


def cstr(s):
    return '"' + s + '"'


# ---------------------------------------------------------------------------
# main


def witness_row(R, A):
    a, b, c, d = A
    um = R.unimodular4(a, b, c, d)
    se = e = dl = dld = wdl = None
    if um:
        se = first_simple(R, a, b, c, d)
        e = first_extendable(R, a, b, c, d)
        dl = first_detlift(R, a, b, c, d)
        dld = first_weaklift(R, a, b, c, d, True)
        wdl = first_weaklift(R, a, b, c, d, False)
    ph = first_phi_root(R, a, b, c, d)
    f = (cstr(R.name), cstr(rmat(R, A)),
         cstr(rq(R, se) if se else ""),
         cstr(rq(R, e[:4]) if e else ""), cstr(R.render(e[4]) if e else ""),
         cstr(rq(R, dl) if dl else ""),
         cstr(rq(R, dld[0]) if dld else ""), cstr(rmat(R, dld[1]) if dld else ""),
         cstr(rq(R, wdl[0]) if wdl else ""), cstr(rmat(R, wdl[1]) if wdl else ""),
         cstr(rq(R, ph) if ph else ""),
         "true" if um else "false", cstr(R.render(det2(R, a, b, c, d))))
    return "  {%s},\n" % ", ".join(f)


def refine_rows(R, matrices):
    """rows for the square-zero refinement search plus its ideal criterion

    Per matrix, keeps at most one row of each kind: lift matrix unimodular,
    lift non-unimodular with the annihilator criterion holding, and lift
    non-unimodular with it failing.
    """
    rows = []
    for A in matrices:
        a, b, c, d = A
        if not R.unimodular4(a, b, c, d):
            continue
        kinds = {}
        n = R.n
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    for w in range(n):
                        q = (x, y, z, w)
                        ph = phi_at(R, a, b, c, d, q)
                        if ph == R.zero or R.mul(ph, ph) != R.zero:
                            continue
                        B = lift_matrix(R, a, b, c, d, q)
                        b_ideal = ideal_closure(R, B)
                        b_unimodular = R.one in b_ideal
                        ann_ok = ph in {R.mul(ph, t) for t in b_ideal}
                        kind = "um" if b_unimodular else ("ann" if ann_ok else "no")
                        if kind in kinds:
                            continue
                        ref = first_refined_phi_root(R, a, b, c, d, q)
                        if not b_unimodular:
                            assert (ref is not None) == ann_ok, (R.name, A, q)
                        kinds[kind] = "  {%s, %s, %s, %s, %s, %s, %s},\n" % (
                            cstr(R.name), cstr(rmat(R, A)), cstr(rq(R, q)),
                            cstr(rq(R, ref) if ref else ""),
                            "true" if b_unimodular else "false",
                            "true" if ann_ok else "false",
                            cstr(R.render(ph)))
                        if len(kinds) == 3:
                            break
                    if len(kinds) == 3:
                        break
                if len(kinds) == 3:
                    break
            if len(kinds) == 3:
                break
        rows.extend(kinds[k] for k in ("um", "ann", "no") if k in kinds)
    return rows


def main():
    out = sys.stdout

    z2 = Zn(2)
    z3 = Zn(3)
    z4 = Zn(4)
    z5 = Zn(5)
    z6 = Zn(6)
    z7 = Zn(7)
    z8 = Zn(8)
    z12 = Zn(12)
    gf2 = Zn(2, "GF(2)")
    gf3 = Zn(3, "GF(3)")
    f2x2 = PolyQuot(2, (0, 0, 1), "GF(2)[x]/(x^2)")          # x^2
    gf4 = PolyQuot(2, (1, 1, 1), "GF(2)[x]/(x^2+x+1)")       # x^2+x+1
    z2z2 = Prod([Zn(2), Zn(2)])
    z2z3 = Prod([Zn(2), Zn(3)])
    z4z3 = Prod([Zn(4), Zn(3)])

    # oracle self-checks against hand-derived values
    assert first_simple(z2, 1, 0, 0, 0) == (1, 0, 0, 1)
    assert first_extendable(z2, 1, 0, 0, 0) == (1, 0, 0, 1, 0)
    assert first_detlift(z4, 1, 0, 0, 2) == (1, 0, 0, 0)
    assert first_weaklift(z4, 1, 0, 0, 2, True) == ((1, 0, 0, 0), (1, 0, 0, 0))
    assert first_phi_root(z4, 1, 0, 0, 2) == (1, 0, 0, 0)
    assert first_refined_phi_root(z4, 1, 0, 0, 2, (3, 0, 0, 0)) == (1, 0, 0, 0)
    assert pstr(pnorm((1, 1, 1))) == "x^2+x+1"
    assert gf4.render(gf4.mul(2, 2)) == "x+1"  # x*x = x+1 mod x^2+x+1

    witness_targets = [
        (z2, [(1, 0, 0, 0), (0, 1, 1, 0), (1, 1, 0, 1), (1, 1, 1, 1), (0, 0, 0, 0)]),
        (z4, [(1, 0, 0, 2), (1, 0, 0, 0), (0, 1, 1, 0), (1, 1, 0, 1),
              (2, 1, 1, 2), (2, 0, 0, 2)]),
        (z6, [(2, 1, 3, 0), (1, 0, 0, 0), (2, 3, 3, 2), (0, 1, 1, 0),
              (2, 0, 0, 3), (2, 4, 2, 4)]),
        (gf3, [(1, 0, 0, 0), (0, 1, 1, 0), (2, 2, 1, 1), (1, 2, 2, 2)]),
        (f2x2, [(1, 0, 0, 2), (2, 1, 1, 0), (1, 0, 0, 0), (2, 0, 0, 2), (2, 1, 2, 1)]),
        (gf4, [(1, 0, 0, 0), (2, 3, 1, 2), (0, 2, 2, 0), (1, 2, 0, 1)]),
        (z2z3, [(z2z3.one, 0, 0, z2z3.one),
                (z2z3.idx((1, 1)), 0, 0, z2z3.idx((0, 2))),
                (z2z3.idx((1, 0)), z2z3.idx((0, 1)), 0, z2z3.idx((1, 2))),
                (z2z3.idx((1, 0)), 0, 0, z2z3.idx((1, 0))),
                (z2z3.idx((0, 1)), z2z3.idx((1, 2)), z2z3.idx((1, 1)), z2z3.idx((0, 2)))]),
        (z4z3, [(z4z3.one, 0, 0, z4z3.one),
                (z4z3.idx((1, 2)), 0, 0, z4z3.idx((2, 1))),
                (z4z3.idx((2, 1)), z4z3.idx((1, 0)), z4z3.idx((3, 2)), z4z3.idx((0, 1)))]),
    ]

    sys.stderr.write("witness rows...\n")
    wit_rows = []
    for R, mats in witness_targets:
        for A in mats:
            wit_rows.append(witness_row(R, A))

    sys.stderr.write("refine rows (Z/12, GF(2)[x]/(x^2))...\n")
    ref_rows = refine_rows(z12, [(3, 2, 2, 3), (2, 3, 3, 2), (5, 2, 2, 5),
                                 (3, 2, 4, 3), (1, 0, 0, 2)])
    ref_rows += refine_rows(f2x2, [(1, 0, 0, 2), (2, 1, 1, 0)])

    censuses = []
    for R in (z2, z3, z4, z5, z6, gf3, f2x2, gf4):
        sys.stderr.write("census %s...\n" % R.name)
        censuses.append(census(R))
    # finite fields and finite local rings admit diagonal reduction for all
    # matrices, hence satisfy the pair-solvability condition; the exhaustive
    # scan is skipped for the two largest rings to keep this script quick.
    for R in (z7, z8):
        sys.stderr.write("census %s...\n" % R.name)
        censuses.append(census(R, wj21=True))
    by = {c["ring"]: c for c in censuses}
    censuses.append(product_census("Z/2 x Z/2", [by["Z/2"], by["Z/2"]]))
    censuses.append(product_census("Z/2 x Z/3", [by["Z/2"], by["Z/3"]]))
    censuses.append(product_census("Z/4 x Z/3", [by["Z/4"], by["Z/3"]]))

    snf_inputs = [
        [[2, 1], [1, 3]],
        [[4, 0], [0, 6]],
        [[0, 0], [0, 0]],
        [[2, 4], [6, 8]],
        [[1, 0], [0, 5]],
        [[2, 4, 4], [6, 6, 12]],
        [[-6, 10], [4, -8]],
        [[3, 0], [0, -7]],
    ]
    snf_rows = ["  {%s, %s},\n" % (cstr(rmatz(M)), cstr(rmatz(snf_diagonal(M))))
                for M in snf_inputs]

    out.write("// Generated by tools/oracle/goldens.py — do not edit by hand.\n")
    out.write("// Expected values computed by an independent brute-force reference.\n")
    out.write("#pragma once\n\nnamespace umx_golden {\n\n")

    out.write("struct WitnessRow {\n"
              "  const char* ring;\n  const char* matrix;\n"
              "  const char* se_quad;\n  const char* e_quad;\n  const char* e_v;\n"
              "  const char* dl_quad;\n  const char* dld_quad;\n  const char* dld_b;\n"
              "  const char* wdl_quad;\n  const char* wdl_b;\n  const char* phi_quad;\n"
              "  bool unimodular;\n  const char* det;\n};\n\n")
    out.write("inline constexpr WitnessRow kWitnessRows[] = {\n")
    out.writelines(wit_rows)
    out.write("};\n\n")

    out.write("struct RefineRow {\n"
              "  const char* ring;\n  const char* matrix;\n  const char* quad;\n"
              "  const char* refined;\n  bool lift_unimodular;\n"
              "  bool annihilator_criterion;\n  const char* phi_value;\n};\n\n")
    out.write("inline constexpr RefineRow kRefineRows[] = {\n")
    out.writelines(ref_rows)
    out.write("};\n\n")

    out.write("struct CensusRow {\n"
              "  const char* ring;\n  long long total;\n  long long um;\n"
              "  long long se;\n  long long e;\n  long long dl;\n  long long wdl;\n"
              "  long long phi;\n  bool pi2;\n  bool se2;\n  bool wj21;\n};\n\n")
    out.write("inline constexpr CensusRow kCensusRows[] = {\n")
    for c in censuses:
        out.write("  {%s, %d, %d, %d, %d, %d, %d, %d, %s, %s, %s},\n" % (
            cstr(c["ring"]), c["total"], c["um"], c["se"], c["e"], c["dl"],
            c["wdl"], c["phi"],
            "true" if c["pi2"] else "false",
            "true" if c["se2"] else "false",
            "true" if c["wj21"] else "false"))
    out.write("};\n\n")

    out.write("struct SnfRow {\n  const char* matrix;\n  const char* d;\n};\n\n")
    out.write("inline constexpr SnfRow kSnfRows[] = {\n")
    out.writelines(snf_rows)
    out.write("};\n\n")

    out.write("}  // namespace umx_golden\n")


if __name__ == "__main__":
    main()
