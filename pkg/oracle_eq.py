"""Equivariant-localization oracle for the S-equivariant homology product.

Computes [X^lam (+) X^mu] in H^T_*(Gr(a+c, n)) by fixed-point localization:
  - restrictions of Schubert classes via factorial Schur polynomials,
  - pushforward along the direct-sum embedding (normal-bundle Euler factor),
  - triangular solve for the Schubert-basis coefficients c_nu(y),
  - specialization y_i -> w_i * t with w = 0^a 1^{b+d} 0^c.

Scratch tool for rule derivation; not part of the package.
"""
import itertools
from functools import lru_cache

# ---------------------------------------------------------------- polynomials


class Poly:
    """Multivariate integer polynomial in y_1..y_n, dict exponent -> coeff."""

    __slots__ = ("n", "c")

    def __init__(self, n, c=None):
        self.n = n
        self.c = {}
        if c:
            for k, v in c.items():
                if v:
                    self.c[k] = v

    @staticmethod
    def const(n, v):
        if v == 0:
            return Poly(n)
        return Poly(n, {(0,) * n: v})

    @staticmethod
    def var(n, i):
        """y_i, 1-indexed."""
        e = [0] * n
        e[i - 1] = 1
        return Poly(n, {tuple(e): 1})

    @staticmethod
    def linear(n, j, i):
        """y_j - y_i (either index may be 0 meaning 'the constant 0')."""
        p = Poly(n)
        if j:
            p = p + Poly.var(n, j)
        if i:
            p = p - Poly.var(n, i)
        return p

    def __add__(self, o):
        out = dict(self.c)
        for k, v in o.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return Poly(self.n, out)

    def __sub__(self, o):
        out = dict(self.c)
        for k, v in o.c.items():
            w = out.get(k, 0) - v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return Poly(self.n, out)

    def __mul__(self, o):
        if isinstance(o, int):
            return Poly(self.n, {k: v * o for k, v in self.c.items()})
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in o.c.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                w = out.get(k, 0) + v1 * v2
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return Poly(self.n, out)

    def is_zero(self):
        return not self.c

    def __eq__(self, o):
        return isinstance(o, Poly) and self.c == o.c

    def div_linear(self, j, i):
        """Exact quotient by (y_j - y_i); raises if not divisible."""
        # Horner in y_j: write self = sum_m A_m(other vars) y_j^m.
        jj = j - 1
        by_deg = {}
        for k, v in self.c.items():
            m = k[jj]
            rest = k[:jj] + (0,) + k[jj + 1:]
            by_deg.setdefault(m, {})[rest] = v
        if not by_deg:
            return Poly(self.n)
        top = max(by_deg)
        # quotient coefficients Q_m with A = (y_j - y_i) Q + R
        yi = Poly.var(self.n, i) if i else Poly.const(self.n, 0)
        q_by_deg = {}
        carry = Poly(self.n)
        for m in range(top, 0, -1):
            a_m = Poly(self.n, by_deg.get(m, {}))
            q = a_m + carry
            q_by_deg[m - 1] = q
            carry = q * yi
        rem = Poly(self.n, by_deg.get(0, {})) + carry
        if not rem.is_zero():
            raise ArithmeticError("not divisible by linear form")
        out = Poly(self.n)
        for m, q in q_by_deg.items():
            for k, v in q.c.items():
                kk = list(k)
                kk[jj] += m
                kk = tuple(kk)
                out.c[kk] = out.c.get(kk, 0) + v
        out.c = {k: v for k, v in out.c.items() if v}
        return out

    def specialize01(self, weights):
        """y_i -> weights[i-1] * t; returns dict t-degree -> coeff."""
        out = {}
        for k, v in self.c.items():
            deg = 0
            ok = True
            for e, w in zip(k, weights):
                if e:
                    if w == 0:
                        ok = False
                        break
                    deg += e
            if ok:
                out[deg] = out.get(deg, 0) + v
        return {d: v for d, v in out.items() if v}


def prod(polys, n):
    out = Poly.const(n, 1)
    for p in polys:
        out = out * p
    return out


# -------------------------------------------------------- Schubert machinery

def code_subset(nu, k):
    """The k-subset {nu_{k+1-i} + i}."""
    parts = list(nu) + [0] * (k - len(nu))
    return tuple(sorted(parts[k - i] + i for i in range(1, k + 1)))


def subset_to_partition(I):
    k = len(I)
    parts = sorted((I[i] - (i + 1) for i in range(k)), reverse=True)
    return tuple(p for p in parts if p)


def gale_le(J, I):
    return all(a <= b for a, b in zip(J, I))


def partitions_in_box(rows, cols):
    if rows == 0:
        yield ()
        return
    for first in range(cols, -1, -1):
        for rest in partitions_in_box(rows - 1, first):
            yield (first,) + rest


def ssyt(shape, maxval):
    """All semistandard tableaux of shape with entries in [1, maxval]."""
    rows = len(shape)
    if rows == 0:
        yield ()
        return

    def fill(r, c, cur):
        if r == rows:
            yield tuple(tuple(row) for row in cur)
            return
        if c == shape[r]:
            yield from fill(r + 1, 0, cur)
            return
        lo = 1
        if c > 0:
            lo = max(lo, cur[r][c - 1])
        if r > 0:
            lo = max(lo, cur[r - 1][c] + 1)
        for v in range(lo, maxval + 1):
            cur[r].append(v)
            yield from fill(r, c + 1, cur)
            cur[r].pop()

    yield from fill(0, 0, [[] for _ in range(rows)])


def factorial_schur(nu, xlabels, alabels, n):
    """sum over SSYT of prod (y_{x_{T(cell)}} - y_{a_{T(cell)+col-row}}).

    xlabels: tuple of k coordinate labels (y-indices, or 0 = zero).
    alabels: tuple of coordinate labels indexed from 1; index out of range
    means the factor's a-part is 0.
    """
    k = len(xlabels)
    total = Poly(n)
    for T in ssyt(nu, k):
        term = Poly.const(n, 1)
        ok = True
        for r, row in enumerate(T):
            for c, tv in enumerate(row):
                ai = tv + (c + 1) - (r + 1)
                alab = alabels[ai - 1] if 1 <= ai <= len(alabels) else 0
                xlab = xlabels[tv - 1]
                f = Poly.linear(n, xlab, alab)
                if f.is_zero():
                    ok = False
                    break
                term = term * f
            if not ok:
                break
        if ok:
            total = total + term
    return total


def box_complement(nu, k, m):
    """Rotated complement of nu inside the k x (m-k) box."""
    parts = list(nu) + [0] * (k - len(nu))
    comp = [(m - k) - parts[k - 1 - i] for i in range(k)]
    return tuple(p for p in comp if p)


class SchubertRing:
    """Schubert restriction tables for Gr(k, coords) in ambient y_1..y_n.

    coords: ordered tuple of ambient y-labels for this Grassmannian.
    Convention: X^nu = closure of the cell through e_{code_subset(nu)}
    for the ascending coordinate flag; dim X^nu = |nu|; its fixed points
    are the J with J <= code_subset(nu) componentwise.
    """

    def __init__(self, k, coords, n, xorder="asc"):
        self.k = k
        self.coords = tuple(coords)
        self.m = len(coords)
        self.n = n
        self.xorder = xorder

    def fixed_points(self):
        return itertools.combinations(range(1, self.m + 1), self.k)

    def restriction(self, nu, J):
        """[X^nu]|_J as a Poly; J a sorted tuple of positions in [1..m]."""
        I = code_subset(nu, self.k)
        if not gale_le(J, I):
            return Poly(self.n)
        shape = box_complement(nu, self.k, self.m)
        xl = [self.coords[j - 1] for j in J]
        if self.xorder == "desc":
            xl = xl[::-1]
        al = [self.coords[self.m - i] for i in range(1, self.m + 1)]
        # factors (a - x): sum over SSYT of `shape` with entries in [1, k]
        total = Poly(self.n)
        for T in ssyt(shape, self.k):
            term = Poly.const(self.n, 1)
            ok = True
            for r, row in enumerate(T):
                for c, tv in enumerate(row):
                    ai = tv + (c + 1) - (r + 1)
                    f = Poly.linear(self.n, al[ai - 1], xl[tv - 1])
                    if f.is_zero():
                        ok = False
                        break
                    term = term * f
                if not ok:
                    break
            if ok:
                total = total + term
        return total

    def center_value(self, nu):
        """Euler class of the repelling directions at the center point."""
        I = set(code_subset(nu, self.k))
        out = Poly.const(self.n, 1)
        for i in I:
            for j in range(1, self.m + 1):
                if j not in I and j > i:
                    out = out * Poly.linear(self.n, self.coords[j - 1],
                                            self.coords[i - 1])
        return out


# ------------------------------------------------------------- validation

def validate_ring(k, m, xorder):
    """Check support/center/degree/GKM for all classes of Gr(k,m).

    By the uniqueness of GKM classes with given support, degree, and
    center normalization, passing all four proves the formula correct.
    """
    ring = SchubertRing(k, tuple(range(1, m + 1)), m, xorder)
    pts = list(ring.fixed_points())
    dim = k * (m - k)
    for nu in partitions_in_box(k, m - k):
        vals = {J: ring.restriction(nu, J) for J in pts}
        I = code_subset(nu, k)
        if vals[I] != ring.center_value(nu):
            return "center fails at nu=%s (k=%d,m=%d)" % (nu, k, m)
        want_deg = dim - sum(nu)
        for J, v in vals.items():
            for mono in v.c:
                if sum(mono) != want_deg:
                    return "degree fails nu=%s J=%s" % (nu, J)
        for J in pts:
            sj = set(J)
            for i in J:
                for j in range(1, m + 1):
                    if j in sj:
                        continue
                    J2 = tuple(sorted(sj - {i} | {j}))
                    diff = vals[J] - vals[J2]
                    if diff.is_zero():
                        continue
                    try:
                        diff.div_linear(j, i)
                    except ArithmeticError:
                        return "GKM fails nu=%s J=%s J'=%s" % (nu, J, J2)
    return None


# ---------------------------------------------------- direct-sum class

def direct_sum_class_hs(lam, abox, mu, cbox, tsign=1):
    """HS expansion of [X^lam (+) X^mu] via localization.

    lam in a x b box, mu in c x d box; returns dict nu -> dict {E: coeff}
    with nu a partition in the (a+c) x (b+d) box, E the t-degree.

    Geometry: ambient coordinate blocks in order b|d|c|a with S-weights
    1,1,0,0.  The lam-factor Gr(a, b+a) occupies the b-block plus the
    a-block (non-contiguous); the mu-factor Gr(c, d+c) the middle d|c.
    Schubert varieties are swept rightward by upper-triangular matrices:
    support J >= center, center of the empty partition = last k coords.
    Realized via SchubertRing on the reversed coordinate tuple.
    """
    a, b = abox
    c, d = cbox
    n = a + b + d + c
    # global label order: b-block, d-block, c-block, a-block
    Bb = tuple(range(1, b + 1))
    Db = tuple(range(b + 1, b + d + 1))
    Cb = tuple(range(b + d + 1, b + d + c + 1))
    Ab = tuple(range(b + d + c + 1, n + 1))
    weights = [1] * (b + d) + [0] * (c + a)
    own1 = Bb + Ab          # factor-1 ambient in its own order (b then a)
    own2 = Db + Cb          # factor-2 ambient (d then c)
    co1 = tuple(reversed(own1))
    co2 = tuple(reversed(own2))
    cobig = tuple(reversed(range(1, n + 1)))
    g1 = SchubertRing(a, co1, n)
    g2 = SchubertRing(c, co2, n)
    big = SchubertRing(a + c, cobig, n)

    w1 = set(own1)
    w2 = set(own2)
    xi = {}
    for J in big.fixed_points():
        lab = tuple(cobig[p - 1] for p in J)
        J1 = tuple(j for j in lab if j in w1)
        J2 = tuple(j for j in lab if j in w2)
        if len(J1) != a or len(J2) != c:
            xi[J] = Poly(n)
            continue
        # positions of J1 within g1's coords, J2 within g2's
        p1 = tuple(sorted(co1.index(j) + 1 for j in J1))
        p2 = tuple(sorted(co2.index(j) + 1 for j in J2))
        r1 = g1.restriction(lam, p1)
        if r1.is_zero():
            xi[J] = Poly(n)
            continue
        r2 = g2.restriction(mu, p2)
        if r2.is_zero():
            xi[J] = Poly(n)
            continue
        # normal bundle of the direct-sum embedding
        nf = Poly.const(n, 1)
        for i in J1:
            for j in w2 - set(J2):
                nf = nf * Poly.linear(n, j, i)
        for i in J2:
            for j in w1 - set(J1):
                nf = nf * Poly.linear(n, j, i)
        xi[J] = r1 * r2 * nf

    # triangular solve, nu by decreasing |nu|
    nus = sorted(partitions_in_box(a + c, b + d),
                 key=lambda p: -sum(p))
    out = {}
    for nu in nus:
        I = code_subset(nu, a + c)
        val = xi[I]
        if val.is_zero():
            continue
        cen = big.center_value(nu)
        coef = val
        for j, i in _center_factors(code_subset(nu, a + c), n):
            coef = coef.div_linear(cobig[j - 1], cobig[i - 1])
        out[nu] = coef
        for J in xi:
            r = big.restriction(nu, J)
            if not r.is_zero():
                xi[J] = xi[J] - coef * r
    for J, v in xi.items():
        if not v.is_zero():
            raise ArithmeticError("expansion incomplete at %s" % (J,))
    # specialize
    spec = {}
    for nu, coef in out.items():
        layers = coef.specialize01(weights)
        if tsign < 0:
            layers = {e: c * (-1) ** e for e, c in layers.items()}
        if layers:
            spec[nu] = layers
    return spec


def _center_factors(I, m):
    si = set(I)
    for i in I:
        for j in range(1, m + 1):
            if j not in si and j > i:
                yield (j, i)


if __name__ == "__main__":
    import sys
    for k, m in ((1, 2), (1, 3), (2, 4), (2, 5)):
        for xo in ("asc", "desc"):
            bad = validate_ring(k, m, xo)
            print("Gr(%d,%d) xorder=%s: %s" % (k, m, xo, bad or "OK"))
