"""Rule-mining sweep: golden gate + commutativity over small boxes.

Candidate zone rules:
  LOWER eq: positional predicates on (x, y).
  UPPER eq: structural predicates on the completed grid.
  DI (displacer) placement: positional predicates.
"""
import sys, time, itertools
sys.path.insert(0, "/root/pkg/src")
from dsring.partitions import BoxedPartition
from dsring.region import Region, build_region
from dsring.dreams import enumerate_dreams, dream_stats

Region.eq_allowed_at = lambda self, x, y: True


def partitions_in_box(rows, cols):
    if rows == 0:
        yield ()
        return
    for first in range(cols, -1, -1):
        for rest in partitions_in_box(rows - 1, first):
            yield (first,) + tuple(p for p in rest)


SHAPES = []
for rows in (0, 1, 2):
    for cols in (0, 1, 2):
        for parts in partitions_in_box(rows, cols):
            SHAPES.append(BoxedPartition(parts, rows, cols))

_CACHE = {}


def records(lam, mu, mode):
    key = (lam.parts, lam.box_rows, lam.box_cols,
           mu.parts, mu.box_rows, mu.box_cols, mode)
    if key in _CACHE:
        return _CACHE[key]
    g = build_region(lam, mu)
    out = []
    for p in enumerate_dreams(g, mode):
        nu, E, F, fus = dream_stats(p)
        grid = p.tile_at
        eq = sorted((x, y) for (x, y), t in grid.items() if t.is_equivariant)
        di = sorted((x, y) for (x, y), t in grid.items()
                    if t.kind == "displacer")
        out.append({"nu": nu.parts, "E": E, "F": F, "fus": fus,
                    "eq": eq, "di": di, "grid": grid})
    _CACHE[key] = (g, out)
    return _CACHE[key]


def chain_to_displacer(grid, x, y):
    """Column x-1 below row y: vertical-R crossings down to a displacer."""
    yy = y - 1
    while yy >= 1:
        t = grid.get((x - 1, yy))
        if t is None or t.north != "R":
            return False
        if t.kind == "displacer":
            return True
        if t.kind != "crossing":
            return False
        yy -= 1
    return False


def fusor_below(grid, x, y):
    t = grid.get((x, y - 1))
    return t is not None and t.kind == "fusor"


def strict_fusor_below(grid, x, y):
    t = grid.get((x, y - 1))
    return t is not None and t.kind == "fusor" and len(t.params[0]) >= 2


LOWER = {
    "x>a+b&x>b+d": lambda x, y, g: x > g.a + g.b and x > g.b + g.d,
    "x>=b+d+2": lambda x, y, g: x >= g.b + g.d + 2,
    "last-col": lambda x, y, g: x == g.b + g.d + g.c,
    "x>b+c": lambda x, y, g: x > g.b + g.c,
    "last-col&c>0": lambda x, y, g: g.c > 0 and x == g.b + g.d + g.c,
    "x>b+c&c>0": lambda x, y, g: g.c > 0 and x > g.b + g.c,
}
UPPER = {
    "fu|chain": lambda x, y, g, grid: (fusor_below(grid, x, y)
                                       or chain_to_displacer(grid, x, y)),
    "diag-exact": lambda x, y, g, grid: x == g.c + (y - g.b) + 1,
    "fu|chain&stair": lambda x, y, g, grid: (
        x >= g.c + (y - g.b) + 1
        and (fusor_below(grid, x, y) or chain_to_displacer(grid, x, y))),
    "x<=b+c": lambda x, y, g, grid: x <= g.b + g.c,
    "fu|chain|P": lambda x, y, g, grid: (
        fusor_below(grid, x, y) or chain_to_displacer(grid, x, y)
        or (x == g.b + g.c and y == g.b + 1)),
    "chain|P": lambda x, y, g, grid: (
        chain_to_displacer(grid, x, y)
        or (x == g.b + g.c and y == g.b + 1)),
    "fu|P": lambda x, y, g, grid: (
        fusor_below(grid, x, y)
        or (x == g.b + g.c and y == g.b + 1)),
    "fu|chain|Pd": lambda x, y, g, grid: (
        fusor_below(grid, x, y) or chain_to_displacer(grid, x, y)
        or (g.d > 0 and x == g.b + g.c and y == g.b + 1)),
    "chain|Pd": lambda x, y, g, grid: (
        chain_to_displacer(grid, x, y)
        or (g.d > 0 and x == g.b + g.c and y == g.b + 1)),
    "fu|chain|PLEd": lambda x, y, g, grid: (
        fusor_below(grid, x, y) or chain_to_displacer(grid, x, y)
        or (g.d > 0 and x <= g.b + g.c and y == g.b + 1)),
    "sfu|chain|Pd": lambda x, y, g, grid: (
        strict_fusor_below(grid, x, y) or chain_to_displacer(grid, x, y)
        or (g.d > 0 and x == g.b + g.c and y == g.b + 1)),
}
DI = {
    "anti-diag": lambda x, y, g, grid: y <= g.b and x + y == g.b + g.d + 2,
    "lower-any": lambda x, y, g, grid: y <= g.b,
}


def expansion(lam, mu, mode, lower_eq, upper_eq, di_ok):
    g, recs = records(lam, mu, mode)
    terms = {}
    ndreams = 0
    for r in recs:
        ok = True
        for (x, y) in r["di"]:
            if not di_ok(x, y, g, r["grid"]):
                ok = False
                break
        if ok:
            for (x, y) in r["eq"]:
                if y <= g.b:
                    if not lower_eq(x, y, g, r["grid"]):
                        ok = False
                        break
                elif not upper_eq(x, y, g, r["grid"]):
                    ok = False
                    break
        if not ok:
            continue
        ndreams += 1
        if mode == "KS":
            sign = -1 if r["fus"] % 2 else 1
            poly = {}
            for i in range(r["E"] + 1):
                from math import comb
                poly[i + r["F"]] = poly.get(i + r["F"], 0) + \
                    sign * comb(r["E"], i) * (-1) ** i
            key = r["nu"]
            cur = terms.setdefault(key, {})
            for e, v in poly.items():
                cur[e] = cur.get(e, 0) + v
        elif mode == "HS":
            key = r["nu"]
            cur = terms.setdefault(key, {})
            cur[r["E"]] = cur.get(r["E"], 0) + 1
        else:
            key = r["nu"]
            cur = terms.setdefault(key, {})
            cur[0] = cur.get(0, 0) + 1
    out = {}
    for nu, poly in terms.items():
        t = tuple(sorted((e, v) for e, v in poly.items() if v))
        if t:
            out[nu] = t
    return out, ndreams


G1 = (BoxedPartition((1, 1), 2, 2), BoxedPartition((1,), 2, 1))
G2 = (G1[1], G1[0])
GOLD_WANT = {
    "H": {(2, 1, 0, 0): ((0, 1),), (1, 1, 1, 0): ((0, 1),)},
    "HS": {(2, 1, 0, 0): ((0, 1),), (1, 1, 1, 0): ((0, 1),),
           (2, 1, 1, 0): ((1, 1),)},
    "KS": {(2, 1, 0, 0): ((0, 1),), (1, 1, 1, 0): ((0, 1), (1, -1), (2, 1)),
           (2, 1, 1, 0): ((0, 1), (1, -1)), (1, 1, 0, 0): ((1, -1),)},
}
GOLD_DREAMS = {"H": 2, "HS": 3, "KS": 5}


def main():
    t0 = time.time()
    configs = []
    for ln, lf in LOWER.items():
        for un, uf in UPPER.items():
            for dn, df in DI.items():
                configs.append(("%s / %s / %s" % (ln, un, dn), lf, uf, df))

    alive = []
    for name, lf, uf, df in configs:
        ok = True
        why = ""
        for pair, ptag in ((G1, "G1"), (G2, "G2")):
            for mode in ("H", "HS", "KS"):
                exp, nd = expansion(pair[0], pair[1], mode, lf, uf, df)
                if exp != GOLD_WANT[mode] or nd != GOLD_DREAMS[mode]:
                    ok = False
                    why = "%s %s: got %s (%d dreams)" % (ptag, mode, exp, nd)
                    break
            if not ok:
                break
        if ok:
            alive.append((name, lf, uf, df))
        else:
            print("GOLDEN-DEAD %-45s %s" % (name, why))
    print("golden gate: %d / %d alive  (%.1fs)" %
          (len(alive), len(configs), time.time() - t0))

    pairs = list(itertools.combinations_with_replacement(SHAPES, 2))
    print("commutativity: %d shapes, %d unordered pairs" %
          (len(SHAPES), len(pairs)))
    for mode in ("KS", "HS"):
        still = []
        for name, lf, uf, df in alive:
            dead = None
            for lam, mu in pairs:
                e1, _ = expansion(lam, mu, mode, lf, uf, df)
                e2, _ = expansion(mu, lam, mode, lf, uf, df)
                if e1 != e2:
                    bad = sorted(set(e1) | set(e2),
                                 key=lambda nu: (e1.get(nu) == e2.get(nu)))
                    nu = bad[0]
                    dead = "%s x %s (%s): nu=%s: %s vs %s" % (
                        lam, mu, mode, nu, e1.get(nu), e2.get(nu))
                    break
            if dead:
                print("COMM-DEAD   %-45s %s" % (name, dead))
            else:
                still.append((name, lf, uf, df))
        alive = still
        print("after %s commutativity: %d alive  (%.1fs)" %
              (mode, len(alive), time.time() - t0))
    for name, _, _, _ in alive:
        print("SURVIVOR:", name)


if __name__ == "__main__":
    main()
