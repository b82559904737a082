"""Scratch: census with interface labels + zone-rule mining for both
golden pairs.  Enumerates with every cell eq-legal, then re-applies
candidate legality rules as dream filters and compares the resulting
expansions against the published ones.
"""
import sys
import itertools

sys.path.insert(0, "/root/pkg/src")
from dsring.partitions import BoxedPartition
from dsring.region import Region, build_region
from dsring.dreams import enumerate_dreams, dream_stats, dream_weight
from dsring.coeffs import IntPoly, LaurentPoly

Region.eq_allowed_at = lambda self, x, y: True

PAIRS = {
    "pair1": (BoxedPartition((1, 1), 2, 2), BoxedPartition((1,), 2, 1)),
    "pair2": (BoxedPartition((1,), 2, 1), BoxedPartition((1, 1), 2, 2)),
}


def south_label(region, grid, x, y):
    f = region.south_fixed(x, y)
    if f is not None:
        return f
    t = grid.get((x, y - 1))
    return t.north if t is not None else None


def build_records(region, mode):
    out = []
    for p in enumerate_dreams(region, mode):
        nu, E, F, fus = dream_stats(p)
        grid = p.tile_at
        eq = tuple(sorted((x, y) for (x, y), t in grid.items()
                          if t.is_equivariant))
        di = tuple(sorted((x, y) for (x, y), t in grid.items()
                          if t.kind == "displacer"))
        wf = tuple(sorted((x, y) for (x, y), t in grid.items()
                          if t.is_weighted_fusor))
        # for every eq cell, the interface label directly below-west
        below_west = tuple(south_label(region, grid, x - 1, y)
                           for (x, y) in eq)
        # columns where an R crosses each horizontal interface
        rcross = {}
        for y in range(1, region.a + region.b + 1):
            cols = [x for (x, yy), t in grid.items()
                    if yy == y and t.north == "R"]
            if cols:
                rcross[y] = tuple(sorted(cols))
        out.append({
            "dream": p, "nu": "".join(str(q) for q in nu.parts), "nuP": nu,
            "E": E, "F": F, "fus": fus, "eq": eq, "di": di, "wf": wf,
            "grid": grid, "bw": below_west, "rcross": rcross,
            "ident": (sum(region.lam.parts) + sum(region.mu.parts)
                      - sum(nu.parts) + E) == fus,
        })
    return out


DATA = {}
for name, (lam, mu) in PAIRS.items():
    region = build_region(lam, mu)
    DATA[name] = {"region": region,
                  "recs": {m: build_records(region, m)
                           for m in ("H", "HS", "KS")}}

print("=" * 78)
print("KS census with interface diagnostics")
for name in PAIRS:
    region = DATA[name]["region"]
    print("-" * 78)
    print(name, "a=%d b=%d c=%d d=%d" % (region.a, region.b, region.c,
                                         region.d))
    for r in DATA[name]["recs"]["KS"]:
        if not (r["E"] or r["F"] or r["fus"]):
            continue
        print("nu=%s E=%d F=%d fus=%d ident=%-5s eq=%-18s bw=%-12s "
              "di=%-10s rcross=%s" % (
                  r["nu"], r["E"], r["F"], r["fus"], r["ident"],
                  r["eq"], r["bw"], r["di"], r["rcross"]))

# ---------------------------------------------------------------- targets
ONE = LaurentPoly({0: 1})
Q = LaurentPoly.Q if hasattr(LaurentPoly, "Q") else LaurentPoly({1: 1})
OMQ = LaurentPoly.ONE_MINUS_Q
T = IntPoly({1: 1})
IONE = IntPoly({0: 1})

TARGETS = {
    "H": {"2100": 1 + 0, "1110": 1},
    "HS": {"2100": IONE, "1110": IONE, "2110": T},
    "KS": {"2100": ONE, "1110": ONE + OMQ * Q * (-1),
           "2110": OMQ, "1100": Q * (-1)},
}
# integer-vs-poly comparison helper


def norm(c):
    if isinstance(c, int):
        return (("int", c),)
    return tuple(sorted(c.terms.items()))


def expansion_of(recs, mode, rule):
    total = {}
    for r in recs:
        if not rule(r):
            continue
        w = dream_weight(r["dream"], mode)
        total[r["nu"]] = total.get(r["nu"], 0) + w if r["nu"] in total \
            else w
    return {nu: c for nu, c in total.items()
            if norm(c) != norm(c * 0 if not isinstance(c, int) else 0)}


def matches(rule, verbose=False):
    for name in PAIRS:
        region = DATA[name]["region"]
        for mode in ("H", "HS", "KS"):
            got = expansion_of(DATA[name]["recs"][mode], mode,
                               lambda r: rule(r, region, mode))
            want = TARGETS[mode]
            gotn = {nu: norm(c) for nu, c in got.items()}
            wantn = {nu: norm(c) for nu, c in want.items()}
            if gotn != wantn:
                if verbose:
                    print("  MISMATCH %s %s:" % (name, mode))
                    print("    got : %s" % sorted(gotn.items()))
                    print("    want: %s" % sorted(wantn.items()))
                return False
    return True


# ------------------------------------------------------- rule components
def mk_rule(lower_eq, upper_eq, di_ok, ident_filter):
    def rule(r, region, mode):
        if ident_filter and mode == "KS" and not r["ident"]:
            return False
        for (x, y) in r["di"]:
            if not di_ok(x, y, region):
                return False
        for (x, y) in r["eq"]:
            if y <= region.b:
                if not lower_eq(x, y, region):
                    return False
            else:
                if not upper_eq(x, y, region, r):
                    return False
        return True
    return rule


def bw_label(r, region, x, y):
    return south_label(region, r["grid"], x - 1, y)


# curated component candidates
LOWER = {
    "cur(x>a+b)": lambda x, y, g: x > g.a + g.b,
    "x>b+d": lambda x, y, g: x > g.b + g.d,
    "x>=b+d+2": lambda x, y, g: x >= g.b + g.d + 2,
    "x==b+d+c": lambda x, y, g: x == g.b + g.d + g.c,
    "x>=c+d+1": lambda x, y, g: x >= g.c + g.d + 1,
    "x>=c+d+y": lambda x, y, g: x >= g.c + g.d + y,
}
UPPER = {
    "cur(x+k<=a+b+1)": lambda x, y, g, r: x + (y - g.b) <= g.a + g.b + 1,
    "x<=b+d": lambda x, y, g, r: x <= g.b + g.d,
    "x<=b+d+1": lambda x, y, g, r: x <= g.b + g.d + 1,
    "Radj": lambda x, y, g, r: bw_label(r, g, x, y) == "R",
    "Radj&x>=c+d+1": lambda x, y, g, r: (bw_label(r, g, x, y) == "R"
                                         and x >= g.c + g.d + 1),
    "Radj&x==c+d+1": lambda x, y, g, r: (bw_label(r, g, x, y) == "R"
                                         and x == g.c + g.d + 1),
    "RQadj": lambda x, y, g, r: bw_label(r, g, x, y) in ("R", "Q"),
}
DI = {
    "any": lambda x, y, g: True,
    "loweronly": lambda x, y, g: y <= g.b,
    "diag(x+y==b+d+2)": lambda x, y, g: y <= g.b and x + y == g.b + g.d + 2,
}

def displaced_r_chain(r, region, x, y):
    """True when the label below-west of (x, y) is an R that rises,
    crossing by crossing, from a displacer in column x-1."""
    grid = r["grid"]
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


UPPER["static|chain"] = lambda x, y, g, r: (
    x + (y - g.b) <= g.a + g.b + 1 or displaced_r_chain(r, g, x, y))

print("=" * 78)
print("curated rule scan (lower x upper x di x identFilter)")
survivors = []
for ln, lf in LOWER.items():
    for un, uf in UPPER.items():
        for dn, df in DI.items():
            for idf in (False, True):
                rule = mk_rule(lf, uf, df, idf)
                if matches(rule):
                    survivors.append((ln, un, dn, idf))
for s in survivors:
    print("  SURVIVES: lower=%s upper=%s di=%s identFilter=%s" % s)
if not survivors:
    print("  (none survive; diagnostics for the static|chain pick)")
    rule = mk_rule(LOWER["cur(x>a+b)"], UPPER["static|chain"],
                   DI["diag(x+y==b+d+2)"], False)
    matches(rule, verbose=True)
