"""Dump every zone-free dream for the disputed commutativity pair, with
full grids for the equivariant ones, to find the structural discriminator."""
import sys
sys.path.insert(0, "/root/pkg/src")
from dsring.partitions import BoxedPartition
from dsring.region import Region, build_region
from dsring.dreams import enumerate_dreams, dream_stats

Region.eq_allowed_at = lambda self, x, y: True


def render(g, p):
    rows = []
    ymax = g.a + g.b
    for y in range(ymax, 0, -1):
        cells = []
        for x in range(1, g.b + g.d + g.c + g.a + 1):
            t = p.tile_at.get((x, y))
            if t is None:
                cells.append("......")
            else:
                cells.append("%-6s" % t.code)
        rows.append("y=%d  %s" % (y, " ".join(cells)))
    return "\n".join(rows)


def dump(lam, mu, tag, mode="KS", grids_for=()):
    g = build_region(lam, mu)
    print("=" * 100)
    print("%s: %s x %s  (a,b,c,d)=(%d,%d,%d,%d) n=%d  mode=%s"
          % (tag, lam, mu, g.a, g.b, g.c, g.d,
             g.a + g.b + g.c + g.d, mode))
    for p in enumerate_dreams(g, mode):
        nu, E, F, fus = dream_stats(p)
        eq = sorted((x, y) for (x, y), t in p.tile_at.items()
                    if t.is_equivariant)
        di = sorted((x, y) for (x, y), t in p.tile_at.items()
                    if t.kind == "displacer")
        halves = ["%s%s" % ("LOW" if y <= g.b else "UP", (x, y))
                  for (x, y) in eq]
        print("nu=%-12s E=%d F=%d fus=%d  eq=%s  di=%s"
              % (nu.parts, E, F, fus, halves, di))
        if E and (not grids_for or nu.parts in grids_for):
            print(render(g, p))
            print("-" * 60)


P_A = BoxedPartition((1,), 1, 1)     # single box in 1x1
P_B = BoxedPartition((2,), 1, 2)     # full row in 1x2

dump(P_A, P_B, "ORDER-1")
dump(P_B, P_A, "ORDER-2")
