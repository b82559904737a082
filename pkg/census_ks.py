"""All-cells KS census for both golden pairs."""
import sys
sys.path.insert(0, "/root/pkg/src")
from dsring.partitions import BoxedPartition
from dsring.region import Region, build_region
from dsring.dreams import enumerate_dreams, dream_stats

# allow equivariant tiles everywhere
Region.eq_allowed_at = lambda self, x, y: True

pairs = [
    ("pair1", BoxedPartition((1, 1), 2, 2), BoxedPartition((1,), 2, 1)),
    ("pair2", BoxedPartition((1,), 2, 1), BoxedPartition((1, 1), 2, 2)),
]

for name, lam, mu in pairs:
    region = build_region(lam, mu)
    print("=" * 70)
    print(name, "lam=%r mu=%r" % (lam, mu),
          "a=%d b=%d c=%d d=%d" % (region.a, region.b, region.c, region.d))
    dreams = list(enumerate_dreams(region, "KS"))
    print("total dreams:", len(dreams))
    for d in dreams:
        nu, E, F, fus = dream_stats(d)
        eq = sorted((x, y) for (x, y, t) in d.cells if t.is_equivariant)
        di = sorted((x, y) for (x, y, t) in d.cells if t.kind == "displacer")
        wf = sorted((x, y, t.code) for (x, y, t) in d.cells if t.is_weighted_fusor)
        ident = (sum(lam.parts) + sum(mu.parts) - sum(nu.parts) + E) == fus
        if E or F or fus:
            print("nu=%s E=%d F=%d fus=%d ident=%s eq=%s di=%s wf=%s" % (
                "".join(str(p) for p in nu.parts), E, F, fus, ident, eq, di, wf))
        else:
            print("nu=%s plain" % "".join(str(p) for p in nu.parts))
