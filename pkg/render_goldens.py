"""Render the pair-2 KS dreams of interest under all-cells-allowed."""
import sys
sys.path.insert(0, "/root/pkg/src")
from dsring.partitions import BoxedPartition
from dsring.region import Region, build_region
from dsring.dreams import enumerate_dreams, dream_stats

Region.eq_allowed_at = lambda self, x, y: True

lam = BoxedPartition((1,), 2, 1)
mu = BoxedPartition((1, 1), 2, 2)
region = build_region(lam, mu)
for d in enumerate_dreams(region, "KS"):
    nu, E, F, fus = dream_stats(d)
    tag = "".join(str(p) for p in nu.parts)
    eq = sorted((x, y) for (x, y, t) in d.cells if t.is_equivariant)
    if (tag, E, F) in {("2100", 0, 0), ("1100", 0, 1), ("1110", 1, 1),
                       ("2110", 1, 0), ("1110", 0, 0)}:
        print("### nu=%s E=%d F=%d fus=%d eq=%s" % (tag, E, F, fus, eq))
        print(d.render())
        print()
