"""Scratch: inspect spurious eq/di dreams in degenerate-box products."""
import sys

sys.path.insert(0, "/root/pkg/src")
from dsring.partitions import BoxedPartition
from dsring.region import Region, build_region
from dsring.dreams import enumerate_dreams, dream_stats

Region.eq_allowed_at = lambda self, x, y: True

CASES = [
    (BoxedPartition((1,), 1, 2), BoxedPartition((), 0, 0)),
    (BoxedPartition((1, 0), 2, 1), BoxedPartition((), 0, 0)),
    (BoxedPartition((), 0, 0), BoxedPartition((1,), 1, 2)),
    (BoxedPartition((1, 1), 2, 2), BoxedPartition((), 0, 0)),
    (BoxedPartition((), 0, 1), BoxedPartition((1,), 1, 1)),
    (BoxedPartition((1,), 1, 1), BoxedPartition((), 1, 1)),
]

for lam, mu in CASES:
    region = build_region(lam, mu)
    print("=" * 72)
    print("lam=%s mu=%s  a=%d b=%d c=%d d=%d" % (
        lam, mu, region.a, region.b, region.c, region.d))
    for p in enumerate_dreams(region, "KS"):
        nu, E, F, fus = dream_stats(p)
        if not (E or F or fus):
            print("  nu=%s plain" % (nu.parts,))
            continue
        eq = sorted((x, y) for (x, y), t in p.tile_at.items()
                    if t.is_equivariant)
        di = sorted((x, y, t.code) for (x, y), t in p.tile_at.items()
                    if t.kind == "displacer")
        codes = " / ".join(
            " ".join(t.code for (xx, yy), t in sorted(p.tile_at.items(),
                                                      key=lambda kv: kv[0])
                     if yy == y)
            for y in range(1, region.a + region.b + 1))
        print("  nu=%s E=%d F=%d fus=%d eq=%s di=%s" % (
            nu.parts, E, F, fus, eq, di))
        print("    %s" % codes)
