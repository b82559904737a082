"""Region geometry: row spans, fixed boundary labels, the equivariant
zone, and the boundary fragment used by the slice cross-check."""

import pytest

from dsring.partitions import BoxedPartition, all_partitions_in_box, bits_of
from dsring.region import Region, build_region, render_region


def golden_region():
    # (1,1) in the 2x2 box times (1,0) in the 2x1 box
    return build_region(BoxedPartition((1, 1), 2, 2),
                        BoxedPartition((1, 0), 2, 1))


def golden_region_swapped():
    return build_region(BoxedPartition((1, 0), 2, 1),
                        BoxedPartition((1, 1), 2, 2))


def test_golden_dimensions():
    r = golden_region()
    assert (r.a, r.b, r.c, r.d) == (2, 2, 2, 1)
    assert r.n == 7
    assert r.south_bits == "101"


def test_golden_row_spans():
    r = golden_region()
    spans = [(y, half, cols[0], cols[-1]) for y, half, cols in r.rows()]
    assert spans == [
        (1, "lower", 2, 5),
        (2, "lower", 1, 5),
        (3, "upper", 1, 6),
        (4, "upper", 1, 7),
    ]


def test_golden_south_labels():
    r = golden_region()
    # row 1: staircase R then the mu bits 101 under columns 3..5
    assert r.south_fixed(2, 1) == "R"
    assert r.south_fixed(3, 1) == "1"
    assert r.south_fixed(4, 1) == "0"
    assert r.south_fixed(5, 1) == "1"
    # row 2: staircase R at its first column, nothing else fixed
    assert r.south_fixed(1, 2) == "R"
    assert r.south_fixed(2, 2) is None
    assert r.south_fixed(5, 2) is None
    # upper staircase: Q for the first q_star steps, then 0
    assert r.q_star == 1
    assert r.south_fixed(6, 3) == "Q"
    assert r.south_fixed(7, 4) == "0"
    assert r.south_fixed(3, 3) is None


def test_golden_side_labels():
    r = golden_region()
    # bits of (1,1) in 2x2 are 0110: rows of the east wall read 0,1
    # from the bottom, giving R below 0 and 0 below 1
    assert bits_of(r.lam) == "0110"
    assert r.east_required_lower(1) == "R"
    assert r.east_required_lower(2) == "0"
    # the last a=2 letters, 10, feed the west wall top-down: top gets 1
    assert r.west_required_upper(2) == "Q"
    assert r.west_required_upper(1) == "R"
    assert r.west_fixed_lower(1) == "0"
    assert r.west_fixed_lower(2) == "0"
    assert r.east_fixed_upper(1) == "1"
    assert r.east_fixed_upper(2) == "1"


def test_swapped_labels():
    r = golden_region_swapped()
    assert (r.a, r.b, r.c, r.d) == (2, 1, 2, 2)
    assert r.n == 7
    assert r.south_bits == "0110"
    assert bits_of(r.lam) == "101"
    assert r.east_required_lower(1) == "0"
    assert r.west_required_upper(2) == "R"
    assert r.west_required_upper(1) == "Q"
    assert r.q_star == 1
    spans = [(y, cols[0], cols[-1]) for y, _, cols in r.rows()]
    assert spans == [(1, 1, 5), (2, 1, 6), (3, 1, 7)]


def test_equivariant_zone_default_split():
    r = golden_region()
    assert r.eq_split == r.a + r.b == 4
    # lower cells allow equivariant dots strictly east of the split
    assert not r.eq_allowed_at(4, 1)
    assert r.eq_allowed_at(5, 1)
    assert not r.eq_allowed_at(2, 2)
    # upper cells allow them up to the split
    assert r.eq_allowed_at(4, 3)
    assert not r.eq_allowed_at(5, 3)
    assert r.eq_allowed_at(1, 4)


def test_equivariant_zone_swapped_pair():
    r = golden_region_swapped()
    assert r.eq_split == 3
    assert r.eq_allowed_at(4, 1) and r.eq_allowed_at(5, 1)
    assert not r.eq_allowed_at(3, 1)
    assert r.eq_allowed_at(3, 2) and r.eq_allowed_at(1, 3)
    assert not r.eq_allowed_at(4, 2)


def test_equivariant_zone_alternate_split():
    # the refuted convention: split at b+d instead of a+b
    r = build_region(BoxedPartition((1, 1), 2, 2),
                     BoxedPartition((1, 0), 2, 1), eq_split=3)
    assert r.eq_split == 3
    assert r.eq_allowed_at(4, 1)
    assert not r.eq_allowed_at(4, 3)


def test_boundary_slice_fragment_golden():
    frag = golden_region().boundary_slice_fragment()
    assert frag["horizontal"] == {3: "R", 4: "R", 5: "1", 6: "0", 7: "1"}
    assert frag["vertical"] == {3: "0", 4: "R"}


def test_degenerate_boxes():
    empty = BoxedPartition((), 0, 0)
    r = build_region(empty, empty)
    assert r.n == 0
    assert r.rows() == []
    assert r.cells() == []

    lam = BoxedPartition((), 0, 1)
    mu = BoxedPartition((), 1, 0)
    r = build_region(lam, mu)
    assert (r.a, r.b, r.c, r.d) == (0, 1, 1, 0)
    assert r.rows() == [(1, "lower", (1, 2))]
    assert r.south_fixed(1, 1) == "R"
    assert r.south_fixed(2, 1) == "1"
    assert r.east_required_lower(1) == "R"

    # no lower rows at all: mu's bits sit directly under the upper rows
    lam = BoxedPartition((), 1, 0)
    mu = BoxedPartition((1,), 1, 1)
    r = build_region(lam, mu)
    assert (r.a, r.b, r.c, r.d) == (1, 0, 1, 1)
    assert r.rows() == [(1, "upper", (1, 2, 3))]
    assert bits_of(mu) == "10"
    assert r.south_fixed(1, 1) == "1"
    assert r.south_fixed(2, 1) == "0"
    assert r.south_fixed(3, 1) == "Q"
    assert r.west_required_upper(1) == "Q"


def all_regions(limit):
    for a in range(limit + 1):
        for b in range(limit + 1):
            for c in range(limit + 1):
                for d in range(limit + 1):
                    for lam in all_partitions_in_box(a, b):
                        for mu in all_partitions_in_box(c, d):
                            yield build_region(lam, mu)


def test_fixed_label_counts_sweep():
    # b staircase R's in the lower half, q_star Q's in the upper wall,
    # and the mu bits exactly once each
    for r in all_regions(2):
        fixed = {}
        for x, y in r.cells():
            lab = r.south_fixed(x, y)
            if lab is not None:
                fixed[(x, y)] = lab
        labels = list(fixed.values())
        assert labels.count("R") == r.b
        assert labels.count("Q") == r.q_star
        assert r.q_star == bits_of(r.lam)[r.b:].count("1")
        lo = r.b + 1
        hi = r.b + r.d + r.c
        bit_slots = sorted((x, lab) for (x, y), lab in fixed.items()
                           if y == 1 and lo <= x <= hi)
        if r.a + r.b == 0:
            # no rows at all: mu's bits pass straight through to the top
            assert not fixed
        else:
            assert "".join(lab for _, lab in bit_slots) == r.south_bits
            assert [x for x, _ in bit_slots] == list(range(lo, hi + 1))


def test_every_edge_fixed_or_shared_sweep():
    # a cell's south is fixed exactly when no cell sits below it, and
    # each row's interior west/east edges pair up with neighbors
    for r in all_regions(2):
        cells = set(r.cells())
        for x, y in cells:
            below = (x, y - 1) in cells
            assert below == (r.south_fixed(x, y) is None)
            above = (x, y + 1) in cells
            assert above == (y < r.a + r.b)


def test_rows_bottom_up_and_scan_order():
    r = golden_region()
    ys = [y for y, _, _ in r.rows()]
    assert ys == sorted(ys)
    seen = r.cells()
    assert seen[:4] == [(2, 1), (3, 1), (4, 1), (5, 1)]
    # upper rows scan east to west
    assert seen[9:15] == [(6, 3), (5, 3), (4, 3), (3, 3), (2, 3), (1, 3)]
    assert len(seen) == 4 + 5 + 6 + 7


def test_render_smoke():
    r = golden_region()
    text = render_region(r)
    assert "R" in text and "Q" in text
    lines = text.splitlines()
    assert len(lines) > 4
    empty = BoxedPartition((), 0, 0)
    assert "empty" in render_region(build_region(empty, empty))


def test_split_override_changes_zone():
    lam = BoxedPartition((1,), 1, 1)
    mu = BoxedPartition((1,), 1, 1)
    r0 = Region(lam, mu, eq_split=1)
    r1 = Region(lam, mu)
    assert r1.eq_split == 2
    zone0 = {(x, y) for x, y in r0.cells() if r0.eq_allowed_at(x, y)}
    zone1 = {(x, y) for x, y in r1.cells() if r1.eq_allowed_at(x, y)}
    assert zone0 != zone1
