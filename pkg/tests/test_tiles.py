import pytest

from dsring.tiles import (TILE_BY_CODE, catalog, catalog_breakdown, flip,
                          match_lower, match_upper, tile_flags, tile_mirror)


def codes(tiles):
    return [t.code for t in tiles]


class TestCatalog:
    def test_lower_k_count(self):
        assert len(catalog("lower", "K")) == 53

    def test_lower_k_breakdown(self):
        bd = catalog_breakdown("lower", "K")
        assert bd == {"crossing": 34, "dot": 4, "fusor": 9, "displacer": 6,
                      "total": 53}

    def test_lower_h_breakdown(self):
        bd = catalog_breakdown("lower", "H")
        assert bd == {"crossing": 10, "dot": 4, "fusor": 3, "total": 17}

    def test_upper_counts_mirror_lower(self):
        for mode in ("H", "K"):
            assert len(catalog("upper", mode)) == len(catalog("lower", mode))

    def test_h_subset_of_k(self):
        for half in ("lower", "upper"):
            k = set(catalog(half, "K"))
            assert all(t in k for t in catalog(half, "H"))

    def test_contains_expected_crossings(self):
        lower = codes(catalog("lower", "K"))
        assert "CR(R;0)" in lower
        assert "CR(1;1)" not in lower        # a 1 crossing a 1 is illegal
        assert "CR(1;R)" not in lower        # vertical 1 forces horizontal 0
        assert "CR(0;0)" not in lower        # that cell is the equivariant dot
        assert "DI(R;Q)" in lower
        di = TILE_BY_CODE["DI(R;Q)"]
        assert di.east == "RQ"

    def test_no_digit_inside_multiletter_words(self):
        for t in catalog("lower", "K"):
            for lab in (t.west, t.east):
                if len(lab) >= 2:
                    assert "0" not in lab
        for t in catalog("upper", "K"):
            for lab in (t.west, t.east):
                if len(lab) >= 2:
                    assert "1" not in lab

    def test_codes_are_unique(self):
        seen = codes(catalog("lower", "K")) + codes(catalog("upper", "K"))
        assert len(seen) == len(set(seen)) == 106
        assert len(TILE_BY_CODE) == 106

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            catalog("middle", "K")
        with pytest.raises(ValueError):
            catalog("lower", "KS")


class TestMirror:
    def test_involution(self):
        for half in ("lower", "upper"):
            for t in catalog(half, "K"):
                back = tile_mirror(tile_mirror(t))
                assert back == t
                assert (back.west, back.east, back.north, back.south) == \
                    (t.west, t.east, t.north, t.south)

    def test_bijection_between_halves(self):
        uppers = {tile_mirror(t).code for t in catalog("lower", "K")}
        assert uppers == set(codes(catalog("upper", "K")))

    def test_equivariant_dot_mirrors_to_all_ones(self):
        eq = TILE_BY_CODE["DOT(0)"]
        up = tile_mirror(eq)
        assert (up.west, up.east, up.north, up.south) == ("1", "1", "1", "1")
        assert up.is_equivariant

    def test_mirror_of_word_fusor(self):
        fu = TILE_BY_CODE["FU(R1)"]
        assert (fu.west, fu.north, fu.south, fu.east) == ("R1", "1", "0", "0")
        up = tile_mirror(fu)
        assert (up.east, up.north, up.south, up.west) == ("R0", "0", "1", "1")


class TestMatching:
    def test_every_tile_matches_itself_lower(self):
        for t in catalog("lower", "K"):
            assert t in match_lower(t.west, t.south, "K")

    def test_every_tile_matches_itself_upper(self):
        for t in catalog("upper", "K"):
            assert t in match_upper(t.east, t.south, "K")

    def test_blocked_equivariant_cell(self):
        assert match_lower("0", "0", "K", eq_allowed=False) == []
        assert codes(match_lower("0", "0", "K", eq_allowed=True)) == ["DOT(0)"]

    def test_single_letter_pipe_continuations(self):
        assert codes(match_lower("R", "0", "K")) == ["CR(R;0)", "FU(R)"]

    def test_word_continuations(self):
        assert codes(match_lower("R1", "0", "K")) == ["CR(R1;0)", "FU(R1)"]

    def test_upper_equivariant_elbow(self):
        assert "UDOT(0)" in codes(match_upper("1", "1", "K", eq_allowed=True))
        assert "UDOT(0)" not in codes(match_upper("1", "1", "K",
                                                  eq_allowed=False))

    def test_upper_mirrors_lower(self):
        got = codes(match_upper("Q", "1", "K"))
        expected = sorted("U" + t.code for t in match_lower("Q", "0", "K"))
        assert got == expected

    def test_single_zero_is_a_legal_upper_label(self):
        # "0" mirrors the lower word "1"; upper cells carrying a 0-pipe
        # vertically depend on this match succeeding.
        assert codes(match_upper("0", "1", "K")) == ["UCR(1;0)", "UFU(1)"]

    def test_h_mode_match_is_a_subset(self):
        for t in catalog("lower", "K"):
            h = set(codes(match_lower(t.west, t.south, "H")))
            k = set(codes(match_lower(t.west, t.south, "K")))
            assert h <= k

    def test_illegal_labels_raise(self):
        with pytest.raises(ValueError):
            match_lower("R0", "0")       # 0 cannot sit inside a lower word
        with pytest.raises(ValueError):
            match_lower("1R", "0")       # 1 must be last
        with pytest.raises(ValueError):
            match_upper("R1", "0")       # 1 inside an upper word
        with pytest.raises(ValueError):
            match_lower("0", "x")
        with pytest.raises(ValueError):
            match_upper("", "0")


class TestFlags:
    def test_weighted_fusor(self):
        assert tile_flags(TILE_BY_CODE["FU(R1)"]) == (False, True, 1, True)

    def test_plain_elbow(self):
        assert tile_flags(TILE_BY_CODE["FU(R)"]) == (False, False, 0, False)

    def test_equivariant(self):
        flags = tile_flags(TILE_BY_CODE["DOT(0)"])
        assert flags.is_equivariant and not flags.is_strict

    def test_long_word_fusor(self):
        assert tile_flags(TILE_BY_CODE["FU(RQ1)"]).fusing_letters == 2

    def test_strict_crossings_and_displacers(self):
        assert tile_flags(TILE_BY_CODE["CR(RQ;0)"]).is_strict
        assert tile_flags(TILE_BY_CODE["DI(R;Q)"]).is_strict
        assert not tile_flags(TILE_BY_CODE["CR(R;0)"]).is_strict


def test_flip():
    assert flip("R1") == "R0"
    assert flip("0") == "1"
    assert flip("RQ") == "RQ"
