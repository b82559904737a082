"""Backtracking enumeration of region tilings and their weighted sums.

A dream is a total assignment of catalog tiles to the region's cells in
which every shared edge agrees and every fixed boundary label is
honored.  The scan fills lower rows west to east and upper rows east to
west, always bottom-up, so each cell's candidates are exactly the tiles
matching its two already-known edges; the top boundary then reads off a
bit string whose partition indexes the resulting basis class.

Three modes share the machinery:

  H    ordinary catalog, no equivariant tiles anywhere, weight 1
  HS   ordinary catalog, equivariant tiles in the allowed zone, weight t^E
  KS   full catalog, weight (-1)^fusing (1-q)^E q^F

where E counts equivariant tiles, F counts fusors with a nonempty word,
and fusing totals the letters those fusors absorb.
"""

from .coeffs import IntPoly, LaurentPoly, coeff_to_json
from .partitions import BoxedPartition, bits_of, parse_parts, partition_of
from .region import build_region, render_region
from .tiles import TILE_BY_CODE, match_lower, match_upper

MODES = ("H", "HS", "KS")

# A fusor with a nonempty word contributes exactly one factor of q,
# regardless of how many letters the word has.  Setting this to False
# switches to one factor per absorbed letter (q^fusing in total); the
# golden product data exercises words of length 0 and 1 only, so it
# cannot tell the two readings apart, and the choice is centralized
# here on purpose.
Q_PER_WEIGHTED_FUSOR = True


class InvariantViolation(RuntimeError):
    """An internal consistency guarantee of the engine was broken."""


class PipeDream:
    """A completed tiling with its derived statistics."""

    __slots__ = ("region", "cells", "tile_at", "norths", "nu", "eq_count",
                 "weighted_fusors", "fusing")

    def __init__(self, region, cells, norths):
        self.region = region
        self.cells = cells            # ((x, y, tile), ...) in scan order
        self.tile_at = {(x, y): t for x, y, t in cells}
        self.norths = norths
        self.nu = partition_of(norths)
        self.eq_count = sum(1 for _, _, t in cells if t.is_equivariant)
        self.weighted_fusors = sum(1 for _, _, t in cells
                                   if t.is_weighted_fusor)
        self.fusing = sum(t.fusing_letters for _, _, t in cells)

    def code_sequence(self):
        return tuple(t.code for _, _, t in self.cells)

    def to_json(self):
        return {"cells": [{"col": x, "row": y, "tile": t.code}
                          for x, y, t in self.cells]}

    def render(self):
        """Human-readable picture plus a machine-readable trailer; see
        parse_dream for the inverse."""
        r = self.region
        header = "dream a=%d b=%d lambda=%s c=%d d=%d mu=%s" % (
            r.a, r.b, ",".join(str(p) for p in r.lam.parts),
            r.c, r.d, ",".join(str(p) for p in r.mu.parts))
        grid = render_region(r, self.tile_at)
        by_row = {}
        for x, y, t in self.cells:
            by_row.setdefault(y, []).append(t.code)
        trailer = "cells: " + " / ".join(
            " ".join(by_row[y]) for y in sorted(by_row))
        if not by_row:
            trailer = "cells:"
        return "\n".join([header, grid, trailer])

    def __repr__(self):
        return "<PipeDream nu=%s E=%d F=%d fusing=%d>" % (
            self.nu, self.eq_count, self.weighted_fusors, self.fusing)


def dream_stats(p):
    """(nu, equivariant count, weighted fusor count, fusing letters)."""
    return (p.nu, p.eq_count, p.weighted_fusors, p.fusing)


def dream_weight(p, mode):
    """The coefficient a single dream contributes in the given mode."""
    if mode not in MODES:
        raise ValueError("unknown mode %r" % (mode,))
    strict = any(t.is_strict for _, _, t in p.cells)
    if mode == "H":
        if strict or p.eq_count:
            raise ValueError("dream has K or equivariant tiles; "
                             "mode H cannot weight it")
        return 1
    if mode == "HS":
        if strict:
            raise ValueError("dream has strict K-tiles; "
                             "mode HS cannot weight it")
        return IntPoly({p.eq_count: 1})
    sign = -1 if p.fusing % 2 else 1
    q_exp = p.weighted_fusors if Q_PER_WEIGHTED_FUSOR else p.fusing
    return (LaurentPoly.ONE_MINUS_Q ** p.eq_count) * \
        (LaurentPoly.Q ** q_exp) * sign


def _finish(region, norths):
    if any(ch not in "01" for ch in norths):
        raise InvariantViolation(
            "completed dream has a non-0/1 north label: %r" % (norths,))
    zeros = region.b + region.d
    ones = region.c + region.a
    if norths.count("0") != zeros or norths.count("1") != ones:
        raise InvariantViolation(
            "north labels %r do not have content 0^%d 1^%d"
            % (norths, zeros, ones))


def enumerate_dreams(region, mode):
    """All tilings of the region in canonical order (lexicographic by
    tile-code sequence along the scan)."""
    if mode not in MODES:
        raise ValueError("unknown mode %r" % (mode,))
    cat_mode = "K" if mode == "KS" else "H"
    eq_anywhere = mode != "H"
    rows = region.rows()
    results = []
    placed = []

    def do_row(idx, norths_below):
        if idx == len(rows):
            if rows:
                norths = "".join(norths_below[x]
                                 for x in range(1, region.n + 1))
            else:
                norths = region.south_bits
            _finish(region, norths)
            results.append(PipeDream(region, tuple(placed), norths))
            return
        y, half, cols = rows[idx]
        lower = half == "lower"
        order = cols if lower else tuple(reversed(cols))
        k = y - region.b
        row_tiles = []

        def step(i, side):
            if i == len(order):
                last = row_tiles[-1]
                if lower:
                    if last.east != region.east_required_lower(y):
                        return
                elif last.west != region.west_required_upper(k):
                    return
                do_row(idx + 1,
                       {x: t.north for x, t in zip(order, row_tiles)})
                return
            x = order[i]
            fixed = region.south_fixed(x, y)
            south = fixed if fixed is not None else norths_below[x]
            eq_ok = eq_anywhere and region.eq_allowed_at(x, y)
            if lower:
                candidates = match_lower(side, south, cat_mode, eq_ok)
            else:
                candidates = match_upper(side, south, cat_mode, eq_ok)
            for t in candidates:
                row_tiles.append(t)
                placed.append((x, y, t))
                step(i + 1, t.east if lower else t.west)
                placed.pop()
                row_tiles.pop()

        step(0, region.west_fixed_lower(y) if lower
             else region.east_fixed_upper(k))

    do_row(0, {})
    return results


class Expansion:
    """A finished product: basis classes with exact coefficients.

    Equality compares the ring mode and the terms; the (lam, mu) pair is
    provenance and two differently-ordered products of the same classes
    compare equal exactly when the theorems say they should.
    """

    def __init__(self, mode, lam, mu, terms):
        self.mode = mode
        self.lam = lam
        self.mu = mu
        self.terms = {nu: c for nu, c in terms.items() if c}

    def box(self):
        return (self.lam.box_rows + self.mu.box_rows,
                self.lam.box_cols + self.mu.box_cols)

    def ordered_terms(self):
        return sorted(self.terms.items(), key=lambda kv: bits_of(kv[0]))

    def coefficient(self, nu):
        return self.terms.get(nu, 0)

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    def __repr__(self):
        return "<Expansion %s: %s>" % (self.mode, self.to_text())

    def to_json(self):
        return {
            "ring": self.mode,
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "terms": [{"nu": nu.to_json(), "coeff": coeff_to_json(c)}
                      for nu, c in self.ordered_terms()],
        }

    @staticmethod
    def _term_text(nu, coeff, fmt_coeff, fmt_class):
        body = fmt_class(nu)
        if coeff == 1:
            return "+", body
        if coeff == -1:
            return "-", body
        if isinstance(coeff, int):
            sign = "-" if coeff < 0 else "+"
            return sign, "%d%s" % (abs(coeff), body)
        rendered = fmt_coeff(coeff)
        if len(coeff.terms) == 1 and rendered.startswith("-"):
            return "-", "%s%s" % (rendered[1:], body)
        if len(coeff.terms) > 1:
            rendered = "(%s)" % rendered
        return "+", "%s%s" % (rendered, body)

    def _render(self, fmt_coeff, fmt_class):
        if not self.terms:
            return "0"
        pieces = []
        for nu, coeff in self.ordered_terms():
            sign, body = self._term_text(nu, coeff, fmt_coeff, fmt_class)
            if not pieces:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append(sign + " " + body)
        return " ".join(pieces)

    def to_text(self):
        return self._render(str, lambda nu: "[%s]" % nu)

    def to_latex(self):
        def cls(nu):
            parts = ",".join(str(p) for p in nu.parts)
            return r"\left[X^{%s}\right]" % parts
        return self._render(lambda c: c.latex(), cls)


_EXPAND_CACHE = {}


def expand(lam, mu, mode):
    """Weighted sum over all dreams of the (lam, mu) region."""
    key = (lam, mu, mode)
    hit = _EXPAND_CACHE.get(key)
    if hit is not None:
        return hit
    region = build_region(lam, mu)
    terms = {}
    for p in enumerate_dreams(region, mode):
        w = dream_weight(p, mode)
        terms[p.nu] = terms.get(p.nu, 0) + w
    result = Expansion(mode, lam, mu, terms)
    _EXPAND_CACHE[key] = result
    return result


def render_dream(p):
    return p.render()


def dream_from_codes(region, codes):
    """Rebuild a dream from tile codes in scan order, validating every
    edge against its neighbors and the fixed boundary.

    Mode semantics (which tiles were allowed where) are not re-checked;
    this is the deserialization path, not the enumerator.
    """
    cells = region.cells()
    if len(codes) != len(cells):
        raise ValueError("expected %d tile codes, got %d"
                         % (len(cells), len(codes)))
    tile_at = {}
    for (x, y), code in zip(cells, codes):
        tile = TILE_BY_CODE.get(code)
        if tile is None:
            raise ValueError("unknown tile code %r" % (code,))
        expected_half = "lower" if y <= region.b else "upper"
        if tile.half != expected_half:
            raise ValueError("tile %s is a %s tile but cell (%d,%d) is %s"
                             % (code, tile.half, x, y, expected_half))
        tile_at[(x, y)] = tile

    norths_below = {}
    for y, half, cols in region.rows():
        for x in cols:
            t = tile_at[(x, y)]
            fixed = region.south_fixed(x, y)
            south = fixed if fixed is not None else norths_below[x]
            if t.south != south:
                raise ValueError("south label mismatch at (%d,%d): "
                                 "tile has %s, edge carries %s"
                                 % (x, y, t.south, south))
        if half == "lower":
            if tile_at[(cols[0], y)].west != region.west_fixed_lower(y):
                raise ValueError("west boundary mismatch in row %d" % y)
            if tile_at[(cols[-1], y)].east != region.east_required_lower(y):
                raise ValueError("east boundary mismatch in row %d" % y)
        else:
            k = y - region.b
            if tile_at[(cols[0], y)].west != region.west_required_upper(k):
                raise ValueError("west boundary mismatch in row %d" % y)
            if tile_at[(cols[-1], y)].east != region.east_fixed_upper(k):
                raise ValueError("east boundary mismatch in row %d" % y)
        for x in cols[:-1]:
            if tile_at[(x, y)].east != tile_at[(x + 1, y)].west:
                raise ValueError("vertical edge mismatch between "
                                 "(%d,%d) and (%d,%d)" % (x, y, x + 1, y))
        norths_below = {x: tile_at[(x, y)].north for x in cols}

    if region.rows():
        norths = "".join(norths_below[x] for x in range(1, region.n + 1))
    else:
        norths = region.south_bits
    _finish(region, norths)
    ordered = [(x, y, tile_at[(x, y)]) for x, y in cells]
    return PipeDream(region, tuple(ordered), norths)


def parse_dream(text):
    """Inverse of PipeDream.render."""
    header = None
    trailer = None
    for line in text.splitlines():
        if line.startswith("dream "):
            header = line
        elif line.startswith("cells:"):
            trailer = line
    if header is None or trailer is None:
        raise ValueError("not a rendered dream (missing header or cells line)")
    fields = {}
    for token in header.split()[1:]:
        key, _, value = token.partition("=")
        fields[key] = value
    lam = BoxedPartition(parse_parts(fields.get("lambda", "")),
                         int(fields["a"]), int(fields["b"]))
    mu = BoxedPartition(parse_parts(fields.get("mu", "")),
                        int(fields["c"]), int(fields["d"]))
    region = build_region(lam, mu)
    codes = trailer[len("cells:"):].replace("/", " ").split()
    return dream_from_codes(region, codes)
