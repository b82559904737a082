"""Tile catalogs for the staircase tiling engine.

A tile is a unit cell with four edge labels.  Horizontal edges (north,
south) carry a single letter from {0, 1, R, Q}; vertical edges (west,
east) carry either a single letter or a short word.  In the lower half
of the region the vertical words run over {1, R, Q} with no repeats and
any 1 last, plus the singleton letter 0; the upper half uses the
left-right mirror image of everything with the roles of 0 and 1
exchanged (so upper words run over {0, R, Q}, any 0 last, plus the
singleton 1).

Four families make up the full catalog:

  crossing  west=east=V, north=south=b     (a pipe passes straight through)
  dot       west=0, north=0, south=b, east=b   (two elbows sharing a cell)
  fusor     west=V, north=last(V), south=0, east=0
  displacer west=V, north=last(V), south=c, east=V+c

The all-0 dot (and its all-1 upper mirror) is the equivariant tile; a
tile carrying a vertical word of length >= 2 is a strict K-tile.  The
ordinary catalog (mode H) keeps only single-letter crossings, dots, and
single-letter fusors -- the classic crossings and elbows.
"""

from collections import namedtuple

LETTERS = "01RQ"

# Legal lower vertical words: subwords of {1,R,Q} with no repeats and 1 last.
LOWER_WORDS = ("1", "R", "Q", "RQ", "QR", "R1", "Q1", "RQ1", "QR1")

_FLIP = str.maketrans("01", "10")


def flip(label):
    """Exchange 0 and 1 letterwise (R and Q are untouched)."""
    return label.translate(_FLIP)


LOWER_VERTICAL = frozenset(("0",) + LOWER_WORDS)
UPPER_VERTICAL = frozenset(flip(v) for v in LOWER_VERTICAL)

TileFlags = namedtuple(
    "TileFlags",
    ["is_equivariant", "is_strict", "fusing_letters", "is_weighted_fusor"])


class Tile:
    """One immutable catalog entry.

    ``params`` always describe the defining lower-half tile; an upper
    tile keeps the lower tile's parameters and prefixes its code with U.
    """

    __slots__ = ("half", "kind", "params", "west", "east", "north", "south",
                 "code")

    def __init__(self, half, kind, params, west, east, north, south):
        self.half = half
        self.kind = kind
        self.params = params
        self.west = west
        self.east = east
        self.north = north
        self.south = south
        self.code = self._make_code()

    def _make_code(self):
        prefix = "U" if self.half == "upper" else ""
        if self.kind == "crossing":
            body = "CR(%s;%s)" % self.params
        elif self.kind == "dot":
            body = "DOT(%s)" % self.params
        elif self.kind == "fusor":
            body = "FU(%s)" % self.params
        elif self.kind == "displacer":
            body = "DI(%s;%s)" % self.params
        else:
            raise ValueError("unknown tile kind %r" % (self.kind,))
        return prefix + body

    @property
    def is_equivariant(self):
        return self.kind == "dot" and self.params == ("0",)

    @property
    def is_strict(self):
        return max(len(self.west), len(self.east)) >= 2

    @property
    def fusing_letters(self):
        return len(self.params[0]) - 1 if self.kind == "fusor" else 0

    @property
    def is_weighted_fusor(self):
        return self.kind == "fusor" and len(self.params[0]) >= 2

    def __eq__(self, other):
        if not isinstance(other, Tile):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return "<Tile %s w=%s e=%s n=%s s=%s>" % (
            self.code, self.west, self.east, self.north, self.south)


def tile_flags(t):
    """The enumerator-facing summary of a tile's bookkeeping roles."""
    return TileFlags(t.is_equivariant, t.is_strict, t.fusing_letters,
                     t.is_weighted_fusor)


def tile_mirror(t):
    """Left-right flip with 0 and 1 exchanged; swaps halves.

    An involution pairing each lower tile with its upper counterpart.
    """
    half = "upper" if t.half == "lower" else "lower"
    return Tile(half, t.kind, t.params,
                west=flip(t.east), east=flip(t.west),
                north=flip(t.north), south=flip(t.south))


def _build_lower_k():
    tiles = []
    for v in ("0",) + LOWER_WORDS:
        for b in LETTERS:
            if v == b:
                continue  # a single-letter vertical label may not equal b
            if v == "1" and b != "0":
                continue
            tiles.append(Tile("lower", "crossing", (v, b),
                              west=v, east=v, north=b, south=b))
    for b in LETTERS:
        tiles.append(Tile("lower", "dot", (b,),
                          west="0", east=b, north="0", south=b))
    for v in LOWER_WORDS:
        tiles.append(Tile("lower", "fusor", (v,),
                          west=v, east="0", north=v[-1], south="0"))
    for v in LOWER_WORDS:
        for c in LETTERS:
            if v + c in LOWER_WORDS:
                tiles.append(Tile("lower", "displacer", (v, c),
                                  west=v, east=v + c, north=v[-1], south=c))
    return tuple(tiles)


def _is_h_tile(t):
    if t.kind == "crossing":
        return len(t.params[0]) == 1
    if t.kind == "dot":
        return True
    if t.kind == "fusor":
        return len(t.params[0]) == 1
    return False


_LOWER_K = _build_lower_k()
_LOWER_H = tuple(t for t in _LOWER_K if _is_h_tile(t))
_UPPER_K = tuple(tile_mirror(t) for t in _LOWER_K)
_UPPER_H = tuple(tile_mirror(t) for t in _LOWER_H)

TILE_BY_CODE = {t.code: t for t in _LOWER_K + _UPPER_K}


def catalog(half, mode):
    """All tiles for one half of the region in one mode ('H' or 'K')."""
    half = half.lower()
    mode = mode.upper()
    if half not in ("lower", "upper"):
        raise ValueError("half must be 'lower' or 'upper': %r" % (half,))
    if mode not in ("H", "K"):
        raise ValueError("mode must be 'H' or 'K': %r" % (mode,))
    table = {("lower", "K"): _LOWER_K, ("lower", "H"): _LOWER_H,
             ("upper", "K"): _UPPER_K, ("upper", "H"): _UPPER_H}
    return table[(half, mode)]


def catalog_breakdown(half, mode):
    """Tile counts by kind, for reporting."""
    counts = {}
    for t in catalog(half, mode):
        counts[t.kind] = counts.get(t.kind, 0) + 1
    counts["total"] = len(catalog(half, mode))
    return counts


def _match_index(tiles, key):
    index = {}
    for t in tiles:
        index.setdefault(key(t), []).append(t)
    for bucket in index.values():
        bucket.sort(key=lambda t: t.code)
    return index


_LOWER_INDEX = {
    "K": _match_index(_LOWER_K, lambda t: (t.west, t.south)),
    "H": _match_index(_LOWER_H, lambda t: (t.west, t.south)),
}
_UPPER_INDEX = {
    "K": _match_index(_UPPER_K, lambda t: (t.east, t.south)),
    "H": _match_index(_UPPER_H, lambda t: (t.east, t.south)),
}


def match_lower(west, south, mode="K", eq_allowed=True):
    """Lower tiles whose west and south labels are as given, sorted by
    code.  The equivariant dot only appears when eq_allowed."""
    if west not in LOWER_VERTICAL:
        raise ValueError("illegal lower vertical label %r" % (west,))
    if south not in LETTERS:
        raise ValueError("illegal horizontal label %r" % (south,))
    found = _LOWER_INDEX[mode.upper()].get((west, south), [])
    if not eq_allowed:
        found = [t for t in found if not t.is_equivariant]
    return list(found)


def match_upper(east, south, mode="K", eq_allowed=True):
    """Upper tiles with the given east and south labels, sorted by code.

    The upper half is scanned east to west, so the known vertical label
    is the east one.  Note the word "0" is a perfectly legal upper
    vertical label (it is the mirror of the lower word "1"); only labels
    outside the mirrored word set are rejected.
    """
    if east not in UPPER_VERTICAL:
        raise ValueError("illegal upper vertical label %r" % (east,))
    if south not in LETTERS:
        raise ValueError("illegal horizontal label %r" % (south,))
    found = _UPPER_INDEX[mode.upper()].get((east, south), [])
    if not eq_allowed:
        found = [t for t in found if not t.is_equivariant]
    return list(found)
