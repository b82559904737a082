"""The staircase region a pair of boxed partitions is tiled over.

Rows are counted from the bottom (y = 1..a+b) and columns from the west
(x = 1..n with n = a+b+c+d), for lam in an a-by-b box and mu in a
c-by-d box.  The lower half is rows 1..b; its row y occupies columns
(b-y+1)..(b+d+c), so the west side descends as a staircase.  The upper
half is rows b+1..b+a; row b+k occupies columns 1..(b+d+c+k), so the
east side ascends as a staircase.

Fixed boundary labels:

  * west staircase (lower): the vertical edge west of each row's first
    cell is 0, and the horizontal edge under that cell is R;
  * south edge, columns b+1..b+d+c: the bit string of mu, west to east;
  * east side of the lower half: the first b letters of lam's bit
    string, bottom edge first, 0 mapped to R and 1 mapped to 0;
  * west side of the upper half: the last a letters of lam's bit string
    read top to bottom, 0 mapped to R and 1 mapped to Q;
  * east staircase (upper): the vertical edge east of row b+k's last
    cell is 1, and the horizontal edge under that cell is Q for
    k <= q* and 0 above, where q* counts the Q's just mentioned;
  * north edges (above row a+b): free; a completed tiling must put a
    0/1 string of content 0^(b+d) 1^(c+a) there.

Equivariant tiles are only legal in a zone hugging the middle of the
region.  In the lower half that zone is the columns strictly east of
a+b.  In the upper half it recedes diagonally: row b+k allows them in
columns x with x + k <= a+b+1, so each row up loses its easternmost
zone column.  (The lower bound matches the drawn zones of every worked
instance; the upper staircase is forced by the published expansions --
the rectangles drawn around the upper zones overshoot it by including
cells whose use would contradict the stated dream counts, and the
boundary is where the diagonal of the associated juggling picture
crosses each row.)
"""

from .partitions import bits_of


class Region:
    """Geometry plus fixed labels for one (lam, mu) pair."""

    def __init__(self, lam, mu):
        self.lam = lam
        self.mu = mu
        self.a, self.b = lam.box
        self.c, self.d = mu.box
        self.n = self.a + self.b + self.c + self.d
        self.eq_split = self.a + self.b
        lam_bits = bits_of(lam)
        self.south_bits = bits_of(mu)  # columns b+1 .. b+d+c
        # east labels of the lower half, index y-1 for y = 1..b
        self.east_lower = tuple(
            "R" if ch == "0" else "0" for ch in lam_bits[:self.b])
        # west labels of the upper half, k = 1..a, top edge gets the
        # first of the last a letters
        self.west_upper = {
            k: ("R" if lam_bits[self.b + self.a - k] == "0" else "Q")
            for k in range(1, self.a + 1)}
        self.q_star = sum(1 for v in self.west_upper.values() if v == "Q")

    # -- geometry ------------------------------------------------------

    def lower_cols(self, y):
        """Columns of lower row y, west to east."""
        return range(self.b - y + 1, self.b + self.d + self.c + 1)

    def upper_cols(self, k):
        """Columns of upper row b+k, west to east."""
        return range(1, self.b + self.d + self.c + k + 1)

    def rows(self):
        """Row descriptors (y, half, columns) from the bottom up."""
        out = []
        for y in range(1, self.b + 1):
            out.append((y, "lower", tuple(self.lower_cols(y))))
        for k in range(1, self.a + 1):
            out.append((self.b + k, "upper", tuple(self.upper_cols(k))))
        return out

    def cells(self):
        """All cells in scan order: lower rows west->east then upper rows
        east->west, always bottom-up."""
        out = []
        for y, half, cols in self.rows():
            out.extend((x, y) for x in (cols if half == "lower" else
                                        tuple(reversed(cols))))
        return out

    # -- fixed labels --------------------------------------------------

    def south_fixed(self, x, y):
        """The fixed label under cell (x, y), or None if the edge is
        interior (fed by the row below)."""
        if y <= self.b:                      # lower half
            if x == self.b - y + 1:
                return "R"                   # west staircase horizontal
            if y == 1:
                return self.south_bits[x - self.b - 1]
            return None
        k = y - self.b                       # upper half
        if x == self.b + self.d + self.c + k:
            return "Q" if k <= self.q_star else "0"
        if y == 1:                           # b = 0: mu's bits sit under row 1
            return self.south_bits[x - self.b - 1]
        return None

    def west_fixed_lower(self, y):
        return "0"

    def east_required_lower(self, y):
        return self.east_lower[y - 1]

    def east_fixed_upper(self, k):
        return "1"

    def west_required_upper(self, k):
        return self.west_upper[k]

    # -- equivariant zone ----------------------------------------------

    def eq_allowed_at(self, x, y):
        """Whether the equivariant tile is legal in cell (x, y).

        Lower half: strictly east of column a+b.  Upper half, row b+k:
        the zone recedes one column per row, x + k <= a+b+1.
        """
        if y <= self.b:
            return x > self.eq_split
        return x + (y - self.b) <= self.eq_split + 1

    # -- cross-module views --------------------------------------------

    def boundary_slice_fragment(self):
        """The lower-boundary labels arranged the way a slice at level
        a+b stores them: one horizontal label per column (the sub-diagonal
        columns a+1..a+b-1 carry the staircase R's, column a+b the bottom
        R, columns a+b+1..n the bits of mu) and one vertical label per
        row a+1..a+b (the east labels of the lower half, top row first).
        """
        level = self.a + self.b
        horizontal = {}
        for y in range(2, self.b + 1):
            horizontal[level + 1 - y] = "R"
        if self.b >= 1:
            horizontal[level] = "R"
        for j, ch in enumerate(self.south_bits, start=1):
            horizontal[level + j] = ch
        vertical = {}
        for y in range(1, self.b + 1):
            vertical[level + 1 - y] = self.east_lower[y - 1]
        return {"horizontal": horizontal, "vertical": vertical}

    def __repr__(self):
        return "Region(lam=%s, mu=%s)" % (self.lam, self.mu)


def build_region(lam, mu):
    """Region for the ordered pair (lam, mu); lam's box gives (a, b) and
    mu's box gives (c, d)."""
    return Region(lam, mu)


def render_region(region, tile_at=None):
    """ASCII grid of the region: fixed labels always, tile codes and
    interior edge labels when a tiling is supplied via ``tile_at``
    (a mapping from (x, y) to a Tile).

    Every cell is a fixed-width column; vertical edge labels sit just
    left of their bar, horizontal labels in the middle of their dashes.
    """
    cw = 16        # full width of one cell column on screen
    rows = region.rows()
    if not rows:
        return "(region with no cells; the tiling is empty)"

    def bar(x):
        return (x - 1) * cw + 3   # screen column of the bar west of cell x

    def put(line, pos, text):
        end = pos + len(text)
        if len(line) < end:
            line.extend(" " * (end - len(line)))
        line[pos:end] = list(text)

    def cell_line(y, half, cols):
        line = []
        for x in cols:
            t = tile_at.get((x, y)) if tile_at else None
            if t is not None:
                west = t.west
            elif x == cols[0]:
                west = (region.west_fixed_lower(y) if half == "lower"
                        else region.west_required_upper(y - region.b))
            else:
                west = ""
            put(line, bar(x) - 3, "%3s|" % west)
            code = t.code if t else ""
            put(line, bar(x) + 1, code.center(cw - 4))
        x_end = cols[-1] + 1
        t = tile_at.get((cols[-1], y)) if tile_at else None
        east = t.east if t else (region.east_required_lower(y)
                                 if half == "lower"
                                 else region.east_fixed_upper(y - region.b))
        put(line, bar(x_end) - 3, "%3s|" % east)
        return "".join(line).rstrip()

    def edge_line(cols, labels):
        line = []
        for x in cols:
            seg = ["-"] * (cw - 1)
            lab = labels.get(x, "")
            if lab:
                mid = (len(seg) - len(lab)) // 2
                seg[mid:mid + len(lab)] = list(lab)
            put(line, bar(x), "+" + "".join(seg))
        put(line, bar(cols[-1] + 1), "+")
        return "".join(line).rstrip()

    lines = []
    top_y, _, top_cols = rows[-1]
    top_labels = ({x: tile_at[(x, top_y)].north for x in top_cols}
                  if tile_at else {})
    lines.append(edge_line(top_cols, top_labels))
    for (y, half, cols) in reversed(rows):
        lines.append(cell_line(y, half, cols))
        labels = {}
        for x in cols:
            fixed = region.south_fixed(x, y)
            if fixed is not None:
                labels[x] = fixed
            elif tile_at:
                labels[x] = tile_at[(x, y)].south
        lines.append(edge_line(cols, labels))
    return "\n".join(lines)
