"""Partitions inside a fixed rectangle, and their bit-string encoding.

A Schubert class is indexed by a partition together with its ambient box
(a rows by b columns); the box is part of the index, so it travels with
the partition everywhere.  Walking the partition's boundary from the
box's NE corner to its SW corner and writing 0 for each horizontal step
and 1 for each vertical step identifies such a pair with a bit string of
content 0^b 1^a; both directions of that identification live here.
"""


class BoxedPartition:
    """A weakly decreasing tuple of row lengths inside an a-by-b box."""

    __slots__ = ("parts", "box_rows", "box_cols")

    def __init__(self, parts, box_rows, box_cols):
        parts = tuple(int(p) for p in parts)
        box_rows = int(box_rows)
        box_cols = int(box_cols)
        if box_rows < 0 or box_cols < 0:
            raise ValueError("box dimensions must be nonnegative")
        if len(parts) > box_rows:
            stripped = parts[box_rows:]
            if any(stripped):
                raise ValueError(
                    "partition %r has more than %d nonzero rows" % (parts, box_rows))
            parts = parts[:box_rows]
        parts = parts + (0,) * (box_rows - len(parts))
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError("negative part in %r" % (parts,))
            if i and p > parts[i - 1]:
                raise ValueError("parts not weakly decreasing: %r" % (parts,))
        if parts and parts[0] > box_cols:
            raise ValueError(
                "part %d exceeds box width %d" % (parts[0], box_cols))
        self.parts = parts
        self.box_rows = box_rows
        self.box_cols = box_cols

    @property
    def box(self):
        return (self.box_rows, self.box_cols)

    def size(self):
        """The number of boxes |p|, i.e. the sum of the parts."""
        return sum(self.parts)

    def __eq__(self, other):
        if not isinstance(other, BoxedPartition):
            return NotImplemented
        return (self.parts == other.parts and self.box == other.box)

    def __hash__(self):
        return hash((self.parts, self.box_rows, self.box_cols))

    def __str__(self):
        body = ",".join(str(p) for p in self.parts) if self.parts else ""
        return "(%s) in %dx%d" % (body, self.box_rows, self.box_cols)

    def __repr__(self):
        return "BoxedPartition(%r, %d, %d)" % (
            list(self.parts), self.box_rows, self.box_cols)

    def to_json(self):
        return {"parts": list(self.parts), "box": [self.box_rows, self.box_cols]}

    @staticmethod
    def from_json(obj):
        rows, cols = obj["box"]
        return BoxedPartition(obj["parts"], rows, cols)


def parse_parts(text):
    """Parse a comma-separated part list; the empty string means the
    empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ValueError("malformed partition %r; expected comma-separated "
                         "integers like 2,1" % (text,))


def bits_of(p):
    """Bit string of a BoxedPartition, as a str over '0'/'1'.

    The 1s sit at positions b + i - parts[i] (1-indexed, i = 1..a); the
    companion walk implementation bits_by_walk is checked against this in
    the tests.
    """
    a, b = p.box_rows, p.box_cols
    ones = set()
    for i in range(1, a + 1):
        pos = b + i - p.parts[i - 1]
        ones.add(pos)
    if len(ones) != a:
        raise ValueError("bit positions collide for %r" % (p,))
    return "".join("1" if i in ones else "0" for i in range(1, a + b + 1))


def bits_by_walk(p):
    """Bit string by literally walking the partition's boundary.

    The partition sits in the box's NW corner, rows left-justified.  Walk
    from the NE corner of the box to the SW corner along the partition's
    staircase edge, emitting 0 per westward step and 1 per downward step.
    """
    a, b = p.box_rows, p.box_cols
    out = []
    col = b  # column the walker currently stands at
    for i in range(a):
        out.append("0" * (col - p.parts[i]))  # west along the top of row i+1
        out.append("1")                       # down across row i+1
        col = p.parts[i]
    out.append("0" * col)                     # finish along the bottom edge
    return "".join(out)


def partition_of(bits):
    """Inverse of bits_of: any 0/1 string gives a BoxedPartition whose
    box has one row per 1 and one column per 0."""
    bits = str(bits)
    if any(ch not in "01" for ch in bits):
        raise ValueError("bit string must be over 0/1: %r" % (bits,))
    a = bits.count("1")
    b = bits.count("0")
    parts = []
    i = 0
    for pos, ch in enumerate(bits, start=1):
        if ch == "1":
            i += 1
            parts.append(b + i - pos)
    return BoxedPartition(parts, a, b)


def inversions(bits):
    """Number of pairs (i < j) with bits[i] = 1 and bits[j] = 0."""
    bits = str(bits)
    total = 0
    ones_seen = 0
    for ch in bits:
        if ch == "1":
            ones_seen += 1
        elif ch == "0":
            total += ones_seen
        else:
            raise ValueError("bit string must be over 0/1: %r" % (bits,))
    return total


def all_partitions_in_box(a, b):
    """Every BoxedPartition in an a-by-b box, in a fixed deterministic
    order (lexicographic by part tuple)."""
    results = []

    def grow(prefix, limit):
        if len(prefix) == a:
            results.append(BoxedPartition(prefix, a, b))
            return
        for p in range(limit + 1):
            grow(prefix + [p], p)

    grow([], b)
    results.sort(key=lambda q: q.parts)
    return results
