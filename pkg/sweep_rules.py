"""Candidate predicate sets for sweep.py — pipe-trace round."""

from sweep import fusor_below, strict_fusor_below, chain_to_displacer

OPP = {"n": "s", "s": "n", "w": "e", "e": "w"}
STEP = {"n": (0, 1), "s": (0, -1), "w": (-1, 0), "e": (1, 0)}


def edge_label(t, edge):
    return {"n": t.north, "s": t.south, "w": t.west, "e": t.east}[edge]


def pipe_exit(t, entry):
    """Where a tracked 1-pipe entering tile t at `entry` leaves it.

    Returns an edge name, or ("fused", strict) when the pipe ends in a
    fusor.  Entry edges that cannot carry a 1 raise.
    """
    k = t.kind
    if k == "crossing":
        return OPP[entry]
    if k == "dot":
        pairs = ({"w": "n", "n": "w", "s": "e", "e": "s"} if t.half == "lower"
                 else {"e": "n", "n": "e", "s": "w", "w": "s"})
        return pairs[entry]
    if k == "fusor":
        sink = ("w", "n") if t.half == "lower" else ("e", "n")
        if len(t.params[0]) >= 2:
            if entry in sink:
                return ("fused", True)
            return OPP[entry] if entry not in sink else None
        # degenerate fusor: a plain elbow on the word side, another on the 0 side
        pairs = ({"w": "n", "n": "w", "s": "e", "e": "s"} if t.half == "lower"
                 else {"e": "n", "n": "e", "s": "w", "w": "s"})
        return pairs[entry]
    if k == "displacer":
        if t.half == "lower":
            return {"s": "e", "e": "s"}[entry]
        return {"s": "w", "w": "s"}[entry]
    raise ValueError(k)


def trace_south_pipe(grid, x, y):
    """Follow the 1-pipe leaving the south edge of the eq tile at (x, y).

    Returns ("fused", strict_bool) or ("exit", direction, column).
    """
    pos = (x, y - 1)
    entry = "n"
    seen = set()
    while True:
        t = grid.get(pos)
        if t is None:
            back = OPP[entry]
            return ("exit", back, pos[0])
        if (pos, entry) in seen:
            return ("loop", None, None)
        seen.add((pos, entry))
        out = pipe_exit(t, entry)
        if isinstance(out, tuple):
            return ("fused", len(t.params[0]) >= 2, pos[0])
        dx, dy = STEP[out]
        pos = (pos[0] + dx, pos[1] + dy)
        entry = OPP[out]


def trace_rule(grid, x, y, g, allow_exit_col):
    r = trace_south_pipe(grid, x, y)
    if r[0] == "fused" and r[1]:
        return True
    if r[0] == "exit" and r[1] == "s":
        return allow_exit_col(r[2], g)
    return False


def no_sfu_west_in_row(grid, x, y):
    cx = x - 1
    while True:
        t = grid.get((cx, y))
        if t is None:
            return True
        if t.kind == "fusor" and len(t.params[0]) >= 2:
            return False
        cx -= 1


def imm_west_not_sfu(grid, x, y):
    t = grid.get((x - 1, y))
    return not (t is not None and t.kind == "fusor"
                and len(t.params[0]) >= 2)


LOWER = {
    "last-col&c>0&noWsfu": lambda x, y, g, grid: (
        g.c > 0 and x == g.b + g.d + g.c and no_sfu_west_in_row(grid, x, y)),
    "last-col&c>0&immW": lambda x, y, g, grid: (
        g.c > 0 and x == g.b + g.d + g.c and imm_west_not_sfu(grid, x, y)),
}
def fused_strict(grid, x, y):
    r = trace_south_pipe(grid, x, y)
    return r[0] == "fused" and r[1]


def cellband(x, y, g, m):
    return g.d > 0 and y == g.b + 1 and 1 <= x - g.b <= m


UPPER = {
    "fused|band:max(d,min(a,c))": lambda x, y, g, grid: (
        fused_strict(grid, x, y)
        or cellband(x, y, g, max(g.d, min(g.a, g.c)))),
    "fused|band:max(d,a+c-2)": lambda x, y, g, grid: (
        fused_strict(grid, x, y)
        or cellband(x, y, g, max(g.d, g.a + g.c - 2))),
    "fused|band:d+[a>1][c>1]": lambda x, y, g, grid: (
        fused_strict(grid, x, y)
        or cellband(x, y, g, g.d + (1 if (g.a > 1 and g.c > 1) else 0))),
}
def imm_east_sfu(x, y, g, grid):
    t = grid.get((x + 1, y))
    return (t is not None and t.kind == "fusor" and t.half == "lower"
            and len(t.params[0]) >= 2)


def bundle_walk(x, y, g, grid, blocker):
    """Walk the displaced bundle from the displacer toward its fusor.

    Lower displacers push east; upper ones push west.  The walk may ride
    through crossings whose vertical letter is not `blocker`; it succeeds
    when it reaches a strict fusor of the same half.
    """
    t0 = grid.get((x, y))
    step = 1 if t0.half == "lower" else -1
    cx = x + step
    while True:
        t = grid.get((cx, y))
        if t is None or t.half != t0.half:
            return False
        if t.kind == "fusor":
            return len(t.params[0]) >= 2
        if t.kind == "crossing":
            if t.params[1] == blocker:
                return False
            cx += step
            continue
        return False


DI = {
    "walk-no1": lambda x, y, g, grid: bundle_walk(
        x, y, g, grid, "1" if y <= g.b else "0"),
    "walk-no1&low": lambda x, y, g, grid: y <= g.b and bundle_walk(
        x, y, g, grid, "1"),
    "imm-east-sfu": imm_east_sfu,
}
