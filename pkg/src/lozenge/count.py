"""Two independent engines for tiling generating functions.

``count_oracle`` sums lozenge weights over all tilings by a profile
dynamic program: cells are scanned in (row, col) order, and each state is
the bitmask of already-covered cells ahead of the scan front.  It works
on any region.

``count_gv`` applies the nonintersecting-path determinant method to the
two zigzag-anchored families: tilings biject onto tuples of paths of
rhombi from one boundary side to the other, so the weighted count is a
determinant of single-path generating functions.  Both encodings are
available: paths can start on the southwestern side (steps east and
northeast on the segment lattice) or on the northwestern side (steps
east and southeast).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RationalMatrix, determinant
from .lattice import Cell, Loz, Region, balance, is_up, lozenge
from .regions import IndexList, Vertex, ZigzagWalk, zigzag_walk

SOUTHWEST = "southwest"
NORTHWEST = "northwest"


def count_oracle(r: Region) -> Fraction:
    """Exact weighted tiling count by backtracking over the scan frontier.

    Weight-1 lozenges are counted with weight 2 internally and the total is
    divided by 2**(cells/2) at the end, so the whole dynamic program runs
    over Python integers.
    """
    ncells = len(r.cells)
    if ncells == 0:
        return Fraction(1)
    if ncells % 2 or balance(r) != 0:
        return Fraction(0)
    cells = sorted(r.cells)
    index = {c: i for i, c in enumerate(cells)}
    half = r.half

    # forward partner offsets and doubled weights per cell
    moves: list[list[tuple[int, int]]] = []
    for i, cell in enumerate(cells):
        row, col = cell
        opts = []
        fwd = [(row, col + 1)] if is_up(cell) else [(row, col + 1), (row + 1, col - 1)]
        for mate in fwd:
            j = index.get(mate)
            if j is not None:
                w2 = 1 if lozenge(cell, mate) in half else 2
                opts.append((j - i, w2))
        moves.append(opts)

    states: dict[int, int] = {0: 1}
    for i in range(ncells):
        nxt: dict[int, int] = {}
        opts = moves[i]
        for mask, val in states.items():
            if mask & 1:
                key = mask >> 1
                nxt[key] = nxt.get(key, 0) + val
                continue
            for d, w2 in opts:
                bit = 1 << d
                if mask & bit:
                    continue
                key = (mask | bit) >> 1
                nxt[key] = nxt.get(key, 0) + val * w2
        if not nxt:
            return Fraction(0)
        states = nxt
    return Fraction(states.get(0, 0), 1 << (ncells // 2))


def enumerate_tilings(r: Region):
    """Yield every tiling as a frozenset of lozenge positions (small regions)."""
    cells = sorted(r.cells)

    def rec(remaining: set[Cell], acc: list[Loz]):
        if not remaining:
            yield frozenset(acc)
            return
        cell = min(remaining)
        row, col = cell
        fwd = [(row, col + 1)] if is_up(cell) else [(row, col + 1), (row + 1, col - 1)]
        for mate in fwd:
            if mate in remaining:
                remaining.discard(cell)
                remaining.discard(mate)
                acc.append(lozenge(cell, mate))
                yield from rec(remaining, acc)
                acc.pop()
                remaining.add(cell)
                remaining.add(mate)

    if len(cells) % 2 == 0:
        yield from rec(set(cells), [])


def tiling_weight(r: Region, tiling: frozenset[Loz]) -> Fraction:
    w = Fraction(1)
    for pos in tiling:
        if pos in r.half:
            w /= 2
    return w


@dataclass(frozen=True)
class PathEndpoints:
    """Start and end segments of the path encoding, in determinant order."""

    side: str
    starts: tuple[Vertex, ...]
    ends: tuple[Vertex, ...]

    @property
    def size(self) -> int:
        return len(self.starts)


def _path_matrix(walkdata: ZigzagWalk, side: str) -> tuple[PathEndpoints, RationalMatrix]:
    """Single-path generating functions between boundary segments.

    Southwestern encoding: segments are southwest-facing edges keyed
    (va, vb); a path steps east to (va+1, vb) across the flat lozenge on
    cells ((vb, 2va+1), (vb, 2va+2)) or northeast to (va, vb+1) across the
    standing lozenge on cells ((vb, 2va+1), (vb+1, 2va)).  Northwestern
    encoding: segments are northwest-facing edges; a path steps east to
    (va+1, vb) across cells ((vb, 2va), (vb, 2va+1)) or southeast to
    (va+1, vb-1) across ((vb, 2va), (vb-1, 2va+1)).  Either way the
    segment coordinates only grow in a fixed lexicographic order, so one
    sorted sweep per start segment suffices.
    """
    region = walkdata.region
    cells = region.cells
    half = region.half
    if side == SOUTHWEST:
        starts = tuple(walkdata.sw_side)
        ends = tuple(reversed(walkdata.right_se))
        order_key = lambda seg: seg
        def transitions(seg: Vertex):
            va, vb = seg
            pivot = (vb, 2 * va + 1)
            if pivot in cells:
                yield pivot, (vb, 2 * va + 2), (va + 1, vb)
                yield pivot, (vb + 1, 2 * va), (va, vb + 1)
    else:
        starts = tuple(walkdata.nw_side)
        ends = tuple(walkdata.right_sw)
        order_key = lambda seg: (seg[0], -seg[1])
        def transitions(seg: Vertex):
            va, vb = seg
            pivot = (vb, 2 * va)
            if pivot in cells:
                yield pivot, (vb, 2 * va + 1), (va + 1, vb)
                yield pivot, (vb - 1, 2 * va + 1), (va + 1, vb - 1)

    # all segments with an outgoing move, plus every endpoint; both moves
    # strictly increase the order key, so one sorted sweep is a valid
    # topological order
    universe: set[Vertex] = set(starts) | set(ends)
    for row_, col_ in cells:
        if side == SOUTHWEST and col_ % 2 == 1:
            universe.add(((col_ - 1) // 2, row_))
        elif side == NORTHWEST and col_ % 2 == 0:
            universe.add((col_ // 2, row_))
    order = sorted(universe, key=order_key)

    rows = []
    for u in starts:
        values: dict[Vertex, Fraction] = {u: Fraction(1)}
        for seg in order:
            val = values.get(seg)
            if not val:
                continue
            for pivot, mate, nxt in transitions(seg):
                if mate in cells:
                    w = Fraction(1, 2) if lozenge(pivot, mate) in half else Fraction(1)
                    values[nxt] = values.get(nxt, Fraction(0)) + val * w
        rows.append([values.get(seg, Fraction(0)) for seg in ends])
    return PathEndpoints(side, starts, ends), RationalMatrix(rows)


def gv_matrix(
    l: IndexList, q: IndexList, x: int, family: str, side: str = SOUTHWEST
) -> tuple[PathEndpoints, RationalMatrix]:
    """Endpoints and the path-count matrix for one family member."""
    if family not in ("R", "Rbar"):
        raise ValueError(f"family must be 'R' or 'Rbar', got {family!r}")
    if side not in (SOUTHWEST, NORTHWEST):
        raise ValueError(f"side must be southwest or northwest, got {side!r}")
    walkdata = zigzag_walk(l, q, x, barred=family == "Rbar")
    return _path_matrix(walkdata, side)


def count_gv(
    r: Region, l: IndexList, q: IndexList, x: int, family: str, side: str = SOUTHWEST
) -> Fraction:
    """Weighted tiling count as a determinant of path generating functions."""
    walkdata = zigzag_walk(l, q, x, barred=family == "Rbar")
    if walkdata.region != r:
        raise ValueError("region does not match the given family parameters")
    _, matrix = gv_matrix(l, q, x, family, side)
    return determinant(matrix)
