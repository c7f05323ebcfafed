"""Triangular-lattice cells, regions, weights, and symmetry operations.

Coordinate system
-----------------
Lattice vertices are integer pairs ``(va, vb)`` at real position
``(va + vb/2, vb*sqrt(3)/2)``.  A unit triangle is addressed as
``(row, col)``:

* ``row`` is the horizontal strip between heights ``row`` and ``row+1``
  (rows increase upward);
* even ``col = 2*va`` is the up triangle with vertices
  ``(va, row), (va+1, row), (va, row+1)``;
* odd ``col = 2*va + 1`` is the down triangle immediately to its right.

Orientation is therefore the parity of ``col``.  Within a row, ``col``
increases one triangle at a time left to right.  Lattice translations act
as ``(row, col) -> (row+dr, col+dc)`` with ``dc`` even, and the half turn
about a lattice point acts as ``(row, col) -> (-row-1, -col-1)``.

A vertical mirror axis is parameterized by an integer ``p`` (the line
``x = p/2``); reflection acts as ``(row, col) -> (row, 2p - 2row - 2 - col)``
and the single cell of row ``r`` crossed by the axis has ``col = p - r - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

Cell = tuple[int, int]
Loz = tuple[Cell, Cell]

UP = "U"
DOWN = "D"


def is_up(cell: Cell) -> bool:
    return cell[1] % 2 == 0


def orientation(cell: Cell) -> str:
    return UP if is_up(cell) else DOWN


def partners(cell: Cell) -> tuple[Cell, Cell, Cell]:
    """The three cells that can pair with ``cell`` into a lozenge."""
    r, c = cell
    if c % 2 == 0:
        return ((r, c - 1), (r, c + 1), (r - 1, c + 1))
    return ((r, c - 1), (r, c + 1), (r + 1, c - 1))


def lozenge(a: Cell, b: Cell) -> Loz:
    """Canonical (sorted) form of the lozenge covering cells a and b."""
    if b not in partners(a):
        raise ValueError(f"cells {a} and {b} do not form a lozenge")
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Region:
    """A finite set of unit triangles plus the tile positions of weight 1/2.

    The weight of a tiling is the product of its lozenge weights; every
    position not listed in ``half`` weighs 1.  The weighted sum over all
    tilings is the region's tiling generating function, computed by
    :func:`lozenge.count.count_oracle`.
    """

    cells: frozenset[Cell] = field(default_factory=frozenset)
    half: frozenset[Loz] = field(default_factory=frozenset)

    def __post_init__(self):
        for a, b in self.half:
            if a not in self.cells or b not in self.cells:
                raise ValueError(f"half-weighted position {(a, b)} leaves the region")
            if b not in partners(a):
                raise ValueError(f"half-weighted pair {(a, b)} is not a lozenge")

    def __bool__(self) -> bool:
        return bool(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def translate(self, dr: int, dc: int) -> "Region":
        if dc % 2:
            raise ValueError("column offset of a lattice translation must be even")
        mv = lambda cell: (cell[0] + dr, cell[1] + dc)
        return Region(
            frozenset(mv(c) for c in self.cells),
            frozenset((mv(a), mv(b)) if mv(a) <= mv(b) else (mv(b), mv(a)) for a, b in self.half),
        )

    def rotate180(self) -> "Region":
        rot = lambda cell: (-cell[0] - 1, -cell[1] - 1)
        return Region(
            frozenset(rot(c) for c in self.cells),
            frozenset((rot(a), rot(b)) if rot(a) <= rot(b) else (rot(b), rot(a)) for a, b in self.half),
        )


def region(cells, half=()) -> Region:
    return Region(frozenset(cells), frozenset(lozenge(a, b) for a, b in half))


EMPTY = Region()


def balance(r: Region) -> int:
    """Number of up cells minus number of down cells (nonzero means untileable)."""
    up = sum(1 for c in r.cells if is_up(c))
    return up - (len(r.cells) - up)


def eliminate_forced(r: Region) -> tuple[Region, Fraction, bool]:
    """Remove forced lozenges until none remain.

    A cell with a single available partner forces that lozenge into every
    tiling; both cells are removed and the lozenge's weight is collected in
    the returned factor, so the tiling generating function satisfies
    M(input) = factor * M(output).  If a cell runs out of partners entirely
    the region is untileable and the flag is set.
    """
    cells = set(r.cells)
    half = set(r.half)
    factor = Fraction(1)
    pending = sorted(cells)
    while pending:
        nxt: list[Cell] = []
        for cell in pending:
            if cell not in cells:
                continue
            live = [p for p in partners(cell) if p in cells]
            if not live:
                return Region(frozenset(cells), frozenset(
                    pos for pos in half if pos[0] in cells and pos[1] in cells)), factor, True
            if len(live) > 1:
                continue
            mate = live[0]
            pos = lozenge(cell, mate)
            if pos in half:
                factor /= 2
                half.discard(pos)
            cells.discard(cell)
            cells.discard(mate)
            for removed in (cell, mate):
                for p in partners(removed):
                    if p in cells:
                        nxt.append(p)
        pending = sorted(set(nxt))
    half = {pos for pos in half if pos[0] in cells and pos[1] in cells}
    return Region(frozenset(cells), frozenset(half)), factor, False


def _anchor(cells: frozenset[Cell]) -> Cell:
    return min(cells)


def congruent(r1: Region, r2: Region) -> bool:
    """True when r2 is a translate of r1, optionally rotated by 180 degrees.

    Half-weighted positions must map onto each other as well.
    """
    if len(r1.cells) != len(r2.cells) or len(r1.half) != len(r2.half):
        return False
    if not r1.cells:
        return True
    target = min(r2.cells)
    for cand in (r1, r1.rotate180()):
        base = min(cand.cells)
        dr, dc = target[0] - base[0], target[1] - base[1]
        if dc % 2:
            continue
        if cand.translate(dr, dc) == r2:
            return True
    return False


# ---------------------------------------------------------------------------
# vertical mirror symmetry, crossed cells, and the two-piece cut


def mirror_axis(r: Region) -> int:
    """The integer p such that r is symmetric about the line x = p/2.

    Raises ValueError when no vertical mirror axis exists.
    """
    if not r.cells:
        return 0
    rows: dict[int, list[int]] = {}
    for row, col in r.cells:
        rows.setdefault(row, []).append(col)
    row0, cols0 = next(iter(sorted(rows.items())))
    s = min(cols0) + max(cols0)
    if s % 2:
        raise ValueError("region has no vertical mirror axis")
    p = (s + 2 * row0 + 2) // 2
    refl = lambda cell: (cell[0], 2 * p - 2 * cell[0] - 2 - cell[1])
    if frozenset(refl(c) for c in r.cells) != r.cells:
        raise ValueError("region has no vertical mirror axis")
    mapped = frozenset(
        (refl(a), refl(b)) if refl(a) <= refl(b) else (refl(b), refl(a)) for a, b in r.half
    )
    if mapped != r.half:
        raise ValueError("half-weighted positions are not mirror symmetric")
    return p


def crossed_cells(r: Region, p: int) -> list[Cell]:
    """Cells of r crossed by the axis x = p/2, ordered bottom to top."""
    out = []
    for row in sorted({row for row, _ in r.cells}):
        cell = (row, p - row - 1)
        if cell in r.cells:
            out.append(cell)
    return out


@dataclass(frozen=True)
class CutResult:
    plus: Region
    minus: Region
    width: int


def symmetry_axis_cut(r: Region) -> CutResult:
    """Split a mirror-symmetric region along its axis into left and right pieces.

    The cutting path hugs the axis on its right side, and after each gap in
    the run of crossed cells it switches sides exactly when the gap holds an
    odd number of lattice triangles.  Crossed cells travel with whichever
    side the path leaves them on; every crossed pair forming a lozenge
    position straddling the axis gets weight 1/2 in its piece.  The width is
    half the number of crossed cells, and the pieces satisfy
    M(r) = 2**width * M(plus) * M(minus).
    """
    p = mirror_axis(r)
    crossed = crossed_cells(r, p)
    if len(crossed) % 2:
        raise ValueError("odd number of axis-crossed cells (region is untileable)")
    width = len(crossed) // 2

    # group crossed cells into contiguous runs, tracking the side of the path
    runs: list[tuple[list[Cell], bool]] = []  # (cells, path_on_right)
    on_right = True
    prev_row: int | None = None
    current: list[Cell] = []
    for cell in reversed(crossed):  # walk top to bottom
        row = cell[0]
        if prev_row is not None and row != prev_row - 1:
            runs.append((current, on_right))
            gap = prev_row - row - 1
            if gap % 2:
                on_right = not on_right
            current = []
        current.append(cell)
        prev_row = row
    if current:
        runs.append((current, on_right))

    side_of: dict[Cell, bool] = {}
    for cells_in_run, right in runs:
        for cell in cells_in_run:
            side_of[cell] = right

    plus_cells, minus_cells = set(), set()
    for cell in r.cells:
        row, col = cell
        axis_col = p - row - 1
        if col < axis_col:
            plus_cells.add(cell)
        elif col > axis_col:
            minus_cells.add(cell)
        else:
            (plus_cells if side_of[cell] else minus_cells).add(cell)

    new_half = {True: set(), False: set()}
    for cell in crossed:
        row, col = cell
        if (row - p) % 2 == 0:  # bottom cell of an axis lozenge position
            mate = (row + 1, col - 1)
            if mate in side_of and side_of[mate] == side_of[cell]:
                new_half[side_of[cell]].add(lozenge(cell, mate))

    def build(cells: set[Cell], extra: set[Loz]) -> Region:
        kept = {pos for pos in r.half if pos[0] in cells and pos[1] in cells}
        if kept & extra:
            raise ValueError("axis position already carries weight 1/2")
        return Region(frozenset(cells), frozenset(kept | extra))

    return CutResult(build(plus_cells, new_half[True]), build(minus_cells, new_half[False]), width)


# ---------------------------------------------------------------------------
# vertebra labeling


def vertebra_labels(
    r: Region, reference_row: int, row_span: tuple[int, int] | None = None
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Label axis vertebrae below and above a horizontal reference line.

    Crossed cells pair into lozenge-shaped (rhombic) vertebrae anchored at
    rows of fixed parity; a crossed cell whose mate row lies outside the
    ambient row span is a single-triangle vertebra, while one whose mate was
    merely removed is a dangling leftover and is not a vertebra at all.
    Vertebrae wholly on one side of the line get labels 1, 2, ... starting
    nearest the line; a triangular vertebra sitting directly on the line is
    skipped.  ``row_span`` defaults to the region's own row range.
    """
    p = mirror_axis(r)
    present = set(crossed_cells(r, p))
    if not present:
        return (), ()
    if row_span is None:
        row_lo = min(row for row, _ in r.cells)
        row_hi = max(row for row, _ in r.cells)
    else:
        row_lo, row_hi = row_span

    # classify present crossed cells into vertebrae by pair anchor r0 == p (mod 2)
    present_anchor: dict[int, tuple[int, int]] = {}  # anchor -> clipped row interval
    for cell in present:
        row = cell[0]
        r0 = row if (row - p) % 2 == 0 else row - 1
        if r0 in present_anchor:
            continue
        lo_in = (r0, p - r0 - 1) in present
        hi_in = (r0 + 1, p - r0 - 2) in present
        if lo_in and hi_in:
            present_anchor[r0] = (r0, r0 + 1)
        elif lo_in and r0 + 1 > row_hi:
            present_anchor[r0] = (r0, r0)  # triangular against the top edge
        elif hi_in and r0 < row_lo:
            present_anchor[r0] = (r0 + 1, r0 + 1)  # triangular against the base
        # otherwise: a dangling leftover whose mate was removed, not a vertebra

    # walk all pair slots of the ambient span outward from the line, label
    # them consecutively (triangular slot on the line itself is skipped),
    # and report the labels realized by vertebrae present in r
    def enumerate_side(above_side: bool) -> tuple[int, ...]:
        anchors = [r0 for r0 in range(row_lo - 1, row_hi + 1) if (r0 - p) % 2 == 0]
        slots = []
        for r0 in anchors:
            lo, hi = max(r0, row_lo), min(r0 + 1, row_hi)
            if lo > hi:
                continue
            if above_side and lo >= reference_row:
                slots.append((lo, r0, lo == hi, lo))
            elif not above_side and hi <= reference_row - 1:
                slots.append((-hi, r0, lo == hi, hi))
        slots.sort()
        out = []
        label = 0
        for i, (_, r0, triangular, near) in enumerate(slots):
            edge = near == (reference_row if above_side else reference_row - 1)
            if i == 0 and triangular and edge:
                continue  # skipped: triangular vertebra touching the line
            label += 1
            got = present_anchor.get(r0)
            if got is not None:
                lo, hi = got
                if (lo >= reference_row) if above_side else (hi <= reference_row - 1):
                    out.append(label)
        return tuple(out)

    return enumerate_side(False), enumerate_side(True)


# ---------------------------------------------------------------------------
# text format


def region_to_text(r: Region) -> str:
    """Serialize in the line-based TRIREGION format (bit-exact, canonical)."""
    lines = ["TRIREGION 1"]
    for row, col in sorted(r.cells):
        lines.append(f"C {row} {col} {orientation((row, col))}")
    for a, b in sorted(r.half):
        lines.append(
            f"H {a[0]} {a[1]} {orientation(a)} {b[0]} {b[1]} {orientation(b)}"
        )
    return "\n".join(lines) + "\n"


def region_from_text(text: str) -> Region:
    """Parse the TRIREGION format; parse errors carry 1-based line numbers."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != "TRIREGION 1":
        raise ValueError("line 1: expected header 'TRIREGION 1'")

    def parse_cell(parts: list[str], lineno: int) -> Cell:
        row, col, orient = int(parts[0]), int(parts[1]), parts[2]
        if orient not in (UP, DOWN):
            raise ValueError(f"line {lineno}: orientation must be U or D")
        if orientation((row, col)) != orient:
            raise ValueError(f"line {lineno}: orientation {orient} inconsistent with column parity")
        return (row, col)

    cells: set[Cell] = set()
    half: set[Loz] = set()
    for i, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "C" and len(parts) == 4:
                cells.add(parse_cell(parts[1:], i))
            elif parts[0] == "H" and len(parts) == 7:
                half.add(lozenge(parse_cell(parts[1:4], i), parse_cell(parts[4:7], i)))
            else:
                raise ValueError(f"line {i}: expected 'C r c O' or 'H r c O r c O'")
        except ValueError:
            raise
        except Exception as exc:
            raise ValueError(f"line {i}: {exc}") from exc
    return Region(frozenset(cells), frozenset(half))
