"""Constructors for the hexagon families and the zigzag-anchored families.

All regions are produced by walking an explicit closed boundary on the
triangular lattice (steps E, W, NE, NW, SE, SW between integer vertices
``(va, vb)``) and rasterizing it by horizontal scanline parity.

Two groups of families live here:

* ``hexagon``/``windowed_hexagon``: a hexagon with side lengths
  ``a, b+k, b, a+k, b, b+k`` (base ``a+k`` at the bottom, vertical mirror
  axis), optionally with axis-symmetric triangular windows removed.
* ``r_region``/``r_bar_region``: the simply connected regions carved out
  around two vertical zigzag paths through a lattice origin, parameterized
  by the labels of the selected bumps below (``l``) and above (``q``) plus
  a base length ``x``; the tile positions fitting the selected upper bumps
  carry weight 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import Cell, Loz, Region, eliminate_forced, lozenge, vertebra_labels

Vertex = tuple[int, int]  # (va, vb)

# step vectors in (va, vb) coordinates
E = (1, 0)
W = (-1, 0)
NE = (0, 1)
NW = (-1, 1)
SE = (1, -1)
SW = (0, -1)

IndexList = tuple[int, ...]


def check_index_list(lst, name: str = "list") -> IndexList:
    lst = tuple(int(v) for v in lst)
    if any(v < 1 for v in lst):
        raise ValueError(f"{name} must contain positive integers, got {lst}")
    if any(lst[i] >= lst[i + 1] for i in range(len(lst) - 1)):
        raise ValueError(f"{name} must be strictly increasing, got {lst}")
    return lst


def omit(lst: IndexList, i: int) -> IndexList:
    """The list with its i-th entry (1-based) removed."""
    if not 1 <= i <= len(lst):
        raise ValueError(f"cannot omit entry {i} of {lst}")
    return lst[: i - 1] + lst[i:]


def decrement(lst: IndexList) -> IndexList:
    """Subtract 1 from every entry, dropping a leading 1 first."""
    if lst and lst[0] == 1:
        lst = lst[1:]
    return tuple(v - 1 for v in lst)


def increment(lst: IndexList, k: int) -> IndexList:
    """Increase the k-th entry (1-based) by 1; must stay strictly increasing."""
    if not 1 <= k <= len(lst):
        raise ValueError(f"cannot increment entry {k} of {lst}")
    out = lst[: k - 1] + (lst[k - 1] + 1,) + lst[k:]
    return check_index_list(out, "incremented list")


def walk(start: Vertex, *runs: tuple[tuple[int, int], int]) -> list[Vertex]:
    """Vertices visited from ``start`` along runs of (direction, count)."""
    out = [start]
    va, vb = start
    for (da, db), count in runs:
        if count < 0:
            raise ValueError("negative run length in boundary walk")
        for _ in range(count):
            va, vb = va + da, vb + db
            out.append((va, vb))
    return out


def rasterize(boundary: list[Vertex]) -> frozenset[Cell]:
    """Cells enclosed by a closed lattice boundary, by scanline parity.

    Every non-horizontal boundary edge crosses exactly one row strip; its
    quarter-unit x position at mid-strip is ``2*(va1+va2) + (vb1+vb2)``,
    always odd, while cell centers sit at even quarter positions, so
    crossings and centers never collide.
    """
    if boundary[0] != boundary[-1]:
        raise ValueError("boundary walk does not close")
    crossings: dict[int, list[int]] = {}
    for (va1, vb1), (va2, vb2) in zip(boundary, boundary[1:]):
        if vb1 == vb2:
            continue
        strip = min(vb1, vb2)
        crossings.setdefault(strip, []).append(2 * (va1 + va2) + (vb1 + vb2))
    cells: set[Cell] = set()
    for row, xs in crossings.items():
        xs.sort()
        if len(xs) % 2:
            raise ValueError("boundary is not a closed curve (odd crossing count)")
        for left, right in zip(xs[::2], xs[1::2]):
            first = (left + 1 - (2 * row + 2)) // 2
            last = (right - 1 - (2 * row + 2)) // 2
            for col in range(first, last + 1):
                cells.add((row, col))
    return frozenset(cells)


# ---------------------------------------------------------------------------
# hexagons and windows


@dataclass(frozen=True)
class HexParams:
    a: int
    b: int
    k: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0 or self.k < 0 or self.b + self.k < 1:
            raise ValueError(f"hexagon needs a >= 1, b >= 0, k >= 0, b+k >= 1, got {self}")

    @property
    def nrows(self) -> int:
        return 2 * self.b + self.k

    @property
    def axis(self) -> int:
        return self.a + self.k  # the mirror axis is x = (a+k)/2


def hexagon(p: HexParams) -> Region:
    """The hexagon with sides a, b+k, b, a+k, b, b+k and base a+k at row 0."""
    a, b, k = p.a, p.b, p.k
    boundary = walk(
        (0, 0),
        (E, a + k),
        (NE, b),
        (NW, b + k),
        (W, a),
        (SW, b + k),
        (SE, b),
    )
    return Region(rasterize(boundary))


@dataclass(frozen=True)
class WindowSpec:
    """An axis-symmetric triangular hole: DELTA points up, NABLA points down.

    ``base_row`` is the lattice height of the window's horizontal base: a
    DELTA window occupies rows base_row..base_row+size-1, a NABLA window
    rows base_row-size..base_row-1.
    """

    kind: str  # "DELTA" or "NABLA"
    size: int
    base_row: int

    def __post_init__(self):
        if self.kind not in ("DELTA", "NABLA"):
            raise ValueError(f"window kind must be DELTA or NABLA, got {self.kind!r}")
        if self.size < 1:
            raise ValueError(f"window size must be positive, got {self.size}")

    @property
    def even(self) -> bool:
        return self.size % 2 == 0

    @property
    def row_lo(self) -> int:
        return self.base_row if self.kind == "DELTA" else self.base_row - self.size

    @property
    def row_hi(self) -> int:
        return self.base_row + self.size - 1 if self.kind == "DELTA" else self.base_row - 1

    def cells(self, axis: int) -> frozenset[Cell]:
        s, t = self.size, self.base_row
        if (t - (axis + s)) % 2:
            raise ValueError(
                f"window {self} is not lattice-symmetric about the axis "
                f"(base row parity must equal axis+size parity)"
            )
        va_left = (axis - s - t) // 2
        if self.kind == "DELTA":
            boundary = walk((va_left, t), (E, s), (NW, s), (SW, s))
        else:
            boundary = walk((va_left, t), (E, s), (SW, s), (NW, s))
        return rasterize(boundary)


def _validate_windows(p: HexParams, windows: list[WindowSpec]) -> int:
    """Check fit, disjointness, and the size/order bookkeeping.

    Returns the reference row for vertebra labeling (the hexagon base for
    even imbalance, the odd window's base line for odd imbalance).
    """
    hexa = hexagon(p)
    win_cells = []
    for w in windows:
        cs = w.cells(p.axis)
        if not cs <= hexa.cells:
            raise ValueError(f"window {w} does not fit inside the hexagon")
        win_cells.append(cs)
    for i in range(len(windows)):
        for j in range(i + 1, len(windows)):
            if win_cells[i] & win_cells[j]:
                raise ValueError(f"windows {windows[i]} and {windows[j]} overlap")

    odd_windows = [w for w in windows if not w.even]
    if p.k % 2 == 0:
        if odd_windows:
            raise ValueError("even imbalance admits even windows only")
        if any(w.kind != "DELTA" for w in windows):
            raise ValueError("even imbalance admits DELTA windows only")
        if sum(w.size for w in windows) != p.k:
            raise ValueError(f"window sizes {[w.size for w in windows]} must total k={p.k}")
        return 0
    if len(odd_windows) != 1:
        raise ValueError("odd imbalance needs exactly one odd window")
    odd = odd_windows[0]
    delta_total = sum(w.size for w in windows if w.kind == "DELTA")
    nabla_total = sum(w.size for w in windows if w.kind == "NABLA")
    if delta_total != nabla_total + p.k:
        raise ValueError(
            f"DELTA window total {delta_total} must exceed NABLA total {nabla_total} by k={p.k}"
        )
    for w in windows:
        if w is odd:
            continue
        if w.kind == "DELTA":
            if w.row_lo <= odd.row_hi:
                raise ValueError(f"even DELTA window {w} must lie above the odd window")
        elif w.row_hi >= odd.row_lo:
            raise ValueError(f"even NABLA window {w} must lie below the odd window")
    return odd.base_row


def _canonical_params(
    p: HexParams, windows: list[WindowSpec]
) -> tuple[HexParams, list[WindowSpec]]:
    """Absorb hull-reshaping windows into the hexagon parameters.

    A DELTA window whose apex reaches the top side pins every lozenge in
    the flanking top strips, so removing the forced tiles leaves the
    hexagon with a longer top side and a smaller imbalance; dually for a
    NABLA window whose apex sits on the base.  If the imbalance goes
    negative the whole picture is rotated by a half turn.  Family and
    labels are only meaningful for the canonical parameters.
    """
    a, b, k = p.a, p.b, p.k
    ws = list(windows)
    changed = True
    while changed:
        changed = False
        nrows = 2 * b + k
        for w in ws:
            if w.kind == "DELTA" and w.base_row + w.size == nrows and b + k - w.size >= 0:
                a += w.size
                k -= w.size
                ws.remove(w)
                changed = True
                break
            if w.kind == "NABLA" and w.base_row - w.size == 0 and w.size <= b:
                b -= w.size
                k += w.size
                ws = [
                    WindowSpec(v.kind, v.size, v.base_row - w.size) for v in ws if v is not w
                ]
                changed = True
                break
        if k < 0:
            nrows = 2 * b + k
            a, b, k = a + k, b + k, -k
            ws = [
                WindowSpec("NABLA" if v.kind == "DELTA" else "DELTA", v.size, nrows - v.base_row)
                for v in ws
            ]
            changed = True
    return HexParams(a, b, k), ws


def canonical_hexagon(
    p: HexParams, windows: list[WindowSpec]
) -> tuple[HexParams, list[WindowSpec]]:
    """Validate and fully canonicalize a windowed-hexagon description."""
    _validate_windows(p, windows)
    cp, cws = _canonical_params(p, windows)
    if (cp, cws) == (p, list(windows)):
        return cp, cws
    return canonical_hexagon(cp, cws)


def windowed_hexagon(
    p: HexParams, windows: list[WindowSpec]
) -> tuple[Region, str, IndexList, IndexList]:
    """Remove windows from the hexagon, then forced lozenges.

    Returns ``(region, family, l, q)``.  For even ``k`` all windows are
    even DELTA windows of total size k; the family is ``H_l`` and ``l``
    labels the surviving vertebrae from the base.  For odd ``k`` exactly
    one window is odd (even DELTA windows above it, even NABLA windows
    below it, DELTA total = NABLA total + k); the family is ``H_lq`` for
    an odd DELTA window and ``Hbar_lq`` for an odd NABLA window, and the
    labels count from the odd window's base line.  Vertebra labels are
    read off before forced lozenges are removed, relative to the canonical
    parameters (windows whose apex lies on the hull are absorbed first).
    """
    reference = _validate_windows(p, windows)
    cp, cws = _canonical_params(p, windows)
    if (cp, cws) != (p, list(windows)):
        return windowed_hexagon(cp, cws)

    k = p.k
    family = "H_l"
    if k % 2:
        odd = next(w for w in windows if not w.even)
        family = "H_lq" if odd.kind == "DELTA" else "Hbar_lq"

    removed = set()
    for w in windows:
        removed |= w.cells(p.axis)
    holey = Region(hexagon(p).cells - removed)

    below, above = vertebra_labels(holey, reference, row_span=(0, p.nrows - 1))
    if k % 2 == 0:
        l, q = above, ()
    else:
        l, q = below, above

    final, factor, untileable = eliminate_forced(holey)
    if factor != 1:
        raise AssertionError("hexagon windows carry no weights; factor must stay 1")
    return final, family, l, q


# ---------------------------------------------------------------------------
# the zigzag-anchored families


@dataclass(frozen=True)
class ZigzagWalk:
    """A constructed region plus the boundary bookkeeping the counting needs.

    Segment lists use vertex pairs keyed as in :mod:`lozenge.count`:
    ``sw_side`` are the region's lower-left boundary edges bottom to top,
    ``right_se``/``right_sw`` the SE- and SW-direction edges of the right
    boundary in top-to-bottom order, ``nw_side`` the upper-left boundary
    edges top to bottom.
    """

    region: Region
    sw_side: list[Vertex] = field(default_factory=list)
    right_se: list[Vertex] = field(default_factory=list)
    nw_side: list[Vertex] = field(default_factory=list)
    right_sw: list[Vertex] = field(default_factory=list)


def _zigzag_bounds(l: IndexList, q: IndexList, barred: bool) -> int:
    m, n = len(l), len(q)
    lm = l[-1] if l else 0
    qn = q[-1] if q else 0
    if barred:
        return max(0, qn - lm - n + m)
    if l:
        return max(0, qn - lm - n + m - 1)
    return qn - n - 1


def min_x(l, q, barred: bool = False) -> int:
    """Least base length for which the family member exists."""
    return _zigzag_bounds(check_index_list(l, "l"), check_index_list(q, "q"), barred)


def zigzag_walk(l, q, x: int, barred: bool) -> ZigzagWalk:
    """Build a zigzag-anchored region together with its boundary segments."""
    l = check_index_list(l, "l")
    q = check_index_list(q, "q")
    m, n = len(l), len(q)
    if m == 0 and n == 0:
        return ZigzagWalk(Region())
    lo = _zigzag_bounds(l, q, barred)
    if x < lo:
        raise ValueError(f"x={x} below the least admissible value {lo}")
    lm = l[-1] if l else 0
    qn = q[-1] if q else 0
    h = -1 if barred else 0  # height of the horizontal connector through the origin

    right: list[tuple[tuple[int, int], int]] = []
    if q:
        # down the chain of selected upper bumps, from the top bump to the connector
        for i in range(n, 0, -1):
            right.append((SE, 1))
            right.append((SW, 1))
            if i > 1:
                right.append((SW, 2 * q[i - 1] - 2 - 2 * q[i - 2]))
                right.append((E, q[i - 1] - 1 - q[i - 2]))
        right.append((SW, 2 * q[0] - 2 - h))
        start: Vertex = (-qn, 2 * qn)
    else:
        start = (-l[0] - h, h)
    if l:
        va_cross = -l[0] - h
        if q:
            # the connector runs along height h between the two zigzag chains
            delta = va_cross - (-q[0] + 1)
            right.append((E if delta > 0 else W, abs(delta)))
        right.append((SE, h + 2 * l[0] - 1))
        for i in range(1, m + 1):
            right.append((SE, 1))
            right.append((SW, 1))
            if i < m:
                right.append((W, l[i - 1] - (2 * l[i - 1] - l[i] + 1)))
                right.append((SE, 2 * (l[i] - l[i - 1]) - 2))

    if l:
        base_len = x
        n_sw = 2 * lm - m + n + (0 if barred else 1)
    else:
        base_len = (x - q[0] + 1) if barred else (x - q[0] + 2)
        n_sw = n

    right_part = walk(start, *right)
    b_vertex = right_part[-1]
    after_base = walk(b_vertex, (W, base_len))
    c1 = after_base[-1]
    sw_part = walk(c1, (NW, n_sw))
    c2 = sw_part[-1]
    n_ne = (2 * qn if q else h) - c2[1]
    nw_part = walk(c2, (NE, n_ne))
    c3 = nw_part[-1]
    n_top = start[0] - c3[0]
    top_part = walk(c3, (E, n_top))
    if top_part[-1] != start:
        raise AssertionError("boundary walk failed to close")

    boundary = right_part + after_base[1:] + sw_part[1:] + nw_part[1:] + top_part[1:]
    cells = rasterize(boundary)

    half: set[Loz] = set()
    for qi in q:
        pos = lozenge((2 * qi - 2, -2 * qi + 1), (2 * qi - 1, -2 * qi))
        if not (pos[0] in cells and pos[1] in cells):
            raise AssertionError(f"selected bump {qi} fell outside the region")
        half.add(pos)

    # boundary segments for the nonintersecting-path encodings
    def seg_edges(part: list[Vertex], keep: tuple[int, int]) -> list[Vertex]:
        out = []
        for (va1, vb1), (va2, vb2) in zip(part, part[1:]):
            if (va2 - va1, vb2 - vb1) == keep:
                out.append((min(va1, va2), min(vb1, vb2)))
        return out

    return ZigzagWalk(
        Region(cells, frozenset(half)),
        sw_side=seg_edges(sw_part, NW),
        right_se=seg_edges(right_part, SE),
        nw_side=list(reversed(seg_edges(nw_part, NE))),
        right_sw=seg_edges(right_part, SW),
    )


def r_region(l, q, x: int) -> Region:
    """Member of the plain zigzag family (connector through the origin)."""
    return zigzag_walk(l, q, x, barred=False).region


def r_bar_region(l, q, x: int) -> Region:
    """Member of the shifted family (connector one step southwest)."""
    return zigzag_walk(l, q, x, barred=True).region
