"""Hexagons with triangular windows and their product formula.

The hexagon with sides a, b+k, b, a+k, b, b+k has k more upward unit
triangles than downward ones; removing axis-symmetric triangular windows
restores the balance.  The windows determine which axis vertebrae
survive, and the surviving labels alone determine the tiling count
through a product of two closed-form polynomial values.
"""

from fractions import Fraction

from lozenge.count import count_oracle
from lozenge.lattice import symmetry_axis_cut
from lozenge.regions import HexParams, WindowSpec, canonical_hexagon, windowed_hexagon
from lozenge.render import render_ascii
from lozenge.verify import expected_cut_pieces, family_poly

examples = [
    ("even imbalance, two windows",
     HexParams(5, 6, 6), [WindowSpec("DELTA", 4, 5), WindowSpec("DELTA", 2, 11)]),
    ("odd imbalance, upward odd window",
     HexParams(7, 8, 3),
     [WindowSpec("DELTA", 3, 9), WindowSpec("DELTA", 2, 12), WindowSpec("DELTA", 2, 16),
      WindowSpec("NABLA", 2, 8), WindowSpec("NABLA", 2, 4)]),
    ("odd imbalance, downward odd window",
     HexParams(8, 8, 1),
     [WindowSpec("NABLA", 1, 8), WindowSpec("NABLA", 2, 5),
      WindowSpec("DELTA", 2, 11), WindowSpec("DELTA", 2, 13)]),
]

for title, params, windows in examples:
    cp, cws = canonical_hexagon(params, windows)
    region, family, l, q = windowed_hexagon(cp, cws)
    cut = symmetry_axis_cut(region)
    count = count_oracle(region)
    plus, minus = expected_cut_pieces(family, l, q, cp.a, cp.k)
    rhs = Fraction(2) ** cut.width * family_poly(*plus) * family_poly(*minus)
    print(f"--- {title}")
    print(f"    hexagon a={cp.a} b={cp.b} k={cp.k}, family {family}, "
          f"labels below={list(l)} above={list(q)}")
    print(f"    tilings (oracle):  {count}")
    print(f"    product formula:   {rhs}   "
          f"[2^{cut.width} * {family_poly(*plus)} * {family_poly(*minus)}]")
    print()

print("The smallest holey hexagon, drawn with its window:")
region, family, l, q = windowed_hexagon(HexParams(2, 2, 2), [WindowSpec("DELTA", 2, 2)])
print(render_ascii(region))
print(f"family {family}, labels {list(l)}, tilings: {count_oracle(region)}")
