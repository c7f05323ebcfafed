"""Three independent counts of the zigzag-anchored regions.

Members of the R and Rbar families are carved around two vertical zigzag
paths by selecting bumps below (labels l) and above (labels q) a lattice
origin; each selected upper bump leaves a tile position of weight 1/2.
Their weighted tiling counts come out identically from

* exhaustive backtracking,
* a determinant of lattice-path generating functions (two encodings),
* one evaluation of a closed product polynomial.
"""

from lozenge.count import NORTHWEST, SOUTHWEST, count_gv, count_oracle
from lozenge.formulas import bar_p_poly, p_poly
from lozenge.regions import min_x, r_bar_region, r_region
from lozenge.render import render_ascii

instances = [
    ("R", (2, 4, 5), (2, 4)),
    ("R", (), (1, 3)),
    ("Rbar", (2, 4, 5), (2, 4)),
    ("Rbar", (1, 3), ()),
]

for family, l, q in instances:
    barred = family == "Rbar"
    lo = min_x(l, q, barred)
    print(f"--- {family} with l={list(l)}, q={list(q)} (least x = {lo})")
    print(f"{'x':>4} {'oracle':>10} {'det SW':>10} {'det NW':>10} {'formula':>10}")
    for x in range(lo, lo + 4):
        region = (r_bar_region if barred else r_region)(l, q, x)
        values = [
            count_oracle(region),
            count_gv(region, l, q, x, family, SOUTHWEST),
            count_gv(region, l, q, x, family, NORTHWEST),
            (bar_p_poly if barred else p_poly)(l, q, x),
        ]
        print(f"{x:>4} " + " ".join(f"{str(v):>10}" for v in values))
    print()

print("A small member, with A/V marking the weight-1/2 position:")
print(render_ascii(r_region((), (1,), 1)))
