"""Write SVG pictures of the featured regions into ./gallery.

Up triangles are shaded, down triangles white, weight-1/2 positions get
gray ovals, and one tiling is outlined where requested.
"""

from pathlib import Path

from lozenge.regions import HexParams, WindowSpec, hexagon, r_bar_region, r_region, windowed_hexagon
from lozenge.render import first_tiling, render_svg

out = Path(__file__).resolve().parent / "gallery"
out.mkdir(exist_ok=True)

pictures = {
    "hexagon_5_5_3.svg": lambda: (hexagon(HexParams(5, 5, 3)), None),
    "holey_5_6_6.svg": lambda: (
        windowed_hexagon(HexParams(5, 6, 6),
                         [WindowSpec("DELTA", 4, 5), WindowSpec("DELTA", 2, 11)])[0],
        None,
    ),
    "zigzag_245_24_x2.svg": lambda: (r_region((2, 4, 5), (2, 4), 2), None),
    "zigzag_bar_245_24_x3.svg": lambda: (r_bar_region((2, 4, 5), (2, 4), 3), None),
    "unit_hexagon_tiled.svg": lambda: (
        hexagon(HexParams(2, 2, 0)),
        first_tiling(hexagon(HexParams(2, 2, 0))),
    ),
}

for name, build in pictures.items():
    region, tiling = build()
    path = out / name
    path.write_text(render_svg(region, tiling), encoding="utf-8")
    print(f"wrote {path} ({len(region.cells)} cells)")
