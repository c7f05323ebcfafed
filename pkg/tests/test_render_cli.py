import os
from pathlib import Path

import pytest

from lozenge.cli import main
from lozenge.count import enumerate_tilings
from lozenge.lattice import lozenge, region_from_text
from lozenge.regions import HexParams, hexagon, r_region
from lozenge.render import first_tiling, render_ascii, render_svg, validate_tiling

GOLDEN = Path(__file__).parent / "golden"


def test_ascii_empty_region():
    from lozenge.lattice import Region

    assert render_ascii(Region()) == "region 0 cells 0 half\n"


def test_ascii_unit_hexagon():
    text = render_ascii(hexagon(HexParams(1, 1, 0)))
    assert text == "region 6 cells 0 half\n^v^\nv^v\n"


def test_render_is_deterministic():
    r = r_region((2, 4, 5), (2, 4), 2)
    assert render_svg(r) == render_svg(r)
    assert render_ascii(r) == render_ascii(r)


@pytest.mark.parametrize(
    "name,builder",
    [
        ("hex_5_5_3.svg", lambda: hexagon(HexParams(5, 5, 3))),
        ("zigzag_245_24_2.svg", lambda: r_region((2, 4, 5), (2, 4), 2)),
        ("unit_hex_tiling.svg", lambda: hexagon(HexParams(1, 1, 0))),
    ],
)
def test_svg_matches_golden_file(name, builder):
    r = builder()
    tiling = first_tiling(r) if name == "unit_hex_tiling.svg" else None
    got = render_svg(r, tiling)
    want = (GOLDEN / name).read_text(encoding="utf-8")
    assert got == want


def test_validate_tiling_errors():
    r = hexagon(HexParams(1, 1, 0))
    good = next(iter(enumerate_tilings(r)))
    validate_tiling(r, good)
    with pytest.raises(ValueError):
        validate_tiling(r, frozenset())  # misses cells
    bad = frozenset(list(good)[:-1] + [lozenge((5, 0), (5, 1))])
    with pytest.raises(ValueError):
        validate_tiling(r, bad)


# ---------------------------------------------------------------------------
# command line


def test_cli_macmahon(capsys):
    assert main(["macmahon", "2", "2", "2"]) == 0
    assert capsys.readouterr().out.strip() == "20"


def test_cli_count_methods_agree(capsys):
    values = []
    for method in ("oracle", "gv", "formula"):
        assert main(["count", "--family", "R", "--l", "2,4,5", "--q", "2,4",
                     "--x", "2", "--method", method]) == 0
        values.append(capsys.readouterr().out.strip())
    assert len(set(values)) == 1


def test_cli_count_unbalanced_hexagon(capsys):
    assert main(["count", "--family", "H", "--a", "1", "--b", "1", "--k", "1"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_cli_count_windowed_hexagon_formula(capsys):
    args = ["--family", "H", "--a", "6", "--b", "5", "--k", "4",
            "--window", "D:2@0", "--window", "D:2@8"]
    assert main(["count", *args, "--method", "oracle"]) == 0
    oracle = capsys.readouterr().out.strip()
    assert main(["count", *args, "--method", "formula"]) == 0
    formula = capsys.readouterr().out.strip()
    assert oracle == formula


def test_cli_usage_errors(capsys):
    assert main(["count", "--family", "R", "--l", "3,2", "--x", "1"]) == 2
    assert "strictly increasing" in capsys.readouterr().err
    assert main(["count", "--family", "R", "--l", "1", "--q", "4", "--x", "0"]) == 2
    assert main(["count", "--family", "H", "--a", "3", "--b", "3", "--k", "2",
                 "--window", "D:2@2"]) == 2
    assert main(["count", "--family", "R", "--l", "1", "--x", "1",
                 "--method", "gv", "--side", "northwest"]) == 0
    capsys.readouterr()


def test_cli_formula_values(capsys):
    assert main(["formula", "--which", "c", "--l", "1", "--q", "1"]) == 0
    assert capsys.readouterr().out.strip() == "1/8"
    assert main(["formula", "--which", "B", "--m", "0", "--n", "1", "--x", "7/2"]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert main(["formula", "--which", "Pbar", "--l", "1", "--q", "1", "--x", "0"]) == 0
    assert capsys.readouterr().out.strip() == "1/2"


def test_cli_render_formats(capsys, tmp_path):
    assert main(["render", "--family", "H", "--a", "1", "--b", "1", "--k", "0"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("region 6 cells")
    svg_path = tmp_path / "out.svg"
    assert main(["render", "--family", "R", "--l", "1", "--x", "1",
                 "--format", "svg", "--tiling", "first", "--out", str(svg_path)]) == 0
    assert svg_path.read_text().startswith("<?xml")


def test_cli_cut_round_trip(capsys, tmp_path):
    plus = tmp_path / "plus.tri"
    minus = tmp_path / "minus.tri"
    assert main(["cut", "--family", "H", "--a", "2", "--b", "2", "--k", "0",
                 "--out-plus", str(plus), "--out-minus", str(minus)]) == 0
    assert capsys.readouterr().out.strip() == "width 2"
    piece = region_from_text(plus.read_text())
    assert len(piece.half) == 2
    # pieces read back in and count through the oracle path
    assert main(["count", "--in", str(plus), "--method", "oracle"]) == 0
    assert capsys.readouterr().out.strip() == "5/2"
    assert main(["count", "--in", str(minus), "--method", "oracle"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cli_cut_rejects_asymmetric_region(capsys):
    # zigzag regions have no vertical mirror axis
    assert main(["cut", "--family", "R", "--l", "1,3", "--q", "2", "--x", "1"]) == 2
    assert "mirror" in capsys.readouterr().err


def test_cli_verify_all_targets(capsys):
    assert main(["verify", "--target", "all", "--max-entry", "2", "--max-len", "1",
                 "--x-extra", "1", "--max-a", "2", "--max-b", "1", "--max-k", "1",
                 "--random-count", "3"]) == 0
    out = capsys.readouterr().out
    assert "SUMMARY" in out and "mismatches=0" in out
    kinds = {line.split()[1].split("[")[0] for line in out.splitlines() if line.startswith("RESULT")}
    assert {"RRbar", "recur", "boundary", "poly"} <= kinds
    assert any(k.startswith("incr") for k in kinds)
    assert any(k.startswith("H") for k in kinds)
    assert any(k.startswith("factorization") for k in kinds)


def test_cli_verify_reports_and_exit_codes(capsys, monkeypatch):
    assert main(["verify", "--target", "boundary", "--max-entry", "2", "--max-len", "1"]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("mismatches=0")
    assert all(line.startswith(("RESULT", "SUMMARY")) for line in out.strip().splitlines())

    # a mismatching report must flip the exit code to 1
    from lozenge import verify as V
    from lozenge.verify import CountReport
    from fractions import Fraction

    def fake_sweep(**kwargs):
        bad = CountReport("forced[mismatch]", {"a": Fraction(1), "b": Fraction(2)})
        bad.match = False
        yield bad

    monkeypatch.setattr(V, "sweep_boundary_reductions", fake_sweep)
    assert main(["verify", "--target", "boundary"]) == 1
    assert "match=false" in capsys.readouterr().out
