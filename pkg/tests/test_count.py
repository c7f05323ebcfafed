from fractions import Fraction

import pytest

from lozenge.count import (
    NORTHWEST,
    SOUTHWEST,
    count_gv,
    count_oracle,
    enumerate_tilings,
    gv_matrix,
    tiling_weight,
)
from lozenge.exact import determinant
from lozenge.lattice import Region, region
from lozenge.regions import HexParams, hexagon, min_x, r_bar_region, r_region
from lozenge.verify import index_list_pairs


def naive_count(r: Region) -> Fraction:
    return sum((tiling_weight(r, t) for t in enumerate_tilings(r)), Fraction(0))


def test_oracle_trivial_values():
    assert count_oracle(Region()) == 1
    assert count_oracle(hexagon(HexParams(1, 1, 1))) == 0
    assert count_oracle(region([(0, 0)])) == 0
    assert count_oracle(hexagon(HexParams(1, 1, 0))) == 2
    assert count_oracle(hexagon(HexParams(2, 2, 0))) == 20


@pytest.mark.parametrize(
    "builder",
    [
        lambda: hexagon(HexParams(1, 2, 0)),
        lambda: hexagon(HexParams(3, 1, 0)),
        lambda: r_region((2, 4), (1, 3), 2),
        lambda: r_region((1, 2), (2,), 1),
        lambda: r_bar_region((2, 4), (1, 3), 2),
        lambda: r_bar_region((), (1, 2), 1),
    ],
)
def test_oracle_agrees_with_naive_enumeration(builder):
    r = builder()
    assert count_oracle(r) == naive_count(r)


def test_tilings_partition_the_region():
    r = hexagon(HexParams(1, 1, 0))
    tilings = list(enumerate_tilings(r))
    assert len(tilings) == 2
    for t in tilings:
        covered = {c for pos in t for c in pos}
        assert covered == r.cells


def test_gv_equals_oracle_across_small_sweep():
    for l, q in index_list_pairs(3, 2):
        if not l and not q:
            continue
        for family, barred in (("R", False), ("Rbar", True)):
            lo = min_x(l, q, barred)
            for x in (lo, lo + 1, lo + 2):
                reg = (r_bar_region if barred else r_region)(l, q, x)
                want = count_oracle(reg)
                for side in (SOUTHWEST, NORTHWEST):
                    assert count_gv(reg, l, q, x, family, side) == want


def test_gv_empty_region_determinant_is_one():
    assert count_gv(Region(), (), (), 5, "R") == 1
    assert count_gv(Region(), (), (), 0, "Rbar") == 1


def test_gv_rejects_region_parameter_mismatch():
    reg = r_region((1,), (), 1)
    with pytest.raises(ValueError):
        count_gv(reg, (1,), (), 2, "R")
    with pytest.raises(ValueError):
        count_gv(reg, (1,), (), 1, "Rbar")


def test_endpoint_coordinates_match_the_boundary_walk():
    # the southwestern encoding's top start segment and the upper-bump end
    # segments have fixed coordinates in terms of the parameters
    for l, q, x in [((1,), (1,), 1), ((2, 3), (2, 4), 3), ((1, 3), (2,), 2)]:
        m, n = len(l), len(q)
        lm = l[-1]
        ep, _ = gv_matrix(l, q, x, "R", SOUTHWEST)
        assert ep.size == 2 * lm - m + n + 1
        assert ep.starts[-1] == (-lm - x + m - n - 1, n - m - 1)
        for k, qi in enumerate(q, start=1):
            assert ep.ends[ep.size - n + k - 1] == (-qi, 2 * qi - 1)
        # the unique dead-end segment on the connector row
        assert ep.ends[ep.size - n - 1] == (-l[0], -1)


def test_gv_matrix_determinant_is_side_independent():
    l, q, x = (2, 3), (2, 4), 3
    reg = r_region(l, q, x)
    _, m_sw = gv_matrix(l, q, x, "R", SOUTHWEST)
    _, m_nw = gv_matrix(l, q, x, "R", NORTHWEST)
    assert determinant(m_sw) == determinant(m_nw) == count_oracle(reg)
