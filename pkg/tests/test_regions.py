import pytest

from lozenge.count import count_oracle
from lozenge.lattice import Region, balance, congruent, eliminate_forced, symmetry_axis_cut
from lozenge.regions import (
    HexParams,
    WindowSpec,
    canonical_hexagon,
    check_index_list,
    decrement,
    hexagon,
    increment,
    min_x,
    omit,
    r_bar_region,
    r_region,
    windowed_hexagon,
    zigzag_walk,
)
from lozenge.verify import expected_cut_pieces, index_list_pairs


def test_index_list_helpers():
    assert check_index_list((1, 4, 9)) == (1, 4, 9)
    with pytest.raises(ValueError):
        check_index_list((2, 2))
    with pytest.raises(ValueError):
        check_index_list((0, 1))
    assert omit((2, 4, 5), 2) == (2, 5)
    assert decrement((2, 3, 6)) == (1, 2, 5)
    assert decrement((1, 3, 6)) == (2, 5)
    assert increment((1, 3), 2) == (1, 4)
    with pytest.raises(ValueError):
        increment((1, 2), 1)


def test_unit_hexagon():
    r = hexagon(HexParams(1, 1, 0))
    assert len(r.cells) == 6
    assert balance(r) == 0


@pytest.mark.parametrize("a", [1, 2, 3])
@pytest.mark.parametrize("b", [1, 2, 3])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_hexagon_balance_is_k(a, b, k):
    assert balance(hexagon(HexParams(a, b, k))) == k


def test_tall_hexagon_matches_row_by_row_fixture():
    # independently derived row spans: row r has columns
    # -(2r+1) .. 2(a+k)-1 for r < b, and -2b .. 2(a+b+k-r-1) for r >= b
    a, b, k = 5, 5, 3
    expected = set()
    for r in range(b):
        expected.update((r, c) for c in range(-(2 * r + 1), 2 * (a + k)))
    for r in range(b, 2 * b + k):
        expected.update((r, c) for c in range(-2 * b, 2 * (a + b + k - r - 1) + 1))
    assert hexagon(HexParams(a, b, k)).cells == frozenset(expected)


def test_zigzag_fixture_single_lower_bump():
    # R with l=(1), q=(), x=0: four cells worked out by hand
    r = r_region((1,), (), 0)
    assert r.cells == frozenset({(-3, 1), (-2, -1), (-2, 0), (-1, -2)})
    assert r.half == frozenset()
    assert count_oracle(r) == 1


def test_zigzag_fixture_single_upper_bump():
    # R with l=(), q=(1): a two-row strip whose rightmost standing position
    # carries weight 1/2; the x parameter may start at -1 here
    from fractions import Fraction

    for x in (-1, 0, 1, 2):
        r = r_region((), (1,), x)
        assert len(r.cells) == 4 * x + 6
        assert len(r.half) == 1
        assert count_oracle(r) == Fraction(x) + Fraction(3, 2)


def test_zigzag_empty_lists():
    assert r_region((), (), 7) == Region()
    assert r_bar_region((), (), 0) == Region()


def test_zigzag_rejects_x_below_bound():
    with pytest.raises(ValueError):
        r_region((1,), (4,), 0)  # needs x >= 4-1-1+1-1 = 2
    with pytest.raises(ValueError):
        r_bar_region((), (3,), 1)  # needs x >= 2
    r_region((1,), (4,), 2)
    r_bar_region((), (3,), 2)


@pytest.mark.parametrize("barred", [False, True])
def test_zigzag_regions_balance_and_side_lengths(barred):
    for l, q in index_list_pairs(4, 2):
        if not l and not q:
            continue
        m, n = len(l), len(q)
        lm = l[-1] if l else 0
        lo = min_x(l, q, barred)
        for x in (lo, lo + 2):
            walk = zigzag_walk(l, q, x, barred)
            assert balance(walk.region) == 0
            want_sw = 2 * lm - m + n + (1 if (l and not barred) else 0)
            assert len(walk.sw_side) == want_sw
            assert len(walk.right_se) == want_sw
            assert len(walk.region.half) == n


def test_half_positions_sit_at_upper_bumps():
    walk = zigzag_walk((2, 4, 5), (2, 4), 2, barred=False)
    expected = {
        tuple(sorted(((2 * qi - 2, -2 * qi + 1), (2 * qi - 1, -2 * qi)))) for qi in (2, 4)
    }
    assert walk.region.half == frozenset(expected)


def test_windowed_hexagon_families_and_labels():
    reg, fam, l, q = windowed_hexagon(
        HexParams(5, 6, 6), [WindowSpec("DELTA", 4, 5), WindowSpec("DELTA", 2, 11)]
    )
    assert (fam, l, q) == ("H_l", (1, 2, 5, 7, 8, 9), ())

    reg, fam, l, q = windowed_hexagon(
        HexParams(7, 8, 3),
        [
            WindowSpec("DELTA", 3, 9),
            WindowSpec("DELTA", 2, 12),
            WindowSpec("DELTA", 2, 16),
            WindowSpec("NABLA", 2, 8),
            WindowSpec("NABLA", 2, 4),
        ],
    )
    assert (fam, l, q) == ("H_lq", (2, 4), (3, 5))

    reg, fam, l, q = windowed_hexagon(
        HexParams(8, 8, 1),
        [
            WindowSpec("NABLA", 1, 8),
            WindowSpec("NABLA", 2, 5),
            WindowSpec("DELTA", 2, 11),
            WindowSpec("DELTA", 2, 13),
        ],
    )
    assert (fam, l, q) == ("Hbar_lq", (1, 3, 4), (1, 4))


def test_windowed_hexagon_rejects_bad_bookkeeping():
    with pytest.raises(ValueError):
        windowed_hexagon(HexParams(3, 3, 2), [])  # sizes must total k
    with pytest.raises(ValueError):
        windowed_hexagon(HexParams(3, 3, 2), [WindowSpec("NABLA", 2, 4)])
    with pytest.raises(ValueError):
        windowed_hexagon(HexParams(3, 3, 1), [WindowSpec("DELTA", 2, 2)])
    with pytest.raises(ValueError):
        # overlapping windows
        windowed_hexagon(
            HexParams(3, 3, 2),
            [WindowSpec("DELTA", 2, 2), WindowSpec("DELTA", 2, 2)],
        )
    with pytest.raises(ValueError):
        # wrong parity: not mirror symmetric on the lattice
        windowed_hexagon(HexParams(3, 3, 2), [WindowSpec("DELTA", 2, 2)])


def test_window_apex_on_hull_is_absorbed():
    # a window whose apex touches the top side freezes the flanking strips;
    # the leftover is a plain hexagon with a longer top side
    reg, fam, l, q = windowed_hexagon(HexParams(2, 2, 2), [WindowSpec("DELTA", 2, 4)])
    assert (fam, l, q) == ("H_l", (1, 2), ())
    assert congruent(reg, hexagon(HexParams(4, 2, 0)))
    cp, cws = canonical_hexagon(HexParams(2, 2, 2), [WindowSpec("DELTA", 2, 4)])
    assert (cp, cws) == (HexParams(4, 2, 0), [])


def test_cut_pieces_match_reduction_captions():
    # six fixed reduction instances, one per family and parity case
    cases = [
        (HexParams(6, 5, 4), [WindowSpec("DELTA", 2, 0), WindowSpec("DELTA", 2, 8)],
         ("R", (), (2, 3, 4, 6, 7), 4), ("R", (1, 2, 3, 5, 6), (), 3)),
        (HexParams(6, 5, 4), [WindowSpec("DELTA", 2, 4), WindowSpec("DELTA", 2, 8)],
         ("R", (), (1, 2, 4, 6, 7), 4), ("Rbar", (1, 3, 5, 6), (), 3)),
        (HexParams(5, 5, 4), [WindowSpec("DELTA", 2, 3), WindowSpec("DELTA", 2, 9)],
         ("R", (), (1, 3, 4, 6), 4), ("Rbar", (1, 3, 4, 6, 7), (), 2)),
        (HexParams(6, 8, 1),
         [WindowSpec("DELTA", 1, 8), WindowSpec("DELTA", 4, 9),
          WindowSpec("NABLA", 2, 7), WindowSpec("NABLA", 2, 3)],
         ("Rbar", (2, 4), (3, 4), 3), ("R", (3, 4), (2,), 3)),
        (HexParams(7, 8, 1),
         [WindowSpec("DELTA", 1, 9), WindowSpec("DELTA", 4, 10),
          WindowSpec("NABLA", 2, 8), WindowSpec("NABLA", 2, 4)],
         ("Rbar", (2, 4), (3,), 4), ("R", (3, 4), (2, 4), 3)),
        (HexParams(6, 8, 1),
         [WindowSpec("NABLA", 1, 6), WindowSpec("NABLA", 2, 5),
          WindowSpec("DELTA", 2, 9), WindowSpec("DELTA", 2, 13)],
         ("R", (2, 3), (1, 3, 5), 3), ("Rbar", (1, 3, 5), (2,), 3)),
    ]
    for params, windows, want_plus, want_minus in cases:
        region, family, l, q = windowed_hexagon(params, windows)
        plus, minus = expected_cut_pieces(family, l, q, params.a, params.k)
        assert plus == want_plus
        assert minus == want_minus
        cut = symmetry_axis_cut(region)
        for got, want in ((cut.plus, plus), (cut.minus, minus)):
            builder = r_region if want[0] == "R" else r_bar_region
            expect = builder(want[1], want[2], want[3])
            got_core, got_f, _ = eliminate_forced(got)
            want_core, want_f, _ = eliminate_forced(expect)
            assert congruent(got_core, want_core)
            assert got_f == want_f
            assert count_oracle(got) == count_oracle(expect)


def test_widths_count_label_slots():
    # surviving label count below+above equals half the crossed cells
    region, fam, l, q = windowed_hexagon(
        HexParams(7, 8, 3),
        [
            WindowSpec("DELTA", 3, 9),
            WindowSpec("DELTA", 2, 12),
            WindowSpec("DELTA", 2, 16),
            WindowSpec("NABLA", 2, 8),
            WindowSpec("NABLA", 2, 4),
        ],
    )
    assert symmetry_axis_cut(region).width == len(l) + len(q)
    region, fam, l, q = windowed_hexagon(
        HexParams(5, 6, 6), [WindowSpec("DELTA", 4, 5), WindowSpec("DELTA", 2, 11)]
    )
    assert symmetry_axis_cut(region).width == len(l)
