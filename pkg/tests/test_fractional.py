import math
from itertools import combinations

import pytest

from piercing import (Axis, DimensionError, EmptyFamilyError, GenConfig,
                      KALAI_FRACTION, MonotoneError, Rat, as_rat,
                      best_stab_line, build_grid, fractional_transversal,
                      lemma33_pierce, line_pierces, plane_sections,
                      random_grid, random_segment_family, section,
                      segment_family, stab_triples)


def test_central_plane_trace_on_slanted_grid(figure_grid):
    tr = lemma33_pierce(figure_grid)
    assert tr.z_a_chord == Rat(11, 10)
    assert tr.z_b_chord == Rat(3, 10)
    assert tr.z_quad == Rat(7, 20)
    assert tr.z_center == Rat(1, 2)
    assert tr.test_x and not tr.test_y
    assert tr.axis is Axis.X
    assert tr.z_star == Rat(7, 20) and tr.lam == 1
    assert tr.start_point == (2, 1, Rat(7, 10))
    assert tr.end_point == (2, 3, 0)
    assert tr.line.slope == Rat(-7, 20)
    assert tr.line.intercept == Rat(21, 20)
    assert all(line_pierces(figure_grid, tr.line))


def test_central_plane_trace_on_ridge(ridge_grid):
    tr = lemma33_pierce(ridge_grid)
    assert (tr.z_quad, tr.z_a_chord, tr.z_b_chord, tr.z_center) == (0, 0, 1, 1)
    assert not tr.test_x and tr.test_y
    assert tr.axis is Axis.Y
    assert tr.z_star == 0 and tr.lam == 1
    assert tr.line.plane_value == 2
    assert tr.line.slope == 0 and tr.line.intercept == 0
    assert all(line_pierces(ridge_grid, tr.line))


def test_central_plane_needs_three_by_three():
    small = build_grid(("1", "2"), ("1", "2"), (("0", "0"), ("0", "0")))
    with pytest.raises(DimensionError):
        lemma33_pierce(small)


def test_central_plane_line_always_exists_and_blends():
    for seed in range(60):
        inst = random_grid(GenConfig(seed=5000 + seed, n=3, m=3))
        tr = lemma33_pierce(inst)
        assert tr.test_x or tr.test_y
        assert 0 <= tr.lam <= 1
        mid = inst.y[1] if tr.axis is Axis.X else inst.x[1]
        assert tr.line.height_at(mid) == tr.z_star
        assert all(line_pierces(inst, tr.line))


def test_segment_family_validation():
    with pytest.raises(MonotoneError):
        segment_family([(1, ("0", "1")), (1, ("0", "1"))])
    with pytest.raises(EmptyFamilyError):
        best_stab_line(segment_family([]))
    fam = segment_family([(0, ("2", "2"))])
    (slope, icpt), count = best_stab_line(fam)
    assert (slope, icpt, count) == (0, 2, 1)


def test_stab_triples_matches_exhaustive_line_search():
    for seed in range(20):
        fam = random_segment_family(GenConfig(seed=6000 + seed, n=5))
        triples = stab_triples(fam)
        for combo in combinations(range(fam.size), 3):
            sub = segment_family([fam.items[k] for k in combo])
            _, count = best_stab_line(sub)
            assert (combo in triples) == (count == 3)


def test_stab_triples_needs_three():
    with pytest.raises(DimensionError):
        stab_triples(segment_family([(0, ("0", "1")), (1, ("0", "1"))]))


def test_best_stab_line_tie_break_is_lexicographic(ridge_grid):
    fam = plane_sections(ridge_grid, Axis.X, as_rat(2))
    (slope, icpt), count = best_stab_line(fam)
    assert count == 2
    assert (slope, icpt) == (-1, 3)


def test_middle_plane_triple_count_identity():
    # each middle index i of a window of 3 serves (i-1)(n-i) windows
    for n in range(3, 13):
        total = sum((i - 1) * (n - i) for i in range(2, n))
        assert total == math.comb(n, 3)


def test_fractional_choice_on_slanted_grid(figure_grid):
    res = fractional_transversal(figure_grid)
    assert res.axis is Axis.X and res.plane_index == 1
    assert res.delta == 1 and res.alpha == 1
    assert res.count == 3
    assert res.x_good == (0, 1, 0) and res.y_good == (0, 1, 0)


def test_fractional_choice_on_ridge(ridge_grid):
    res = fractional_transversal(ridge_grid)
    assert res.axis is Axis.Y and res.plane_index == 0
    assert res.line.plane_value == 1
    assert res.line.slope == 0 and res.line.intercept == 0
    assert res.count == 3
    assert res.x_good == (0, 0, 0)


def test_fractional_needs_three_by_three(figure_grid):
    small = build_grid(("1", "2"), ("1", "2", "3"),
                       (("0", "0", "0"), ("0", "0", "0")))
    with pytest.raises(DimensionError):
        fractional_transversal(small)


def test_best_plane_fraction_reaches_half():
    for seed in range(30):
        inst = random_grid(GenConfig(seed=7000 + seed, n=3 + seed % 3,
                                     m=3 + (seed * 7) % 3))
        res = fractional_transversal(inst)
        assert res.delta >= Rat(1, 2)
        assert res.alpha >= Rat(1, 2)
        size = inst.m if res.axis is Axis.X else inst.n
        assert res.count >= math.ceil(res.alpha * size / 3)
        assert all(0 <= c for c in res.x_good + res.y_good)


def test_stabbed_segments_lie_on_reported_line():
    for seed in range(20):
        inst = random_grid(GenConfig(seed=8000 + seed, n=4, m=4))
        res = fractional_transversal(inst)
        fam = plane_sections(inst, res.axis, res.line.plane_value)
        hits = sum(1 for absc, iv in fam.items
                   if iv.contains(res.line.height_at(absc)))
        assert hits == res.count


def test_fully_agreeable_family_is_fully_stabbed():
    for seed in range(40):
        fam = random_segment_family(GenConfig(seed=9000 + seed,
                                              n=3 + seed % 5))
        triples = stab_triples(fam)
        if len(triples) == math.comb(fam.size, 3):
            _, count = best_stab_line(fam)
            assert count == fam.size


def test_informational_constant_value():
    assert abs(KALAI_FRACTION - (1 - 0.5 ** (1 / 3))) < 1e-15
