import math
from itertools import product

import pytest

from piercing import (DimensionError, GenConfig, MonotoneError, Rat, as_rat,
                      build_highdim, grid_to_highdim, highdim_pierce,
                      lemma33_pierce, point_in_hull, q_family, random_grid,
                      random_highdim, random_subset_points, split_index)
from piercing.highdim import _reconstruct_side


def _flat(d, value="0"):
    return {t: (value,) * (d - 1) for t in product((1, 2, 3), repeat=d)}


def test_build_validation():
    with pytest.raises(DimensionError):
        build_highdim((("1", "2", "3"),), _flat(1))
    with pytest.raises(MonotoneError):
        build_highdim((("1", "1", "3"), ("1", "2", "3")), _flat(2))
    bad = _flat(2)
    del bad[(1, 1)]
    with pytest.raises(DimensionError):
        build_highdim((("1", "2", "3"), ("1", "2", "3")), bad)
    short = {t: () for t in product((1, 2, 3), repeat=2)}
    with pytest.raises(DimensionError):
        build_highdim((("1", "2", "3"), ("1", "2", "3")), short)


def test_middle_weights():
    inst = build_highdim((("0", "1", "4"), ("1", "2", "3")), _flat(2))
    qf = q_family(inst)
    assert qf.alphas[0] == (Rat(3, 4), Rat(1, 4))
    assert qf.alphas[1] == (Rat(1, 2), Rat(1, 2))
    for (lo, mid, hi), (a1, a3) in zip(inst.base, qf.alphas):
        assert a1 + a3 == 1 and a1 >= 0 and a3 >= 0
        assert a1 * lo + a3 * hi == mid


def test_flat_fibers_collapse_to_center():
    inst = build_highdim((("0", "1", "4"), ("-1", "0", "2"), ("1", "2", "3")),
                         _flat(3, "0"))
    qf = q_family(inst)
    central = inst.central_base()
    for J, pt in qf.points.items():
        assert pt == central + (0, 0)


def test_central_points_on_slanted_grid(figure_grid):
    qf = q_family(grid_to_highdim(figure_grid))
    tails = {J: pt[2] for J, pt in qf.points.items()}
    assert tails[frozenset()] == Rat(1, 2)
    assert tails[frozenset({0})] == Rat(11, 10)
    assert tails[frozenset({1})] == Rat(3, 10)
    assert tails[frozenset({0, 1})] == Rat(7, 20)
    for pt in qf.points.values():
        assert pt[:2] == (2, 2)


def test_split_prefers_first_working_axis(figure_grid):
    qf = q_family(grid_to_highdim(figure_grid))
    wit = split_index({J: pt[2:] for J, pt in qf.points.items()})
    assert wit.index == 0
    assert Rat(7, 20) <= wit.point[0] <= Rat(1, 2)
    assert sum(wit.coeffs_in.values(), as_rat(0)) == 1
    assert sum(wit.coeffs_out.values(), as_rat(0)) == 1


def test_split_skips_separated_axis():
    E, A, B, U = (frozenset(), frozenset({0}), frozenset({1}),
                  frozenset({0, 1}))
    wit = split_index({E: ("1",), A: ("0",), B: ("1",), U: ("0",)})
    assert wit.index == 1


def test_split_tie_breaks_to_first_axis():
    pts = {J: ("5", "7") for J in
           (frozenset(s) for s in ((), (0,), (1,), (0, 1)))}
    wit = split_index(pts)
    assert wit.index == 0 and wit.point == (5, 7)


def test_split_validates_subset_map():
    with pytest.raises(DimensionError):
        split_index({frozenset(): ("0",), frozenset({0}): ("1",)})
    with pytest.raises(DimensionError):
        split_index({frozenset(): ("0",), frozenset({5}): ("0",),
                     frozenset({1}): ("0",), frozenset({0, 1}): ("0",)})


def test_split_always_succeeds_on_random_maps():
    for d in (2, 3, 4):
        for seed in range(25):
            pts = random_subset_points(GenConfig(seed=seed * 31 + d, d=d))
            wit = split_index(pts)
            assert 0 <= wit.index < d


def test_pierce_matches_central_plane_test():
    for seed in range(40):
        grid = random_grid(GenConfig(seed=10_000 + seed, n=3, m=3))
        trace = lemma33_pierce(grid)
        res = highdim_pierce(grid_to_highdim(grid))
        assert (res.index == 0) == trace.test_x


def test_pierce_reconstruction_identities(figure_grid):
    inst = grid_to_highdim(figure_grid)
    res = highdim_pierce(inst)
    a1, a3 = q_family(inst).alphas[res.index]
    for u, v, b in zip(res.p1, res.p3, res.blend):
        assert a1 * u + a3 * v == b
    assert point_in_hull(res.p1, inst.set_vertices(res.index, 1)) is not None
    assert point_in_hull(res.p3, inst.set_vertices(res.index, 3)) is not None
    assert point_in_hull(res.blend,
                         inst.set_vertices(res.index, 2)) is not None


def test_pierce_flat_fibers_gives_flat_line():
    for d in (2, 3):
        inst = build_highdim(tuple(("0", str(k + 1), str(2 * k + 3))
                                   for k in range(d)), _flat(d))
        res = highdim_pierce(inst)
        assert res.index == 0
        assert res.p1[d:] == (0,) * (d - 1)
        assert res.p3[d:] == (0,) * (d - 1)


def test_pierce_random_instances_verify():
    for d in (2, 3):
        for seed in range(15):
            inst = random_highdim(GenConfig(seed=seed * 17 + d, d=d))
            res = highdim_pierce(inst)
            assert res.p1[res.index] == inst.base[res.index][0]
            assert res.p3[res.index] == inst.base[res.index][2]
            assert res.blend[:d] == inst.central_base()


def test_reconstruction_fallback_stays_in_hull(figure_grid):
    inst = grid_to_highdim(figure_grid)
    qf = q_family(inst)
    for level in (1, 3):
        pt = _reconstruct_side(inst, qf.alphas, {}, 0, level)
        assert point_in_hull(pt, inst.set_vertices(0, level)) is not None


def test_subset_cell_count_identity():
    for d in range(2, 13):
        assert sum(math.comb(d, k) for k in range(d)) == 2 ** d - 1


def test_grid_embedding_requires_three_by_three():
    from piercing import build_grid
    small = build_grid(("1", "2"), ("1", "2"), (("0", "0"), ("0", "0")))
    with pytest.raises(DimensionError):
        grid_to_highdim(small)
