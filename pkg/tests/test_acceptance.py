"""Acceptance gate: one test per criterion, every check exact.

Run verbosely to read the gate as a checklist; each test prints its own
summary line.  All random suites are seeded, so reruns are bit-identical.
"""

import math
import time

import pytest

from piercing import (Axis, GenConfig, Rat, SplitMix64, as_rat, build_grid,
                      build_primal, counterexample_scene,
                      convex_sets_intersect, dual_certificate,
                      extract_dual_certificate, find_piercing_line,
                      fuzz_combined, fuzz_report, fractional_transversal,
                      general_line_transversal_in_plane, grid_to_highdim,
                      highdim_pierce, lemma33_pierce, line_pierces,
                      oracle_best_plane_line, point_in_hull, random_grid,
                      random_highdim, random_segment_family,
                      random_subset_points, solve_feasibility, split_index,
                      stab_triples, best_stab_line, stress_report,
                      verify_dual_certificate)

MASTER_SEED = 0xACCE9721


def _grid_suite(count, size_lo, size_hi, seed, M=20, D=20):
    rng = SplitMix64(seed)
    grids = []
    for _ in range(count):
        sub = rng.next64()
        n = size_lo + SplitMix64(sub ^ 0xA).below(size_hi - size_lo + 1)
        m = size_lo + SplitMix64(sub ^ 0xB).below(size_hi - size_lo + 1)
        grids.append(random_grid(GenConfig(seed=sub, n=n, m=m,
                                           num_bound=M, den_bound=D)))
    return grids


@pytest.fixture(scope="module")
def stress_grids():
    return _grid_suite(500, 1, 8, MASTER_SEED)


@pytest.fixture(scope="module")
def counting_suite():
    grids = _grid_suite(300, 3, 7, MASTER_SEED + 1)
    return [(inst, fractional_transversal(inst)) for inst in grids]


def test_criterion_01_piercing_line_on_500_random_grids(stress_grids):
    start = time.monotonic()
    for inst in stress_grids:
        axis, line, wit = find_piercing_line(inst)
        assert all(line_pierces(inst, line))
    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    print("criterion 1 PASS: 500/500 grids pierced and section-checked "
          "in %.1fs" % elapsed)


def test_criterion_02_certificate_exclusivity(stress_grids, ridge_grid):
    pairs = feasible = certified = 0
    for inst in stress_grids:
        for axis in (Axis.X, Axis.Y):
            pairs += 1
            out = solve_feasibility(build_primal(inst, axis))
            assert (out.point is None) != (out.cert is None)
            if out.is_feasible:
                feasible += 1
            else:
                cert = extract_dual_certificate(inst, axis)
                assert verify_dual_certificate(inst, cert)
                certified += 1
    assert feasible + certified == pairs == 1000
    explicit = dual_certificate(Axis.X, ("0", "0", "0"), ("-1", "2", "-1"),
                                ("0", "-1", "0"))
    assert verify_dual_certificate(ridge_grid, explicit)
    assert not solve_feasibility(build_primal(ridge_grid,
                                              Axis.X)).is_feasible
    print("criterion 2 PASS: %d feasible / %d certified of %d axis systems, "
          "explicit certificate verified" % (feasible, certified, pairs))


def test_criterion_03_central_plane_exact_trace(figure_grid):
    tr = lemma33_pierce(figure_grid)
    assert tr.z_a_chord == Rat(11, 10)
    assert tr.z_b_chord == Rat(3, 10)
    assert tr.z_quad == Rat(7, 20)
    assert tr.z_center == Rat(1, 2)
    assert tr.axis is Axis.X
    assert tr.z_star == Rat(7, 20)
    assert all(line_pierces(figure_grid, tr.line))
    print("criterion 3 PASS: central-plane trace reproduced exactly "
          "(11/10, 3/10, 7/20, 1/2, axis x, z* = 7/20)")


def test_criterion_04_combined_system_fuzz():
    rng = SplitMix64(MASTER_SEED + 2)
    for k in range(1000):
        size = 3 + k % 3
        cfg = GenConfig(seed=rng.next64(), n=size, m=size)
        sample, ledger = fuzz_combined(cfg)
        assert ledger.violated[0] in ("x:beta", "y:beta")
        assert ledger.branch == "parts"
        assert ledger.part1 == 0 and ledger.part2 == 0
        assert ledger.part3 + ledger.part4 < 0
    print("criterion 4 PASS: 1000/1000 fuzz samples report a violated "
          "weight row with exact part cancellation")


def test_criterion_05_half_the_triples_are_stabbable(counting_suite):
    half = Rat(1, 2)
    for inst, res in counting_suite:
        assert res.delta >= half
    print("criterion 5 PASS: best plane fraction >= 1/2 on 300/300 grids")


def test_criterion_06_stab_count_meets_bound(counting_suite):
    for inst, res in counting_suite:
        size = inst.m if res.axis is Axis.X else inst.n
        assert res.count >= math.ceil(size / 6)
        _, oracle_count = oracle_best_plane_line(inst, res.axis,
                                                 res.line.plane_value)
        assert res.count == oracle_count
    print("criterion 6 PASS: stab count >= ceil(size/6) and equals the "
          "brute-force oracle on 300/300 grids")


def test_criterion_07_segment_families_fractional_bound():
    rng = SplitMix64(MASTER_SEED + 3)
    full = 0
    for _ in range(500):
        size = 1 + SplitMix64(rng.next64()).below(10)
        fam = random_segment_family(GenConfig(seed=rng.next64(), n=size))
        _, count = best_stab_line(fam)
        if size < 3:
            assert count == size
            continue
        alpha = Rat(len(stab_triples(fam)), math.comb(size, 3))
        assert count >= math.ceil(alpha * size / 3)
        if alpha == 1:
            assert count == size
            full += 1
    assert full > 0
    print("criterion 7 PASS: 500/500 families meet the ceil(alpha/3*size) "
          "bound; %d all-agreeing families fully stabbed" % full)


def test_criterion_08_skew_scene_regression():
    scene = counterexample_scene()
    meets = 0
    for a in scene.family_a:
        for b in scene.family_b:
            assert convex_sets_intersect(a.vertices, b.vertices)
            meets += 1
    assert meets == 9
    assert general_line_transversal_in_plane(
        scene, scene.family_b[1].plane, "a") is None
    assert general_line_transversal_in_plane(
        scene, scene.family_a[1].plane, "b") is None
    print("criterion 8 PASS: nine pairwise meets verified, both middle "
          "planes transversal-free")


def test_criterion_09_high_dimensional_families():
    for d in (2, 3, 4):
        rng = SplitMix64(MASTER_SEED + 4 + d)
        for _ in range(200):
            inst = random_highdim(GenConfig(seed=rng.next64(), d=d))
            res = highdim_pierce(inst)
            for pt, level in ((res.p1, 1), (res.p3, 3), (res.blend, 2)):
                assert point_in_hull(
                    pt, inst.set_vertices(res.index, level)) is not None
    for d in (2, 3, 4, 5):
        rng = SplitMix64(MASTER_SEED + 40 + d)
        for _ in range(200):
            pts = random_subset_points(GenConfig(seed=rng.next64(), d=d))
            wit = split_index(pts)
            assert 0 <= wit.index < d
    rng = SplitMix64(MASTER_SEED + 5)
    for _ in range(200):
        grid = random_grid(GenConfig(seed=rng.next64(), n=3, m=3))
        trace = lemma33_pierce(grid)
        res = highdim_pierce(grid_to_highdim(grid))
        assert (res.index == 0) == trace.test_x
    print("criterion 9 PASS: 600 piercings verified, 800 subset splits "
          "found, 200 planar embeddings consistent")


def test_criterion_10_reports_are_byte_identical():
    a = stress_report(60, 6, seed=MASTER_SEED + 6)
    b = stress_report(60, 6, seed=MASTER_SEED + 6)
    assert a.encode() == b.encode()
    c = fuzz_report(120, seed=MASTER_SEED + 7, n=4, m=4)
    d = fuzz_report(120, seed=MASTER_SEED + 7, n=4, m=4)
    assert c.encode() == d.encode()
    assert _grid_suite(50, 1, 6, MASTER_SEED + 8) == _grid_suite(
        50, 1, 6, MASTER_SEED + 8)
    print("criterion 10 PASS: stress and fuzz reports byte-identical "
          "across reruns")
