import pytest

from piercing import (Axis, GenConfig, MonotoneError, PlaneError, PlaneLine,
                      Rat, SetIndexError, ZInterval, as_rat, build_grid,
                      convex_set, general_line_transversal_in_plane,
                      general_scene, line_pierces, plane_frame, point_in_hull,
                      random_grid, section)


def test_build_grid_validation():
    with pytest.raises(MonotoneError):
        build_grid(("1", "1"), ("1", "2"), (("0", "0"), ("0", "0")))
    with pytest.raises(MonotoneError):
        build_grid(("1", "2"), ("2", "1"), (("0", "0"), ("0", "0")))
    single = build_grid(("5",), ("-3",), (("1/2",),))
    assert single.n == 1 and single.m == 1
    assert single.point(0, 0) == (Rat(5), Rat(-3), Rat(1, 2))
    with pytest.raises(SetIndexError):
        single.a_vertices(1)


def test_interval_algebra():
    assert ZInterval.empty().is_empty
    iv = ZInterval.of("3", "1")
    assert (iv.lo, iv.hi) == (1, 3)
    assert iv.contains("2") and not iv.contains("7/2")
    assert iv.intersect(ZInterval.of("3", "5")).lo == 3
    assert iv.intersect(ZInterval.of("4", "5")).is_empty


def test_plane_line_points():
    line = PlaneLine(Axis.X, as_rat(2), as_rat("-7/20"), as_rat("21/20"))
    assert line.height_at(1) == Rat(7, 10)
    assert line.point_at(3) == (2, 3, 0)
    liney = PlaneLine(Axis.Y, as_rat(1), as_rat(0), as_rat(5))
    assert liney.point_at(4) == (4, 1, 5)


def test_sections_match_hand_interpolation(figure_grid):
    s1 = section(figure_grid, Axis.X, 0, as_rat(2))
    assert (s1.lo, s1.hi) == (Rat(7, 10), Rat(3, 2))
    s2 = section(figure_grid, Axis.X, 1, as_rat(2))
    assert (s2.lo, s2.hi) == (Rat(3, 10), Rat(1, 2))
    s3 = section(figure_grid, Axis.X, 2, as_rat(2))
    assert (s3.lo, s3.hi) == (0, Rat(7, 10))
    assert section(figure_grid, Axis.X, 0, as_rat(0)).is_empty
    assert section(figure_grid, Axis.Y, 0, as_rat(100)).is_empty
    with pytest.raises(SetIndexError):
        section(figure_grid, Axis.X, 3, as_rat(2))


def test_grid_points_lie_in_their_sections():
    for seed in range(40):
        inst = random_grid(GenConfig(seed=seed, n=1 + seed % 5,
                                     m=1 + (seed * 7) % 5))
        for i in range(inst.n):
            for j in range(inst.m):
                z = inst.Z[i][j]
                assert section(inst, Axis.X, j, inst.x[i]).contains(z)
                assert section(inst, Axis.Y, i, inst.y[j]).contains(z)


def test_section_endpoints_convex_concave():
    # lo is convex and hi concave in the plane value, so the midpoint
    # section contains the midpoint of the endpoint averages
    for seed in range(25):
        inst = random_grid(GenConfig(seed=1000 + seed, n=4, m=4))
        lo_x, hi_x = inst.x[0], inst.x[-1]
        mid = (lo_x + hi_x) / 2
        for j in range(inst.m):
            a = section(inst, Axis.X, j, lo_x)
            b = section(inst, Axis.X, j, hi_x)
            c = section(inst, Axis.X, j, mid)
            assert c.lo <= (a.lo + b.lo) / 2
            assert c.hi >= (a.hi + b.hi) / 2


def test_line_pierces_frozen_cases(figure_grid):
    good = PlaneLine(Axis.X, as_rat(2), as_rat("-7/20"), as_rat("21/20"))
    assert line_pierces(figure_grid, good) == (True, True, True)
    high = PlaneLine(Axis.X, as_rat(2), as_rat(0), as_rat(100))
    assert line_pierces(figure_grid, high) == (False, False, False)
    zero = build_grid(("1", "2"), ("1", "2", "3"),
                      (("0", "0", "0"), ("0", "0", "0")))
    flat = PlaneLine(Axis.X, as_rat(1), as_rat(0), as_rat(0))
    assert all(line_pierces(zero, flat))


def test_line_pierces_agrees_with_hull_membership():
    for seed in range(25):
        inst = random_grid(GenConfig(seed=2000 + seed, n=3, m=3))
        line = PlaneLine(Axis.X, inst.x[1],
                         Rat(seed - 12, 7), Rat((seed * 3) % 5 - 2, 3))
        report = line_pierces(inst, line)
        for j, hit in enumerate(report):
            pt = line.point_at(inst.y[j])
            member = point_in_hull(pt, inst.b_vertices(j)) is not None
            assert hit == member


def _triangle_scene():
    ez = ("0", "0", "1")
    p1 = plane_frame(("0", "0", "0"), ("0", "1", "0"), ez)
    sets = (convex_set((("0", "0", "0"), ("0", "2", "0")), p1),
            convex_set((("0", "1", "-1"), ("0", "1", "1")), p1),
            convex_set((("0", "0", "0"), ("0", "2", "2")), p1))
    return general_scene(sets, sets), p1


def test_general_scene_common_point_found():
    scene, plane = _triangle_scene()
    hit = general_line_transversal_in_plane(scene, plane, "a")
    assert hit is not None
    point, direction = hit
    assert direction != (0, 0, 0)


def test_general_scene_rejects_undeclared_plane():
    scene, _ = _triangle_scene()
    other = plane_frame(("5", "0", "0"), ("0", "1", "0"), ("0", "0", "1"))
    with pytest.raises(PlaneError):
        general_line_transversal_in_plane(scene, other, "a")


def test_convex_set_vertices_must_lie_on_plane():
    frame = plane_frame(("0", "0", "0"), ("1", "0", "0"), ("0", "0", "1"))
    with pytest.raises(PlaneError):
        convex_set((("0", "1", "0"),), frame)
