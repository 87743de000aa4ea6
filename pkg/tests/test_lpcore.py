from fractions import Fraction

import pytest

from piercing import (DimensionError, EmptyFamilyError, FarkasCert,
                      LinearSystem, Rat, SplitMix64, as_rat, point_in_hull,
                      rat_str, solve_feasibility, verify_farkas)


def _satisfies(system, point):
    for coeffs, rhs in system.eq_rows:
        if sum(c * v for c, v in zip(coeffs, point)) != rhs:
            return False
    for coeffs, rhs in system.ge_rows:
        if sum(c * v for c, v in zip(coeffs, point)) < rhs:
            return False
    return True


def test_as_rat_accepts_exact_inputs():
    assert as_rat("7/10") == Rat(7, 10)
    assert as_rat("0.5") == Rat(1, 2)
    assert as_rat(3) == 3
    assert as_rat(Fraction(2, 6)) == Rat(1, 3)
    assert rat_str(Rat(-7, 20)) == "-7/20"
    assert rat_str(Rat(4, 2)) == "2"


def test_as_rat_refuses_floats():
    with pytest.raises(TypeError):
        as_rat(0.5)


def test_single_variable_identity():
    system = LinearSystem.make(1, eq_rows=[((1,), 1)], ge_rows=[((1,), 0)])
    out = solve_feasibility(system)
    assert out.is_feasible
    assert out.point == (1,)


def test_contradiction_pair():
    system = LinearSystem.make(1, ge_rows=[((1,), 1), ((-1,), 0)])
    out = solve_feasibility(system)
    assert not out.is_feasible
    assert verify_farkas(system, out.cert)
    # the textbook multipliers also verify
    assert verify_farkas(system, FarkasCert((), (as_rat(1), as_rat(1))))


def test_verify_farkas_rejects_zero_and_negative():
    system = LinearSystem.make(1, ge_rows=[((1,), 1), ((-1,), 0)])
    assert not verify_farkas(system, FarkasCert((), (as_rat(0), as_rat(0))))
    assert not verify_farkas(system, FarkasCert((), (as_rat(-1), as_rat(-2))))


def test_dimension_checks():
    with pytest.raises(DimensionError):
        LinearSystem.make(2, eq_rows=[((1,), 1)])
    system = LinearSystem.make(1, ge_rows=[((1,), 0)])
    with pytest.raises(DimensionError):
        verify_farkas(system, FarkasCert((as_rat(1),), (as_rat(1),)))


def test_empty_system_is_feasible():
    out = solve_feasibility(LinearSystem.make(0))
    assert out.is_feasible and out.point == ()


def test_hull_membership_midpoint():
    lam = point_in_hull(("1", "1"), (("0", "0"), ("2", "2")))
    assert lam == (Rat(1, 2), Rat(1, 2))


def test_hull_membership_absent():
    assert point_in_hull(("2", "0"), (("0", "0"), ("1", "1"))) is None


def test_hull_membership_needs_points():
    with pytest.raises(EmptyFamilyError):
        point_in_hull(("1",), ())


def test_hull_membership_grid_section_point(figure_grid):
    lam = point_in_hull((as_rat(2), as_rat(2), as_rat("7/20")),
                        figure_grid.b_vertices(1))
    assert lam is not None
    assert sum(lam, as_rat(0)) == 1 and all(v >= 0 for v in lam)


def _random_system(rng):
    nv = rng.below(5)
    n_eq = rng.below(4)
    n_ge = rng.below(5)
    def row():
        coeffs = tuple(Rat(rng.between(-5, 5), rng.between(1, 3))
                       for _ in range(nv))
        return coeffs, Rat(rng.between(-5, 5), rng.between(1, 3))
    return LinearSystem(nv, tuple(row() for _ in range(n_eq)),
                        tuple(row() for _ in range(n_ge)))


def test_random_soundness_ten_thousand():
    rng = SplitMix64(20240817)
    feasible = infeasible = 0
    for _ in range(10_000):
        system = _random_system(rng)
        out = solve_feasibility(system)
        # exactly one of point and certificate, and it checks out
        assert (out.point is None) != (out.cert is None)
        if out.is_feasible:
            feasible += 1
            assert _satisfies(system, out.point)
        else:
            infeasible += 1
            assert verify_farkas(system, out.cert)
    assert feasible > 1000 and infeasible > 1000


def test_determinism_bit_for_bit():
    rng = SplitMix64(7)
    for _ in range(200):
        system = _random_system(rng)
        first = solve_feasibility(system)
        second = solve_feasibility(system)
        assert first == second
        if first.is_feasible:
            assert tuple(map(str, first.point)) == tuple(map(str,
                                                             second.point))
        else:
            assert str(first.cert) == str(second.cert)
