import pytest

from piercing import build_grid


@pytest.fixture
def figure_grid():
    # 3x3 instance whose central-plane line has slope -7/20, intercept 21/20
    return build_grid(
        ("1", "2", "3"), ("1", "2", "3"),
        (("2/5", "1/2", "0"), ("3/2", "1/2", "7/10"), ("1", "1/10", "0")))


@pytest.fixture
def ridge_grid():
    # every column is (0, 1, 0): no line of constant x can hit all three
    # column sets, while the plane y=1 contains the line z = 0
    return build_grid(("1", "2", "3"), ("1", "2", "3"),
                      tuple(("0", "1", "0") for _ in range(3)))
