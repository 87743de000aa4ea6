"""Walk the closed-form transversal for a 3 x 3 grid, no LP involved.

Write t, s for the normalized positions of x_2 in [x_1, x_3] and y_2 in
[y_1, y_3].  Four heights over the central column (x_2, y_2) decide
everything:

  z_center   height of the middle grid point P_22
  z_a_chord  the chord of A_2 over y_2, i.e. (1-s) Z_21 + s Z_23
  z_b_chord  the chord of B_2 over x_2, i.e. (1-t) Z_12 + t Z_32
  z_quad     the bilinear blend of the four corner heights

The interval test [z_quad, z_a_chord] meets [z_center, z_b_chord] for at
least one of the two axes; whichever wins, any z* in the overlap is the
height at which a line through the quadrangle of corner sets also crosses
the middle set of the other family.  Endpoints of that line are convex
blends, weight lam toward the quadrangle crossing.
"""

from piercing import (GenConfig, build_grid, lemma33_pierce, line_pierces,
                      random_grid, rat_str)


def walk(inst, title):
    tr = lemma33_pierce(inst)
    print("--", title)
    print(f"  z_center  = {rat_str(tr.z_center)}")
    print(f"  z_a_chord = {rat_str(tr.z_a_chord)}")
    print(f"  z_b_chord = {rat_str(tr.z_b_chord)}")
    print(f"  z_quad    = {rat_str(tr.z_quad)}")
    print(f"  overlap test x: {'pass' if tr.test_x else 'fail'},"
          f"  y: {'pass' if tr.test_y else 'fail'}")
    print(f"  chosen axis {tr.axis.value}, z* = {rat_str(tr.z_star)}, "
          f"lam = {rat_str(tr.lam)}")
    print(f"  line from {tuple(rat_str(c) for c in tr.start_point)} "
          f"to {tuple(rat_str(c) for c in tr.end_point)}")
    assert all(line_pierces(inst, tr.line))
    print("  pierces all three sets of the other family")


inst = build_grid(("1", "2", "3"), ("1", "2", "3"),
                  [["2/5", "1/2", "0"],
                   ["3/2", "1/2", "7/10"],
                   ["1", "1/10", "0"]])
walk(inst, "the worked 3 x 3 grid")

# Push the middle point up and the x test flips to the y test.
ridge = build_grid(("1", "2", "3"), ("1", "2", "3"),
                   [["0", "1", "0"]] * 3)
walk(ridge, "the ridge grid")

# The case split is exhaustive: random grids never fall through.
for seed in (11, 12, 13):
    walk(random_grid(GenConfig(seed=seed, n=3, m=3)), f"seed {seed}")

print("all traces verified")
