"""Pierce the central member of d axis families in dimension 2d - 1.

Points live on a base grid of d coordinates, each running over a strict
triple (lo, mid, hi), with a fiber of d - 1 extra coordinates attached to
every base cell.  Family i collects, for each level r, the cells whose
i-th base coordinate sits at level r.  Middle weights
alpha_1 = (hi - mid)/(hi - lo) and alpha_3 = (mid - lo)/(hi - lo) blend
the outer levels back to the middle one.

For every subset J of axes there is a blended point Q_J, obtained by
averaging the outer-level corners over J with the alpha weights while
holding the axes outside J at their middle level.  All 2^d of these share
their first d coordinates (the central base cell), so they differ only in
the fibers.  Cutting the collection by membership of an axis i and
intersecting the two convex hulls yields, for the first axis i where the
hulls meet, a point of the middle set of family i written two ways: as an
alpha blend of outer-level points p1, p3 and as a combination avoiding
level 2 of axis i entirely.
"""

from piercing import (GenConfig, build_grid, build_highdim, grid_to_highdim,
                      highdim_pierce, lemma33_pierce, point_in_hull,
                      q_family, random_highdim, rat_str, split_index)


def walk(inst, title):
    print("--", title, f"(d = {inst.d}, ambient dimension {2 * inst.d - 1})")
    qf = q_family(inst)
    for key in sorted(qf.points, key=lambda J: (len(J), sorted(J))):
        pt = qf.points[key]
        print(f"  Q_{{{set(key) if key else ''}}} fiber part:",
              [rat_str(c) for c in pt[inst.d:]])
    res = highdim_pierce(inst)
    print(f"  split at axis {res.index + 1}")
    print(f"  p1    = {[rat_str(c) for c in res.p1]}")
    print(f"  p3    = {[rat_str(c) for c in res.p3]}")
    print(f"  blend = {[rat_str(c) for c in res.blend]}")
    for pt, lvl in ((res.p1, 1), (res.p3, 3), (res.blend, 2)):
        assert point_in_hull(pt, inst.set_vertices(res.index, lvl))
    print("  all three memberships re-proved from vertex coordinates")


# d = 2 is the planar grid case in disguise: base = (rows, columns),
# fiber = the single height.  The axis chosen upstairs matches the
# interval test chosen by the closed-form 3 x 3 construction.
grid = build_grid(("1", "2", "3"), ("1", "2", "3"),
                  [["2/5", "1/2", "0"],
                   ["3/2", "1/2", "7/10"],
                   ["1", "1/10", "0"]])
hd = grid_to_highdim(grid)
walk(hd, "the worked 3 x 3 grid, embedded")
assert (highdim_pierce(hd).index == 0) == lemma33_pierce(grid).test_x

# A hand-built d = 3 instance in ambient dimension 5.
fibers = {}
for t1 in (1, 2, 3):
    for t2 in (1, 2, 3):
        for t3 in (1, 2, 3):
            fibers[(t1, t2, t3)] = (t1 * t2 - t3, (t1 - t2) * t3)
inst = build_highdim(((0, 1, 2), (0, 2, 3), (1, 2, 4)), fibers)
walk(inst, "a hand-built product instance")

# Random fibers, any d: the split always exists.
for d in (2, 3, 4):
    r = random_highdim(GenConfig(seed=31 + d, d=d))
    res = highdim_pierce(r)
    print(f"random d = {d}: split at axis {res.index + 1}, verified")

# The hull-splitting step also stands alone on abstract subset maps.
pts = {frozenset(J): (len(J), sum(J)) for J in
       ((), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))}
wit = split_index(pts)
print(f"abstract subset map over 3 axes: split at axis {wit.index + 1}, "
      f"common point {[rat_str(c) for c in wit.point]}")
