"""Why the parallel-planes hypothesis cannot be dropped: a skew scene.

Two families of three vertical polygons, pairwise intersecting across
families, where NEITHER middle plane carries a full transversal.  The
construction keeps eight sets in parallel vertical planes and tilts a
single one, B_3, into a skew vertical plane.  Intersections survive, but
the two candidate transversal lines are forced through incompatible
height windows: over the middle plane of family b the A-sections demand
a height the B_2 section just misses, and symmetrically over the middle
plane of family a.

Everything is checked exactly: nine pairwise hull intersections by LP,
and the two nonexistence claims by exhausting the candidate lines in
each middle plane.
"""

from piercing import (convex_sets_intersect, counterexample_scene,
                      general_line_transversal_in_plane, rat_str)

scene = counterexample_scene()

print("family a planes:",
      [tuple(rat_str(c) for c in s.plane.origin) for s in scene.family_a])
print("family b planes:",
      [tuple(rat_str(c) for c in s.plane.origin) for s in scene.family_b])
print("b_3 direction:",
      tuple(rat_str(c) for c in scene.family_b[2].plane.u),
      "(skew: not parallel to either axis)")

for i, a in enumerate(scene.family_a, 1):
    for j, b in enumerate(scene.family_b, 1):
        ok = convex_sets_intersect(a.vertices, b.vertices)
        assert ok
        print(f"  A_{i} meets B_{j}: yes")

for plane, fam, label in ((scene.family_b[1].plane, "a", "a within the "
                           "middle plane of family b"),
                          (scene.family_a[1].plane, "b", "b within the "
                           "middle plane of family a")):
    line = general_line_transversal_in_plane(scene, plane, fam)
    assert line is None
    print(f"transversal of family {label}: none")

# Sanity: transversals are not globally impossible, only in the two
# planes that matter.  The plane x = 1 carries one for family b.
line = general_line_transversal_in_plane(scene, scene.family_a[0].plane,
                                         "b")
assert line is not None
print("control: family b has a transversal in the first a-plane")
print("so pairwise intersection alone, without parallel planes, does not "
      "force a piercing line")
