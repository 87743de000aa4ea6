"""Find a line meeting every row hull or every column hull of a grid.

The scene is an n x m grid of points P_ij = (x_i, y_j, Z_ij).  Row hulls
A_i = conv{P_i1..P_im} live in the planes x = x_i, column hulls
B_j = conv{P_1j..P_nj} in the planes y = y_j.  Any two sets from opposite
families share the grid point of their plane pair, so the families are
pairwise intersecting by construction.  One of the two families always
admits a line transversal, found here by exact rational LP.
"""

from piercing import (Axis, GenConfig, build_grid, find_piercing_line,
                      line_pierces, random_grid, rat_str, section)


def walk(inst, title):
    print("--", title, f"({inst.n} x {inst.m})")
    axis, line, wit = find_piercing_line(inst)
    fam = "column hulls B_j" if axis is Axis.X else "row hulls A_i"
    print(f"  transversal axis: {axis.value}  (line travels across the "
          f"{fam})")
    print(f"  line: z = {rat_str(line.slope)} * t + "
          f"{rat_str(line.intercept)}  in the plane "
          f"{axis.value} = {rat_str(line.plane_value)}")
    hits = line_pierces(inst, line)
    assert all(hits)
    count = inst.m if axis is Axis.X else inst.n
    for k in range(count):
        iv = section(inst, axis, k, line.plane_value)
        t = (inst.y if axis is Axis.X else inst.x)[k]
        print(f"  set {k + 1}: section z in [{rat_str(iv.lo)}, "
              f"{rat_str(iv.hi)}], line height "
              f"{rat_str(line.height_at(t))}")
    print(f"  pierced {sum(hits)}/{count} sections, exactly")


# A hand-picked grid where the x-axis family works on the first try.
inst = build_grid(("1", "2", "3"), ("1", "2", "3"),
                  [["2/5", "1/2", "0"],
                   ["3/2", "1/2", "7/10"],
                   ["1", "1/10", "0"]])
walk(inst, "a 3 x 3 grid with a known transversal")

# A ridge down the middle column kills every vertical x-plane line, so the
# solver has to fall back to the y family.
ridge = build_grid(("1", "2", "3"), ("1", "2", "3"),
                   [["0", "1", "0"]] * 3)
walk(ridge, "a ridge grid where only the y family works")

# Random instances: the claim is universal, so any seed must succeed.
for seed in (7, 8, 9):
    walk(random_grid(GenConfig(seed=seed, n=4, m=5)), f"seed {seed}")

print("every instance pierced")
