"""Count how much of a family one line can stab when full piercing fails.

Cut every set of a grid by a candidate plane to get parallel vertical
segments, one per set.  A triple of segments is agreeable when a single
line meets all three (decided per triple by a 2-variable LP in slope and
intercept).  If alpha is the agreeing fraction of triples, some line
meets at least ceil(alpha/3 * size) of the segments, and the best plane
of a grid always agrees on at least half its triples.  The best line
itself is found by brute force over segment endpoints and cross-checked
against an independent oracle.
"""

import math
import tempfile

from piercing import (GenConfig, best_stab_line, fractional_transversal,
                      oracle_best_plane_line, plane_sections, random_grid,
                      rat_str, segment_family, stab_triples)
from piercing.svg import write_plane_svg

# Start with bare segments: five verticals whose triples mostly agree.
fam = segment_family([("0", ("0", "2")), ("1", ("1", "3")),
                      ("2", ("0", "1")), ("3", ("2", "4")),
                      ("4", ("0", "3"))])
triples = stab_triples(fam)
alpha = len(triples) / math.comb(fam.size, 3)
(slope, icpt), count = best_stab_line(fam)
print(f"segment family of {fam.size}: {len(triples)}/"
      f"{math.comb(fam.size, 3)} triples agree (alpha = {alpha:.2f})")
print(f"best line z = {rat_str(slope)} t + {rat_str(icpt)} stabs "
      f"{count}, bound says >= {math.ceil(alpha * fam.size / 3)}")
assert count >= math.ceil(alpha * fam.size / 3)

# Now the grid pipeline: pick the best plane, count there.
inst = random_grid(GenConfig(seed=21, n=5, m=6))
res = fractional_transversal(inst)
print(f"5 x 6 grid: agreeing triples per x-plane "
      f"{[rat_str(g) for g in res.x_good]} of {math.comb(inst.m, 3)}, "
      f"per y-plane {[rat_str(g) for g in res.y_good]} of "
      f"{math.comb(inst.n, 3)}")
print(f"best plane: axis {res.axis.value} index {res.plane_index + 1}, "
      f"delta = {rat_str(res.delta)} (never below 1/2), "
      f"alpha there = {rat_str(res.alpha)}")
print(f"line z = {rat_str(res.line.slope)} t + "
      f"{rat_str(res.line.intercept)} stabs {res.count} of "
      f"{inst.m if res.axis.value == 'x' else inst.n} sections")

_, oracle = oracle_best_plane_line(inst, res.axis, res.line.plane_value)
assert res.count == oracle
print(f"oracle recount in that plane: {oracle} (match)")

# The sections drawn, with the stab line, for eyeballing.
cut = plane_sections(inst, res.axis, res.line.plane_value)
path = tempfile.mktemp(prefix="frac_plane_", suffix=".svg")
write_plane_svg(path, cut, (res.line.slope, res.line.intercept),
                title=f"axis {res.axis.value}, {res.count} stabbed")
print("picture written to", path)
