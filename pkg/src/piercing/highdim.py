"""Piercing one of d families of convex sets in dimension 2d-1.

Input: d strictly increasing coordinate triples x^1..x^d and a fiber value
z_t in R^(d-1) for every index vector t in {1,2,3}^d.  The derived points
P_t = (x^1_{t_1}, ..., x^d_{t_d}, z_t) generate, for each axis i, a family
of three sets A^i_j = conv(P_t : t_i = j).  The central line space B^i
fixes every base coordinate at its middle value except slot i, which is
free.

For each subset J of the axes, Q_J averages the points P_t that take the
middle index outside J and extreme indices on J, weighted so its first d
coordinates are exactly the middle base point: with alpha^i_1 + alpha^i_3
= 1 chosen so x^i_2 = alpha^i_1 x^i_1 + alpha^i_3 x^i_3,

    Q_J = sum over r in {1,3}^J of (prod_{j in J} alpha^j_{r_j}) P_{J,r}.

The 2^d points Q_J live, after dropping the constant base block, in
R^(d-1), and a counting argument on hyperplane cells forces some axis i to
satisfy conv(Q_J : i in J) meet conv(Q_J : i not in J).  Splitting each
in-side Q_J by the value of t_i factors the common point as
alpha^i_1 P1 + alpha^i_3 P3 with P1 in A^i_1, P3 in A^i_3, both on B^i,
while the out-side combination lies in A^i_2; the line P1 P3 therefore
pierces all of F^i.  Everything is exact; memberships are re-proved by LP.
"""

from dataclasses import dataclass
from itertools import product

from .errors import DimensionError, MonotoneError, TheoremViolation
from .lpcore import (LinearSystem, Rat, _ONE, _ZERO, as_rat, point_in_hull,
                     solve_feasibility)


@dataclass(frozen=True)
class HighDimInstance:
    """d coordinate triples plus a fiber vector per index tuple.

    base[i] is the strictly increasing triple of axis i; fibers maps each
    t in {1,2,3}^d (a tuple of ints) to d-1 fiber coordinates.  Points and
    set generators are derived, never stored.
    """

    base: tuple
    fibers: dict

    @property
    def d(self) -> int:
        return len(self.base)

    def point(self, t) -> tuple:
        head = tuple(self.base[i][t[i] - 1] for i in range(self.d))
        return head + self.fibers[t]

    def set_vertices(self, axis: int, level: int) -> tuple:
        """Generators of A^axis_level: all P_t with t_axis = level."""
        if not 0 <= axis < self.d:
            raise DimensionError("axis out of range")
        if level not in (1, 2, 3):
            raise DimensionError("level must be 1, 2 or 3")
        pts = []
        for t in sorted(self.fibers):
            if t[axis] == level:
                pts.append(self.point(t))
        return tuple(pts)

    def central_base(self) -> tuple:
        return tuple(triple[1] for triple in self.base)


def build_highdim(base, fibers) -> HighDimInstance:
    triples = tuple(tuple(as_rat(v) for v in triple) for triple in base)
    d = len(triples)
    if d < 2:
        raise DimensionError("need at least 2 axes")
    for triple in triples:
        if len(triple) != 3:
            raise DimensionError("each axis takes exactly 3 coordinates")
        if not (triple[0] < triple[1] < triple[2]):
            raise MonotoneError("axis coordinates must be strictly "
                                "increasing")
    packed = {}
    for t in product((1, 2, 3), repeat=d):
        if t not in fibers:
            raise DimensionError("missing fiber value for index %r" % (t,))
        fib = tuple(as_rat(v) for v in fibers[t])
        if len(fib) != d - 1:
            raise DimensionError("fiber vectors must have d-1 coordinates")
        packed[t] = fib
    if len(fibers) != 3 ** d:
        raise DimensionError("unexpected extra fiber keys")
    return HighDimInstance(triples, packed)


@dataclass(frozen=True)
class QFamily:
    """Per-axis middle-point weights and the 2^d central points Q_J.

    alphas[i] = (alpha^i_1, alpha^i_3); points maps each frozenset J to the
    full 2d-1 coordinates of Q_J (first d of which are the central base).
    """

    alphas: tuple
    points: dict


def _subset_key(J):
    return (len(J), tuple(sorted(J)))


def _q_point(inst: HighDimInstance, alphas, J, fix_axis=None, fix_level=None):
    """Q_J, optionally restricting axis fix_axis to one extreme level.

    With fix_axis in J and fix_level in {1,3} this is the r_i = fix_level
    slice of Q_J's defining sum, itself a convex combination of A^i_level
    generators; the full Q_J is the alpha-weighted blend of the two slices.
    """
    free = sorted(j for j in J if j != fix_axis)
    dim = inst.d + (inst.d - 1)
    acc = [_ZERO] * dim
    for choice in product((1, 3), repeat=len(free)):
        weight = _ONE
        t = [2] * inst.d
        for j, level in zip(free, choice):
            t[j] = level
            weight *= alphas[j][0] if level == 1 else alphas[j][1]
        if fix_axis is not None:
            t[fix_axis] = fix_level
        pt = inst.point(tuple(t))
        for c in range(dim):
            acc[c] += weight * pt[c]
    return tuple(acc)


def q_family(inst: HighDimInstance) -> QFamily:
    alphas = []
    for lo, mid, hi in inst.base:
        a1 = (hi - mid) / (hi - lo)
        a3 = (mid - lo) / (hi - lo)
        alphas.append((a1, a3))
    alphas = tuple(alphas)
    points = {}
    for bits in product((0, 1), repeat=inst.d):
        J = frozenset(i for i in range(inst.d) if bits[i])
        points[J] = _q_point(inst, alphas, J)
    central = inst.central_base()
    for J, pt in points.items():
        if pt[:inst.d] != central:
            raise TheoremViolation("Q point escaped the central base")
    return QFamily(alphas, points)


@dataclass(frozen=True)
class SplitWitness:
    """Axis whose in/out Q-hulls meet, with the common point and weights.

    point holds the tail coordinates; coeffs_in / coeffs_out are convex
    coefficient maps over {J : index in J} and its complement, both
    combinations reproducing point exactly.
    """

    index: int
    point: tuple
    coeffs_in: dict
    coeffs_out: dict


def split_index(points: dict) -> SplitWitness:
    """First axis i with conv(Q_J : i in J) meeting conv(Q_J : i not in J).

    points maps every subset of range(d) (as a frozenset) to a tuple of
    rationals, all of one dimension.  Each axis is tried by a joint
    convex-combination feasibility system; one always succeeds.
    """
    subsets = sorted(points, key=_subset_key)
    count = len(subsets)
    d = count.bit_length() - 1
    if count < 4 or count != 2 ** d:
        raise DimensionError("need the Q points of all 2^d subsets, d >= 2")
    universe = frozenset(range(d))
    if universe not in points or any(not J <= universe for J in subsets):
        raise DimensionError("subsets must range over {0..d-1}")
    coords = {J: tuple(as_rat(v) for v in pt) for J, pt in points.items()}
    dim = len(coords[frozenset()])
    if any(len(pt) != dim for pt in coords.values()) or dim == 0:
        raise DimensionError("all Q points must share one dimension >= 1")

    for i in range(d):
        ins = [J for J in subsets if i in J]
        outs = [J for J in subsets if i not in J]
        nv = len(ins) + len(outs)
        eq = []
        for c in range(dim):
            row = tuple(coords[J][c] for J in ins) + tuple(
                -coords[K][c] for K in outs)
            eq.append((row, _ZERO))
        eq.append((tuple([_ONE] * len(ins) + [_ZERO] * len(outs)), _ONE))
        eq.append((tuple([_ZERO] * len(ins) + [_ONE] * len(outs)), _ONE))
        ge = []
        for k in range(nv):
            row = [_ZERO] * nv
            row[k] = _ONE
            ge.append((tuple(row), _ZERO))
        outcome = solve_feasibility(LinearSystem(nv, tuple(eq), tuple(ge)))
        if not outcome.is_feasible:
            continue
        lam = dict(zip(ins, outcome.point[:len(ins)]))
        mu = dict(zip(outs, outcome.point[len(ins):]))
        common = tuple(
            sum((lam[J] * coords[J][c] for J in ins), _ZERO)
            for c in range(dim))
        other = tuple(
            sum((mu[K] * coords[K][c] for K in outs), _ZERO)
            for c in range(dim))
        if common != other:
            raise TheoremViolation("split coefficients disagree on the "
                                   "common point")
        return SplitWitness(i, common, lam, mu)
    raise TheoremViolation("no axis splits; the cell count forbids this")


@dataclass(frozen=True)
class HighDimPierce:
    """A line through P1 in A^i_1 and P3 in A^i_3, both on the central line
    space B^i, whose blend point lies in A^i_2.  All three memberships carry
    exact barycentric certificates."""

    index: int
    p1: tuple
    p3: tuple
    blend: tuple
    witness: SplitWitness


def _reconstruct_side(inst, alphas, lam, axis, level):
    """Blend the fixed-level slices of the in-side Q points by lam.

    lam sums to 1 over subsets containing axis, so the result is a convex
    combination of A^axis_level generators.  An empty lam (total weight
    zero, impossible for genuine split witnesses) falls back to the slice
    of Q_{axis} alone.
    """
    if not lam:
        return _q_point(inst, alphas, frozenset((axis,)), axis, level)
    dim = inst.d + (inst.d - 1)
    acc = [_ZERO] * dim
    for J, w in lam.items():
        part = _q_point(inst, alphas, J, axis, level)
        for c in range(dim):
            acc[c] += w * part[c]
    return tuple(acc)


def highdim_pierce(inst: HighDimInstance):
    """Axis index plus the piercing line of its family, fully verified."""
    qfam = q_family(inst)
    d = inst.d
    tails = {J: pt[d:] for J, pt in qfam.points.items()}
    wit = split_index(tails)
    i = wit.index
    a1, a3 = qfam.alphas[i]
    p1 = _reconstruct_side(inst, qfam.alphas, wit.coeffs_in, i, 1)
    p3 = _reconstruct_side(inst, qfam.alphas, wit.coeffs_in, i, 3)
    blend = tuple(a1 * u + a3 * v for u, v in zip(p1, p3))

    central = inst.central_base()
    other = list(central) + [_ZERO] * (d - 1)
    for K, w in wit.coeffs_out.items():
        pt = qfam.points[K]
        for c in range(d - 1):
            other[d + c] += w * pt[d + c]
    if blend != tuple(other):
        raise TheoremViolation("blend point missed the out-side combination")

    for pt, level in ((p1, 1), (p3, 3), (blend, 2)):
        if point_in_hull(pt, inst.set_vertices(i, level)) is None:
            raise TheoremViolation("hull membership failed for level %d"
                                   % level)
    return HighDimPierce(i, p1, p3, blend, wit)


def grid_to_highdim(inst) -> HighDimInstance:
    """Embed a 3x3 grid as the d = 2 case.

    Base axis 0 carries the grid's y coordinates and axis 1 its x
    coordinates, so fiber (t1, t2) reads Z[t2-1][t1-1] and family F^0
    collects the sets of constant y ordinate.  Under this identification
    axis index 0 corresponds to lines in the central plane of constant x.
    """
    if inst.n != 3 or inst.m != 3:
        raise DimensionError("the d = 2 embedding needs a 3x3 grid")
    fibers = {}
    for t1, t2 in product((1, 2, 3), repeat=2):
        fibers[(t1, t2)] = (inst.Z[t2 - 1][t1 - 1],)
    return HighDimInstance((tuple(inst.y), tuple(inst.x)), fibers)
