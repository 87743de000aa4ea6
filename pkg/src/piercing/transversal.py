"""Guaranteed piercing lines and the certificates behind the guarantee.

For a grid instance, a line inside the plane x = x0 pierces every B_j
exactly when, for each j, its point at ordinate y_j is a convex combination
of the column points P_ij.  Collecting the combination weights beta_ij and
the line parameters (slope a, plane x0, intercept z0) gives one linear
system per axis; ``build_primal`` writes it down and ``find_piercing_line``
tries axis X then axis Y.  One of the two is always feasible.

Why: if the axis-X system is infeasible, Farkas multipliers collapse to a
triple of weight vectors (coef_pos, coef_z, coef_const) indexed by j, with

    coef_pos[j] x_i + coef_z[j] z_ij + coef_const[j] >= 0   for all i, j,
    sum_j coef_z[j] y_j = 0,  sum_j coef_pos[j] = 0,  sum_j coef_z[j] = 0,
    sum_j coef_const[j] < 0,

and symmetrically for axis Y.  ``check_combined`` shows both certificate
shapes cannot hold at once: scaling the first family of inequalities by the
second certificate's coef_z (and vice versa), splitting indices by the sign
of those weights, and summing yields four part-sums whose total must be
nonnegative while the equality rows force part1 = part2 = 0 and the strict
rows force part3 + part4 < 0, so some scaled inequality row is violated.
The ``ContradictionLedger`` records the whole computation.
"""

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import DimensionError, FeasibleError, TheoremViolation
from .lpcore import (FarkasCert, LinearSystem, Rat, _ONE, _ZERO, as_rat,
                     solve_feasibility)
from .scene import Axis, GridInstance, PlaneLine, line_pierces

Violation = Union[str, tuple]


@dataclass(frozen=True)
class BaryWitness:
    """Convex-combination weights proving each opposite set is pierced.

    beta is the full n x m matrix; for axis X column j holds the weights
    writing the line's point at y_j as a combination of column j's corners
    (each column sums to one), for axis Y each row i does.
    """

    axis: Axis
    beta: tuple


def _bary_witness(inst: GridInstance, axis: Axis, beta) -> BaryWitness:
    rows = tuple(tuple(r) for r in beta)
    if any(b < 0 for row in rows for b in row):
        raise TheoremViolation("negative barycentric weight")
    if axis is Axis.X:
        sums = [sum(rows[i][j] for i in range(inst.n)) for j in range(inst.m)]
    else:
        sums = [sum(rows[i][j] for j in range(inst.m)) for i in range(inst.n)]
    if any(s != 1 for s in sums):
        raise TheoremViolation("barycentric weights do not sum to one")
    return BaryWitness(axis, rows)


def build_primal(inst: GridInstance, axis: Axis) -> LinearSystem:
    """The piercing feasibility system for one axis.

    Variables, in order: beta_ij (i-major), then slope a, then the plane
    coordinate (x0 for axis X, y0 for axis Y), then intercept z0.  Equality
    rows come in three blocks over the opposite family's index: position
    rows, height rows, and weight-sum rows; inequality rows are
    beta_ij >= 0 in variable order.
    """
    n, m = inst.n, inst.m
    nv = n * m + 3
    col_a = n * m
    col_pos = n * m + 1
    col_z0 = n * m + 2

    def blank():
        return [_ZERO] * nv

    eq = []
    if axis is Axis.X:
        outer = range(m)
        for j in outer:
            row = blank()
            for i in range(n):
                row[i * m + j] = inst.x[i]
            row[col_pos] = -_ONE
            eq.append((tuple(row), _ZERO))
        for j in outer:
            row = blank()
            for i in range(n):
                row[i * m + j] = inst.Z[i][j]
            row[col_a] = -inst.y[j]
            row[col_z0] = -_ONE
            eq.append((tuple(row), _ZERO))
        for j in outer:
            row = blank()
            for i in range(n):
                row[i * m + j] = _ONE
            eq.append((tuple(row), _ONE))
    elif axis is Axis.Y:
        for i in range(n):
            row = blank()
            for j in range(m):
                row[i * m + j] = inst.y[j]
            row[col_pos] = -_ONE
            eq.append((tuple(row), _ZERO))
        for i in range(n):
            row = blank()
            for j in range(m):
                row[i * m + j] = inst.Z[i][j]
            row[col_a] = -inst.x[i]
            row[col_z0] = -_ONE
            eq.append((tuple(row), _ZERO))
        for i in range(n):
            row = blank()
            for j in range(m):
                row[i * m + j] = _ONE
            eq.append((tuple(row), _ONE))
    else:
        raise DimensionError(f"unknown axis {axis!r}")

    ge = []
    for k in range(n * m):
        row = blank()
        row[k] = _ONE
        ge.append((tuple(row), _ZERO))
    return LinearSystem(nv, tuple(eq), tuple(ge))


def find_piercing_line(inst: GridInstance):
    """A line piercing one whole family, tried axis X first.

    Returns (axis, PlaneLine, BaryWitness).  The returned line is re-checked
    through the section tests; one axis is always feasible, so exhausting
    both raises TheoremViolation (a bug, not an input condition).
    """
    n, m = inst.n, inst.m
    for axis in (Axis.X, Axis.Y):
        outcome = solve_feasibility(build_primal(inst, axis))
        if not outcome.is_feasible:
            continue
        pt = outcome.point
        beta = tuple(tuple(pt[i * m + j] for j in range(m)) for i in range(n))
        line = PlaneLine(axis, pt[n * m + 1], pt[n * m], pt[n * m + 2])
        if not all(line_pierces(inst, line)):
            raise TheoremViolation("feasible system produced a line that "
                                   "fails the section test")
        return (axis, line, _bary_witness(inst, axis, beta))
    raise TheoremViolation("both axis systems infeasible; the alternative "
                           "guarantee failed")


@dataclass(frozen=True)
class DualCertificate:
    """Per-opposite-set affine functionals certifying one axis infeasible.

    For side X the rows are indexed by j: the functional
    coef_pos[j]*x + coef_z[j]*z + coef_const[j] is nonnegative on every
    corner of column j, the weighted ordinate and plain sums of coef_z and
    coef_pos vanish, and the coef_const sum is strictly negative (normalized
    to -1).  Side Y swaps the roles of the two index families.
    """

    side: Axis
    coef_pos: tuple
    coef_z: tuple
    coef_const: tuple

    def __len__(self) -> int:
        return len(self.coef_pos)


def dual_certificate(side: Axis, coef_pos, coef_z, coef_const) -> DualCertificate:
    cp = tuple(as_rat(c) for c in coef_pos)
    cz = tuple(as_rat(c) for c in coef_z)
    cc = tuple(as_rat(c) for c in coef_const)
    if not (len(cp) == len(cz) == len(cc)):
        raise DimensionError("certificate rows must have equal length")
    return DualCertificate(side, cp, cz, cc)


def extract_dual_certificate(inst: GridInstance, axis: Axis) -> DualCertificate:
    """Map Farkas multipliers of an infeasible axis to its certificate.

    The equality multipliers come in the three primal blocks (position,
    height, weight-sum); negating and scaling by the positive weight-sum
    total lands on the certificate sign convention with coef_const summing
    to exactly -1.  Raises FeasibleError when the axis admits a line.
    """
    system = build_primal(inst, axis)
    outcome = solve_feasibility(system)
    if outcome.is_feasible:
        raise FeasibleError(f"axis {axis.value} system is feasible; no "
                            "certificate exists")
    k = inst.m if axis is Axis.X else inst.n
    mults = outcome.cert.eq_mults
    pos_m = mults[0:k]
    z_m = mults[k:2 * k]
    bary_m = mults[2 * k:3 * k]
    total = sum(bary_m)
    if total <= 0:
        raise TheoremViolation("certificate weight-sum total must be positive")
    cert = DualCertificate(
        axis,
        tuple(-p / total for p in pos_m),
        tuple(-q / total for q in z_m),
        tuple(-r / total for r in bary_m))
    if not verify_dual_certificate(inst, cert):
        raise TheoremViolation("extracted certificate failed verification")
    return cert


def verify_dual_certificate(inst: GridInstance, cert: DualCertificate) -> bool:
    """Exact check of every certificate condition against the grid."""
    n, m = inst.n, inst.m
    k = m if cert.side is Axis.X else n
    if not (len(cert.coef_pos) == len(cert.coef_z) == len(cert.coef_const) == k):
        raise DimensionError("certificate length does not match the grid")
    if cert.side is Axis.X:
        for i in range(n):
            for j in range(m):
                val = (cert.coef_pos[j] * inst.x[i]
                       + cert.coef_z[j] * inst.Z[i][j]
                       + cert.coef_const[j])
                if val < 0:
                    return False
        if sum(cz * yj for cz, yj in zip(cert.coef_z, inst.y)) != 0:
            return False
    else:
        for i in range(n):
            for j in range(m):
                val = (cert.coef_pos[i] * inst.y[j]
                       + cert.coef_z[i] * inst.Z[i][j]
                       + cert.coef_const[i])
                if val < 0:
                    return False
        if sum(cz * xi for cz, xi in zip(cert.coef_z, inst.x)) != 0:
            return False
    if sum(cert.coef_pos) != 0:
        return False
    if sum(cert.coef_z) != 0:
        return False
    return sum(cert.coef_const) < 0


@dataclass(frozen=True)
class ContradictionLedger:
    """The full bookkeeping showing two certificates cannot coexist.

    Primed values scale each coordinate by the opposite certificate's
    coef_z; index sets split by that weight's sign; the sixteen aggregate
    sums feed the four part values.  ``violated`` names the constraint that
    actually fails (a tag string for scalar rows, ('x:beta', i, j) or
    ('y:beta', i, j) for inequality rows) and ``branch`` says which route
    found it: 'scalar' for a failed equality or strict row, 'v2_zero' /
    'u2_zero' for the degenerate collapses, 'parts' for the generic sum
    argument.
    """

    x_primed: tuple
    y_primed: tuple
    z_primed: tuple
    i_plus: tuple
    i_minus: tuple
    j_plus: tuple
    j_minus: tuple
    upos_plus: Rat
    upos_minus: Rat
    uz_plus: Rat
    uz_minus: Rat
    uconst_plus: Rat
    uconst_minus: Rat
    vpos_plus: Rat
    vpos_minus: Rat
    vz_plus: Rat
    vz_minus: Rat
    vconst_plus: Rat
    vconst_minus: Rat
    xprime_plus: Rat
    xprime_minus: Rat
    yprime_plus: Rat
    yprime_minus: Rat
    part1: Rat
    part2: Rat
    part3: Rat
    part4: Rat
    branch: str
    violated: Violation


def check_combined(x: Sequence, y: Sequence, Z: Sequence,
                   U: DualCertificate, V: DualCertificate) -> ContradictionLedger:
    """Evaluate both certificate shapes on shared grid data.

    No pair (U, V) can satisfy every combined row; this always returns a
    ledger naming a violated constraint.  Scalar rows are checked first in
    a fixed order; when they all hold the degenerate coef_z collapses are
    routed to their sum contradictions and the generic case to the
    four-part sum, followed by a scan for the violated inequality row.
    """
    xs = tuple(as_rat(v) for v in x)
    ys = tuple(as_rat(v) for v in y)
    zs = tuple(tuple(as_rat(v) for v in row) for row in Z)
    n, m = len(xs), len(ys)
    if len(zs) != n or any(len(r) != m for r in zs):
        raise DimensionError("Z shape does not match x and y")
    if U.side is not Axis.X or V.side is not Axis.Y:
        raise DimensionError("U must be side X and V side Y")
    if len(U) != m or len(V) != n:
        raise DimensionError("certificate lengths do not match the grid")

    u1, u2, u3 = U.coef_pos, U.coef_z, U.coef_const
    v1, v2, v3 = V.coef_pos, V.coef_z, V.coef_const

    scalars = [
        ("x:a", sum(u2[j] * ys[j] for j in range(m)) == 0),
        ("y:a", sum(v2[i] * xs[i] for i in range(n)) == 0),
        ("x:x0", sum(u1) == 0),
        ("y:y0", sum(v1) == 0),
        ("x:z0", sum(u2) == 0),
        ("y:z0", sum(v2) == 0),
        ("x:infeasible", sum(u3) < 0),
        ("y:infeasible", sum(v3) < 0),
    ]

    x_primed = tuple(v2[i] * xs[i] for i in range(n))
    y_primed = tuple(u2[j] * ys[j] for j in range(m))
    z_primed = tuple(tuple(u2[j] * v2[i] * zs[i][j] for j in range(m))
                     for i in range(n))
    i_plus = tuple(i for i in range(n) if v2[i] >= 0)
    i_minus = tuple(i for i in range(n) if v2[i] < 0)
    j_plus = tuple(j for j in range(m) if u2[j] >= 0)
    j_minus = tuple(j for j in range(m) if u2[j] < 0)

    def agg(values, idx):
        return sum((values[i] for i in idx), _ZERO)

    sums = dict(
        upos_plus=agg(u1, j_plus), upos_minus=agg(u1, j_minus),
        uz_plus=agg(u2, j_plus), uz_minus=agg(u2, j_minus),
        uconst_plus=agg(u3, j_plus), uconst_minus=agg(u3, j_minus),
        vpos_plus=agg(v1, i_plus), vpos_minus=agg(v1, i_minus),
        vz_plus=agg(v2, i_plus), vz_minus=agg(v2, i_minus),
        vconst_plus=agg(v3, i_plus), vconst_minus=agg(v3, i_minus),
        xprime_plus=agg(x_primed, i_plus), xprime_minus=agg(x_primed, i_minus),
        yprime_plus=agg(y_primed, j_plus), yprime_minus=agg(y_primed, j_minus),
    )
    part1 = (sums["upos_minus"] * sums["xprime_plus"]
             - sums["upos_plus"] * sums["xprime_minus"])
    part2 = (-sums["vpos_plus"] * sums["yprime_minus"]
             + sums["vpos_minus"] * sums["yprime_plus"])
    part3 = (sums["vz_plus"] * sums["uconst_minus"]
             - sums["vz_minus"] * sums["uconst_plus"])
    part4 = (-sums["uz_minus"] * sums["vconst_plus"]
             + sums["uz_plus"] * sums["vconst_minus"])

    def x_beta_value(i, j):
        return u1[j] * xs[i] + u2[j] * zs[i][j] + u3[j]

    def y_beta_value(i, j):
        return v1[i] * ys[j] + v2[i] * zs[i][j] + v3[i]

    def first_violated(order):
        for fam, value_of in order:
            for i in range(n):
                for j in range(m):
                    if value_of(i, j) < 0:
                        return (fam, i, j)
        return None

    branch = None
    violated = None
    for tag, ok in scalars:
        if not ok:
            branch = "scalar"
            violated = tag
            break
    if violated is None:
        if all(w == 0 for w in v2):
            branch = "v2_zero"
            violated = first_violated([("y:beta", y_beta_value)])
        elif all(w == 0 for w in u2):
            branch = "u2_zero"
            violated = first_violated([("x:beta", x_beta_value)])
        else:
            branch = "parts"
            if part1 != 0 or part2 != 0:
                raise TheoremViolation("part1/part2 must vanish when the "
                                       "equality rows hold")
            if part3 + part4 >= 0:
                raise TheoremViolation("part3 + part4 must be negative when "
                                       "both coef_z rows are nonzero")
            violated = first_violated([("x:beta", x_beta_value),
                                       ("y:beta", y_beta_value)])
        if violated is None:
            raise TheoremViolation("no violated inequality row found; the "
                                   "combined system appears solvable")

    return ContradictionLedger(
        x_primed=x_primed, y_primed=y_primed, z_primed=z_primed,
        i_plus=i_plus, i_minus=i_minus, j_plus=j_plus, j_minus=j_minus,
        part1=part1, part2=part2, part3=part3, part4=part4,
        branch=branch, violated=violated, **sums)
