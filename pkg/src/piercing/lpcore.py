"""Exact rational linear feasibility with Farkas certificates.

Everything downstream reduces to one question about a system of linear
equalities and inequalities over the rationals: is it solvable, and if not,
why not.  ``solve_feasibility`` answers with either an exact feasible point
or an exact Farkas certificate, never both, never a float.

The certificate convention: for a system {A_eq v = b_eq, A_ge v >= b_ge}
with v free, infeasibility is witnessed by multipliers (lam, mu) with mu >= 0,
lam unrestricted, such that

    lam . A_eq + mu . A_ge = 0   (as a row vector)  and
    lam . b_eq + mu . b_ge > 0.

Plugging any v into the left identity gives 0 on one side and a positive
number on the other, so no v can exist.  ``verify_farkas`` checks exactly
this, and the solver verifies its own output before returning it.

The solver is a phase-1 simplex with Bland's anti-cycling rule over
``gmpy2.mpq`` scalars.  Pivot order is fixed (lowest eligible column index
enters; ratio ties leave by lowest basis index), so identical inputs produce
bit-for-bit identical outcomes.  Strict inequalities never appear here;
callers express them by normalizing a slack to a constant.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from gmpy2 import mpq

from .errors import DimensionError, EmptyFamilyError, TheoremViolation

Rat = mpq

_ZERO = mpq(0)
_ONE = mpq(1)


def as_rat(value) -> Rat:
    """Coerce to an exact rational. Floats are refused: they already rounded."""
    if isinstance(value, float):
        raise TypeError("float is not exact; pass an int, string, or Fraction")
    if isinstance(value, (int, str, Fraction)) or isinstance(value, mpq):
        return mpq(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rat_str(value) -> str:
    """Canonical text form: 'p/q' in lowest terms, or just 'p' for integers."""
    return str(mpq(value))


def _rat_row(coeffs) -> tuple:
    return tuple(as_rat(c) for c in coeffs)


@dataclass(frozen=True)
class LinearSystem:
    """A finite system of exact linear constraints on ``num_vars`` free reals.

    ``eq_rows`` and ``ge_rows`` are tuples of (coefficients, rhs) pairs meaning
    coeffs . v = rhs and coeffs . v >= rhs respectively.  Nonnegativity of a
    variable is just another ge row.
    """

    num_vars: int
    eq_rows: tuple
    ge_rows: tuple

    def __post_init__(self):
        if self.num_vars < 0:
            raise DimensionError("num_vars must be nonnegative")
        for kind, rows in (("eq", self.eq_rows), ("ge", self.ge_rows)):
            for coeffs, rhs in rows:
                if len(coeffs) != self.num_vars:
                    raise DimensionError(
                        f"{kind} row has {len(coeffs)} coefficients, "
                        f"expected {self.num_vars}")

    @staticmethod
    def make(num_vars: int, eq_rows=(), ge_rows=()) -> "LinearSystem":
        """Build a system, coercing every scalar through ``as_rat``."""
        eq = tuple((_rat_row(c), as_rat(b)) for c, b in eq_rows)
        ge = tuple((_rat_row(c), as_rat(b)) for c, b in ge_rows)
        return LinearSystem(num_vars, eq, ge)


@dataclass(frozen=True)
class FarkasCert:
    """Infeasibility multipliers, one per eq row and one per ge row."""

    eq_mults: tuple
    ge_mults: tuple


@dataclass(frozen=True)
class FeasOutcome:
    """Either a feasible point or a Farkas certificate, never both."""

    point: Optional[tuple]
    cert: Optional[FarkasCert]

    def __post_init__(self):
        if (self.point is None) == (self.cert is None):
            raise DimensionError("outcome must carry exactly one of point/cert")

    @property
    def is_feasible(self) -> bool:
        return self.point is not None

    @staticmethod
    def feasible(point) -> "FeasOutcome":
        return FeasOutcome(tuple(point), None)

    @staticmethod
    def infeasible(cert: FarkasCert) -> "FeasOutcome":
        return FeasOutcome(None, cert)


def _dot(coeffs, values):
    total = _ZERO
    for c, v in zip(coeffs, values):
        if c:
            total += c * v
    return total


def verify_farkas(system: LinearSystem, cert: FarkasCert) -> bool:
    """Check a certificate against its system, exactly.

    True iff the ge multipliers are nonnegative, the combined multiplier
    vector annihilates every variable column, and the combined rhs is
    strictly positive.
    """
    if len(cert.eq_mults) != len(system.eq_rows):
        raise DimensionError("eq multiplier count does not match eq rows")
    if len(cert.ge_mults) != len(system.ge_rows):
        raise DimensionError("ge multiplier count does not match ge rows")
    if any(m < 0 for m in cert.ge_mults):
        return False
    combo = [_ZERO] * system.num_vars
    rhs = _ZERO
    for m, (coeffs, b) in zip(cert.eq_mults, system.eq_rows):
        if not m:
            continue
        rhs += m * b
        for k, c in enumerate(coeffs):
            if c:
                combo[k] += m * c
    for m, (coeffs, b) in zip(cert.ge_mults, system.ge_rows):
        if not m:
            continue
        rhs += m * b
        for k, c in enumerate(coeffs):
            if c:
                combo[k] += m * c
    return all(v == 0 for v in combo) and rhs > 0


def _satisfies(system: LinearSystem, point) -> bool:
    for coeffs, b in system.eq_rows:
        if _dot(coeffs, point) != b:
            return False
    for coeffs, b in system.ge_rows:
        if _dot(coeffs, point) < b:
            return False
    return True


def _integerize(values):
    """Scale a multiplier vector by the lcm of denominators: same certificate,
    integer entries."""
    scale = 1
    for v in values:
        d = v.denominator
        if d != 1:
            g = _gcd(scale, d)
            scale = scale // g * d
    if scale == 1:
        return list(values)
    s = mpq(scale)
    return [v * s for v in values]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def solve_feasibility(system: LinearSystem) -> FeasOutcome:
    """Decide the system, returning a verified point or a verified certificate.

    Deterministic: a fixed standard-form construction and Bland's rule make
    two runs on equal systems return equal outcomes.  Degenerate systems are
    fine; zero variables with zero rows is Feasible with the empty point.
    """
    nv = system.num_vars

    # Rows of the shape c*v_k >= 0 with c > 0 pin a variable to the
    # nonnegative axis; absorb them as variable bounds instead of tableau
    # rows.  Their multipliers are recovered from final reduced costs.
    nonneg = [False] * nv
    unit_rows_of = {}
    generic_ge = []
    for gi, (coeffs, rhs) in enumerate(system.ge_rows):
        nz = [(k, c) for k, c in enumerate(coeffs) if c]
        if rhs == 0 and len(nz) == 1 and nz[0][1] > 0:
            k, c = nz[0]
            nonneg[k] = True
            unit_rows_of.setdefault(k, []).append((gi, c))
        else:
            generic_ge.append(gi)

    free_vars = [k for k in range(nv) if not nonneg[k]]
    col_neg = nv if free_vars else None
    head = nv + (1 if free_vars else 0)
    n_generic = len(generic_ge)
    surplus_col = {gi: head + pos for pos, gi in enumerate(generic_ge)}
    art_start = head + n_generic

    # Assemble tableau rows: all eq rows, then generic ge rows, each oriented
    # to a nonnegative rhs.  Every row gets an identity-start column: an
    # artificial (cost 1), or for flipped ge rows the surplus itself (cost 0).
    tableau = []
    basis = []
    sigma = []
    row_kind = []      # ("eq", orig_index) or ("ge", orig_index)
    id_col = []
    id_cost = []
    n_art = 0

    def blank_row():
        return [_ZERO] * art_start

    for ei, (coeffs, b) in enumerate(system.eq_rows):
        s = -_ONE if b < 0 else _ONE
        row = blank_row()
        negsum = _ZERO
        for k, c in enumerate(coeffs):
            if c:
                row[k] = s * c
                if not nonneg[k]:
                    negsum += c
        if col_neg is not None and negsum:
            row[col_neg] = -s * negsum
        tableau.append(row + [s * b])
        sigma.append(s)
        row_kind.append(("eq", ei))
        id_col.append(art_start + n_art)
        id_cost.append(_ONE)
        n_art += 1

    for gi in generic_ge:
        coeffs, b = system.ge_rows[gi]
        s = -_ONE if b <= 0 else _ONE
        row = blank_row()
        negsum = _ZERO
        for k, c in enumerate(coeffs):
            if c:
                row[k] = s * c
                if not nonneg[k]:
                    negsum += c
        if col_neg is not None and negsum:
            row[col_neg] = -s * negsum
        row[surplus_col[gi]] = -s
        tableau.append(row + [s * b])
        sigma.append(s)
        row_kind.append(("ge", gi))
        if b <= 0:
            id_col.append(surplus_col[gi])
            id_cost.append(_ZERO)
        else:
            id_col.append(art_start + n_art)
            id_cost.append(_ONE)
            n_art += 1

    nrows = len(tableau)
    ncols = art_start + n_art
    for r in range(nrows):
        row = tableau[r]
        rhs = row.pop()
        row.extend([_ZERO] * n_art)
        if id_col[r] >= art_start:
            row[id_col[r]] = _ONE
        row.append(rhs)
        basis.append(id_col[r])

    # Phase-1 reduced costs for min(sum of artificials): d = c - 1.A over
    # artificial-basic rows; the stored objective rhs is -w.
    obj = [_ZERO] * (ncols + 1)
    for j in range(art_start, ncols):
        obj[j] = _ONE
    for r in range(nrows):
        if id_cost[r]:
            row = tableau[r]
            for j in range(ncols + 1):
                if row[j]:
                    obj[j] -= row[j]

    while True:
        enter = -1
        for j in range(art_start):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for r in range(nrows):
            a = tableau[r][enter]
            if a > 0:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best or (
                        ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave < 0:
            raise TheoremViolation(
                "phase-1 objective is bounded below; an unbounded entering "
                "column means the tableau is corrupt")
        prow = tableau[leave]
        piv = prow[enter]
        if piv != 1:
            inv = _ONE / piv
            prow = [v * inv for v in prow]
            tableau[leave] = prow
        for r in range(nrows):
            if r == leave:
                continue
            f = tableau[r][enter]
            if f:
                row = tableau[r]
                tableau[r] = [a - f * b if b else a
                              for a, b in zip(row, prow)]
        f = obj[enter]
        if f:
            obj = [a - f * b if b else a for a, b in zip(obj, prow)]
        basis[leave] = enter

    w = -obj[-1]
    if w == 0:
        vals = {}
        for r in range(nrows):
            vals[basis[r]] = tableau[r][-1]
        shift = vals.get(col_neg, _ZERO) if col_neg is not None else _ZERO
        point = tuple(
            vals.get(k, _ZERO) if nonneg[k] else vals.get(k, _ZERO) - shift
            for k in range(nv))
        if not _satisfies(system, point):
            raise TheoremViolation("solver produced a non-satisfying point")
        return FeasOutcome.feasible(point)

    # Infeasible: multipliers.  For tableau rows, yhat = id cost - reduced
    # cost of the identity-start column, then undo the orientation.  For
    # absorbed nonnegativity rows, the multiplier is the final reduced cost
    # of the variable divided by the row coefficient (first such row per
    # variable carries it).
    eq_mults = [_ZERO] * len(system.eq_rows)
    ge_mults = [_ZERO] * len(system.ge_rows)
    for r in range(nrows):
        m = sigma[r] * (id_cost[r] - obj[id_col[r]])
        kind, idx = row_kind[r]
        if kind == "eq":
            eq_mults[idx] = m
        else:
            ge_mults[idx] = m
    for k, rows in unit_rows_of.items():
        gi, c = rows[0]
        ge_mults[gi] = obj[k] / c
    scaled = _integerize(eq_mults + ge_mults)
    cert = FarkasCert(tuple(scaled[:len(eq_mults)]),
                      tuple(scaled[len(eq_mults):]))
    if not verify_farkas(system, cert):
        raise TheoremViolation("solver produced a non-verifying certificate")
    return FeasOutcome.infeasible(cert)


def point_in_hull(point: Sequence, points: Sequence) -> Optional[tuple]:
    """Barycentric membership test: is ``point`` in the convex hull of
    ``points``?

    Returns the nonnegative coefficient vector (summing to one, reproducing
    the point exactly) or None.  Works in any dimension; the generators may
    be affinely dependent.
    """
    if not points:
        raise EmptyFamilyError("hull of no points is empty")
    q = _rat_row(point)
    pts = [_rat_row(p) for p in points]
    dim = len(q)
    for p in pts:
        if len(p) != dim:
            raise DimensionError("hull generators must match the point's "
                                 "dimension")
    n = len(pts)
    eq = []
    for c in range(dim):
        eq.append((tuple(p[c] for p in pts), q[c]))
    eq.append((tuple(_ONE for _ in pts), _ONE))
    ge = []
    for i in range(n):
        row = [_ZERO] * n
        row[i] = _ONE
        ge.append((tuple(row), _ZERO))
    outcome = solve_feasibility(LinearSystem(n, tuple(eq), tuple(ge)))
    return outcome.point if outcome.is_feasible else None
