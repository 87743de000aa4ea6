"""Geometry of the grid model and of general vertical-polygon scenes.

The grid model: strictly increasing abscissas x_1 < ... < x_n and
y_1 < ... < y_m and a height matrix Z give corner points
P_ij = (x_i, y_j, z_ij).  Family member A_i is the convex hull of row i
(a polygon in the vertical plane x = x_i), and B_j the hull of column j
(in the plane y = y_j).  Every A_i meets every B_j at P_ij, so the two
families are pairwise intersecting by construction.

A candidate transversal is a line inside one vertical plane of the grid:
axis X means the line {(x0, t, a t + z0)} living in the plane x = x0 and
aimed at the B family; axis Y swaps the roles.  ``section`` computes the
exact vertical interval a set cuts out of such a plane, and
``line_pierces`` reduces piercing to interval membership at each ordinate.

``GeneralScene`` drops the grid structure: each set is any convex polygon
given by vertices inside a declared carrier plane.  The in-plane transversal
search there is exhaustive over lines through two section vertices, which is
complete for compact convex sections (any transversal can be translated and
rotated, staying transversal, until it touches two of them).
"""

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (DimensionError, EmptyFamilyError, MonotoneError,
                     PlaneError, SetIndexError)
from .lpcore import (LinearSystem, Rat, _ONE, _ZERO, as_rat, point_in_hull,
                     solve_feasibility)


class Axis(enum.Enum):
    """Which coordinate the carrier plane freezes."""

    X = "x"
    Y = "y"


def _rat_vec(values) -> tuple:
    return tuple(as_rat(v) for v in values)


@dataclass(frozen=True)
class GridInstance:
    """Validated grid data: x (n), y (m), Z (n rows of m heights)."""

    x: tuple
    y: tuple
    Z: tuple

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def m(self) -> int:
        return len(self.y)

    def point(self, i: int, j: int) -> tuple:
        return (self.x[i], self.y[j], self.Z[i][j])

    def a_vertices(self, i: int) -> tuple:
        """Corner points of A_i, the set in the plane x = x_i."""
        if not 0 <= i < self.n:
            raise SetIndexError(f"A index {i} out of range 0..{self.n - 1}")
        return tuple(self.point(i, j) for j in range(self.m))

    def b_vertices(self, j: int) -> tuple:
        """Corner points of B_j, the set in the plane y = y_j."""
        if not 0 <= j < self.m:
            raise SetIndexError(f"B index {j} out of range 0..{self.m - 1}")
        return tuple(self.point(i, j) for i in range(self.n))


def _check_increasing(values, label: str):
    for a, b in zip(values, values[1:]):
        if not a < b:
            raise MonotoneError(f"{label} must be strictly increasing")


def build_grid(x: Sequence, y: Sequence, Z: Sequence) -> GridInstance:
    """Coerce and validate grid data into a GridInstance."""
    xs = _rat_vec(x)
    ys = _rat_vec(y)
    if not xs or not ys:
        raise DimensionError("x and y must be nonempty")
    _check_increasing(xs, "x")
    _check_increasing(ys, "y")
    if len(Z) != len(xs):
        raise DimensionError(f"Z must have {len(xs)} rows")
    rows = []
    for row in Z:
        if len(row) != len(ys):
            raise DimensionError(f"every Z row must have {len(ys)} entries")
        rows.append(_rat_vec(row))
    return GridInstance(xs, ys, tuple(rows))


@dataclass(frozen=True)
class ZInterval:
    """A closed vertical interval [lo, hi], or the empty interval."""

    lo: Optional[Rat]
    hi: Optional[Rat]

    def __post_init__(self):
        if (self.lo is None) != (self.hi is None):
            raise DimensionError("interval endpoints must both be set or both "
                                 "be absent")
        if self.lo is not None and self.lo > self.hi:
            raise DimensionError("interval must have lo <= hi")

    @staticmethod
    def empty() -> "ZInterval":
        return ZInterval(None, None)

    @staticmethod
    def of(lo, hi) -> "ZInterval":
        lo = as_rat(lo)
        hi = as_rat(hi)
        return ZInterval(min(lo, hi), max(lo, hi))

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    def contains(self, z) -> bool:
        if self.is_empty:
            return False
        z = as_rat(z)
        return self.lo <= z <= self.hi

    def intersect(self, other: "ZInterval") -> "ZInterval":
        if self.is_empty or other.is_empty:
            return ZInterval.empty()
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return ZInterval(lo, hi) if lo <= hi else ZInterval.empty()


@dataclass(frozen=True)
class PlaneLine:
    """A line inside one vertical plane of the grid.

    Axis X: the plane x = plane_value, points (plane_value, t, slope*t +
    intercept).  Axis Y: the plane y = plane_value, points (t, plane_value,
    slope*t + intercept).
    """

    axis: Axis
    plane_value: Rat
    slope: Rat
    intercept: Rat

    def height_at(self, t) -> Rat:
        return self.slope * t + self.intercept

    def point_at(self, t) -> tuple:
        z = self.height_at(t)
        if self.axis is Axis.X:
            return (self.plane_value, as_rat(t), z)
        return (as_rat(t), self.plane_value, z)


def _slice_at(points2d, q) -> ZInterval:
    """Exact vertical section of conv(points2d) at abscissa q.

    Every extreme height of the section lies on a vertex at q or on a
    segment between two generators crossing q, so scanning vertices and all
    generator pairs and taking min/max is exact.
    """
    heights = [c for a, c in points2d if a == q]
    npts = len(points2d)
    for i in range(npts):
        a1, c1 = points2d[i]
        for k in range(i + 1, npts):
            a2, c2 = points2d[k]
            if a1 == a2:
                continue
            lo_a, lo_c, hi_a, hi_c = ((a1, c1, a2, c2) if a1 < a2
                                      else (a2, c2, a1, c1))
            if lo_a < q < hi_a:
                t = (q - lo_a) / (hi_a - lo_a)
                heights.append(lo_c + t * (hi_c - lo_c))
    if not heights:
        return ZInterval.empty()
    return ZInterval(min(heights), max(heights))


def section(inst: GridInstance, axis: Axis, set_index: int,
            plane_value) -> ZInterval:
    """Vertical interval cut by one set out of a constant-coordinate plane.

    Axis X asks for B_{set_index} within the plane x = plane_value; axis Y
    asks for A_{set_index} within y = plane_value.  A plane beyond the set's
    coordinate range yields the empty interval rather than an error.
    """
    q = as_rat(plane_value)
    if axis is Axis.X:
        if not 0 <= set_index < inst.m:
            raise SetIndexError(f"B index {set_index} out of range")
        pts = [(inst.x[i], inst.Z[i][set_index]) for i in range(inst.n)]
    elif axis is Axis.Y:
        if not 0 <= set_index < inst.n:
            raise SetIndexError(f"A index {set_index} out of range")
        pts = [(inst.y[j], inst.Z[set_index][j]) for j in range(inst.m)]
    else:
        raise SetIndexError(f"unknown axis {axis!r}")
    return _slice_at(pts, q)


def line_pierces(inst: GridInstance, line: PlaneLine) -> tuple:
    """Which opposite-family sets the line meets, one flag per set.

    An axis-X line meets B_j iff its single point in the plane y = y_j has
    height inside section(B_j at x = plane_value); symmetrically for axis Y.
    """
    if line.axis is Axis.X:
        ords = inst.y
        count = inst.m
    else:
        ords = inst.x
        count = inst.n
    flags = []
    for idx in range(count):
        sec = section(inst, line.axis, idx, line.plane_value)
        flags.append(sec.contains(line.height_at(ords[idx])))
    return tuple(flags)


# ---------------------------------------------------------------------------
# General scenes: arbitrary convex polygons in declared vertical planes.

def _sub3(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


@dataclass(frozen=True)
class PlaneFrame:
    """An affine plane given by an origin point and two spanning directions."""

    origin: tuple
    u: tuple
    v: tuple

    def normal(self) -> tuple:
        n = _cross3(self.u, self.v)
        if n == (0, 0, 0):
            raise PlaneError("plane directions are dependent")
        return n

    def contains(self, point) -> bool:
        return _dot3(self.normal(), _sub3(point, self.origin)) == 0

    def same_plane(self, other: "PlaneFrame") -> bool:
        n = self.normal()
        if _cross3(n, other.normal()) != (0, 0, 0):
            return False
        return _dot3(n, _sub3(other.origin, self.origin)) == 0

    def to_2d(self, point) -> tuple:
        """Coordinates (s, t) with point = origin + s*u + t*v, solved from the
        Gram system; requires the point to lie on the plane."""
        w = _sub3(point, self.origin)
        uu = _dot3(self.u, self.u)
        uv = _dot3(self.u, self.v)
        vv = _dot3(self.v, self.v)
        wu = _dot3(w, self.u)
        wv = _dot3(w, self.v)
        det = uu * vv - uv * uv
        s = (wu * vv - wv * uv) / det
        t = (wv * uu - wu * uv) / det
        return (s, t)

    def to_3d(self, coords) -> tuple:
        s, t = coords
        return tuple(self.origin[c] + s * self.u[c] + t * self.v[c]
                     for c in range(3))


def plane_frame(origin, u, v) -> PlaneFrame:
    frame = PlaneFrame(_rat_vec(origin), _rat_vec(u), _rat_vec(v))
    frame.normal()
    return frame


@dataclass(frozen=True)
class ConvexSet:
    """A convex polygon: vertex list plus the vertical plane carrying it."""

    vertices: tuple
    plane: PlaneFrame


def convex_set(vertices, plane: PlaneFrame) -> ConvexSet:
    verts = tuple(_rat_vec(p) for p in vertices)
    if not verts:
        raise EmptyFamilyError("a convex set needs at least one vertex")
    for p in verts:
        if not plane.contains(p):
            raise PlaneError("vertex does not lie on the declared plane")
    return ConvexSet(verts, plane)


@dataclass(frozen=True)
class GeneralScene:
    """Two families of convex polygons, each polygon in its own plane."""

    family_a: tuple
    family_b: tuple

    def family(self, name: str) -> tuple:
        if name == "a":
            return self.family_a
        if name == "b":
            return self.family_b
        raise SetIndexError(f"unknown family {name!r}; expected 'a' or 'b'")


def general_scene(family_a, family_b) -> GeneralScene:
    fa = tuple(family_a)
    fb = tuple(family_b)
    if not fa or not fb:
        raise EmptyFamilyError("both families must be nonempty")
    return GeneralScene(fa, fb)


def convex_sets_intersect(verts_a, verts_b) -> bool:
    """Exact hull-intersection test for two vertex lists in 3-space."""
    pa = [_rat_vec(p) for p in verts_a]
    pb = [_rat_vec(p) for p in verts_b]
    if not pa or not pb:
        raise EmptyFamilyError("both vertex lists must be nonempty")
    na, nb = len(pa), len(pb)
    nv = na + nb
    eq = []
    for c in range(3):
        eq.append((tuple([p[c] for p in pa] + [-q[c] for q in pb]), _ZERO))
    eq.append((tuple([_ONE] * na + [_ZERO] * nb), _ONE))
    eq.append((tuple([_ZERO] * na + [_ONE] * nb), _ONE))
    ge = []
    for i in range(nv):
        row = [_ZERO] * nv
        row[i] = _ONE
        ge.append((tuple(row), _ZERO))
    return solve_feasibility(LinearSystem(nv, tuple(eq), tuple(ge))).is_feasible


def _plane_section_2d(cset: ConvexSet, plane: PlaneFrame):
    """Generating points (2d, in plane coords) of cset's section with plane.

    If the carrier plane equals the query plane the whole polygon is the
    section; otherwise vertices on the plane plus strict edge crossings over
    all vertex pairs generate the section segment exactly.
    """
    if cset.plane.same_plane(plane):
        return [plane.to_2d(p) for p in cset.vertices]
    n = plane.normal()
    side = [_dot3(n, _sub3(p, plane.origin)) for p in cset.vertices]
    pts = [plane.to_2d(p) for p, d in zip(cset.vertices, side) if d == 0]
    nverts = len(cset.vertices)
    for i in range(nverts):
        for k in range(i + 1, nverts):
            di, dk = side[i], side[k]
            if (di < 0 < dk) or (dk < 0 < di):
                t = di / (di - dk)
                p = cset.vertices[i]
                q = cset.vertices[k]
                cross = tuple(p[c] + t * (q[c] - p[c]) for c in range(3))
                pts.append(plane.to_2d(cross))
    return pts


def _cross2(p, q, w):
    return ((q[0] - p[0]) * (w[1] - p[1]) - (q[1] - p[1]) * (w[0] - p[0]))


def _line_hits_section(p, q, pts2d) -> bool:
    has_neg = has_pos = False
    for w in pts2d:
        s = _cross2(p, q, w)
        if s == 0:
            return True
        if s < 0:
            has_neg = True
        else:
            has_pos = True
        if has_neg and has_pos:
            return True
    return False


def general_line_transversal_in_plane(scene: GeneralScene, plane: PlaneFrame,
                                      family: str) -> Optional[tuple]:
    """Search one declared plane for a line meeting every set of a family.

    Returns (point, direction) in 3-space, or None when no in-plane
    transversal exists.  The search enumerates lines through two section
    vertices, which suffices: a transversal of compact convex sections can
    be translated until it touches one section vertex and rotated about it
    until it touches a second.
    """
    members = scene.family(family)
    declared = [s.plane for s in scene.family_a + scene.family_b]
    if not any(plane.same_plane(d) for d in declared):
        raise PlaneError("not one of the scene's declared planes")
    sections = []
    for cset in members:
        pts = _plane_section_2d(cset, plane)
        if not pts:
            return None
        sections.append(pts)
    allpts = sorted(set(p for pts in sections for p in pts))
    if len(allpts) == 1:
        # every section is this one point; any in-plane direction works
        return (plane.to_3d(allpts[0]), plane.u)
    npts = len(allpts)
    for i in range(npts):
        for k in range(i + 1, npts):
            p, q = allpts[i], allpts[k]
            if all(_line_hits_section(p, q, pts) for pts in sections):
                p3 = plane.to_3d(p)
                q3 = plane.to_3d(q)
                return (p3, _sub3(q3, p3))
    return None
