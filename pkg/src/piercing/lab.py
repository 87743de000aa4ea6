"""Seeded generators, stress harnesses, reference oracles, and instance I/O.

Everything here is deterministic plumbing around the exact core: a fixed
64-bit PRNG (splitmix64) drives all sampling so every report is a pure
function of its seeds, the fuzzer manufactures certificate pairs that
satisfy the combined system's equality and strict rows so the contradiction
ledger must pin a violated nonnegativity row, and the skew-plane scene is
the standing regression witness that dropping the parallel-planes hypothesis
kills in-plane transversals.  JSON files carry every scalar as an exact
string so instances survive a round trip bit for bit.
"""

import json
from dataclasses import dataclass
from itertools import product

from .errors import ConfigError, TheoremViolation
from .fractional import SegmentFamily, best_stab_line, plane_sections, segment_family
from .highdim import HighDimInstance, build_highdim
from .lpcore import Rat, as_rat, rat_str, solve_feasibility
from .scene import (Axis, ConvexSet, GeneralScene, GridInstance, PlaneLine,
                    build_grid, convex_set, general_scene, line_pierces,
                    plane_frame)
from .transversal import (DualCertificate, build_primal, check_combined,
                          dual_certificate, extract_dual_certificate,
                          find_piercing_line, verify_dual_certificate)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: the standard 64-bit mixing generator, exactly as
    published, so streams are reproducible across languages."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection to avoid modulo bias."""
        if n <= 0:
            raise ConfigError("range must be positive")
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % n)
        while True:
            r = self.next64()
            if r < limit:
                return r % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)


@dataclass(frozen=True)
class GenConfig:
    """Sampling parameters: sizes, seed, numerator bound M, denominator
    bound D.  Identical configs generate identical objects."""

    seed: int
    n: int = 0
    m: int = 0
    d: int = 0
    num_bound: int = 10
    den_bound: int = 10

    def __post_init__(self):
        if self.num_bound < 1 or self.den_bound < 1:
            raise ConfigError("bounds must be at least 1")
        if self.n < 0 or self.m < 0 or self.d < 0:
            raise ConfigError("counts must be nonnegative")


def _rand_rat(rng: SplitMix64, M: int, D: int) -> Rat:
    return Rat(rng.between(-M, M), rng.between(1, D))


def _rand_increasing(rng: SplitMix64, count: int, M: int, D: int) -> tuple:
    """count distinct rationals, sorted; duplicates are redrawn."""
    seen = set()
    while len(seen) < count:
        seen.add(_rand_rat(rng, M, D))
    return tuple(sorted(seen))


def random_grid(cfg: GenConfig) -> GridInstance:
    if cfg.n < 1 or cfg.m < 1:
        raise ConfigError("grid sampling needs n, m >= 1")
    rng = SplitMix64(cfg.seed)
    x = _rand_increasing(rng, cfg.n, cfg.num_bound, cfg.den_bound)
    y = _rand_increasing(rng, cfg.m, cfg.num_bound, cfg.den_bound)
    Z = tuple(tuple(_rand_rat(rng, cfg.num_bound, cfg.den_bound)
                    for _ in range(cfg.m)) for _ in range(cfg.n))
    return build_grid(x, y, Z)


def random_segment_family(cfg: GenConfig) -> SegmentFamily:
    if cfg.n < 1:
        raise ConfigError("segment sampling needs n >= 1")
    rng = SplitMix64(cfg.seed)
    absc = _rand_increasing(rng, cfg.n, cfg.num_bound, cfg.den_bound)
    items = []
    for t in absc:
        a = _rand_rat(rng, cfg.num_bound, cfg.den_bound)
        b = _rand_rat(rng, cfg.num_bound, cfg.den_bound)
        items.append((t, (min(a, b), max(a, b))))
    return segment_family(items)


def random_highdim(cfg: GenConfig) -> HighDimInstance:
    if cfg.d < 2:
        raise ConfigError("high-dimensional sampling needs d >= 2")
    rng = SplitMix64(cfg.seed)
    base = tuple(_rand_increasing(rng, 3, cfg.num_bound, cfg.den_bound)
                 for _ in range(cfg.d))
    fibers = {}
    for t in product((1, 2, 3), repeat=cfg.d):
        fibers[t] = tuple(_rand_rat(rng, cfg.num_bound, cfg.den_bound)
                          for _ in range(cfg.d - 1))
    return build_highdim(base, fibers)


def random_subset_points(cfg: GenConfig) -> dict:
    """A point in Rat^(d-1) per subset of range(d), for split testing."""
    if cfg.d < 2:
        raise ConfigError("subset sampling needs d >= 2")
    rng = SplitMix64(cfg.seed)
    points = {}
    for bits in product((0, 1), repeat=cfg.d):
        J = frozenset(i for i in range(cfg.d) if bits[i])
        points[J] = tuple(_rand_rat(rng, cfg.num_bound, cfg.den_bound)
                          for _ in range(cfg.d - 1))
    return points


@dataclass(frozen=True)
class FuzzSample:
    """One fuzz draw: grid data plus certificate pairs satisfying every
    equality row exactly and both strict rows normalized to sum -1."""

    x: tuple
    y: tuple
    Z: tuple
    U: DualCertificate
    V: DualCertificate
    seed: int
    rejections: int


def _null_two_form(rng: SplitMix64, ords, M: int):
    """Nonzero integer combination in the null space of (all-ones, ords).

    Basis vector k (one per middle ordinate) puts ords[k] - ords[-1] in
    slot 0, ords[-1] - ords[0] in slot k, and ords[0] - ords[k] in the last
    slot; both the plain sum and the ords-weighted sum vanish by direct
    cancellation.  Rejects the all-zero draw.
    """
    k = len(ords)
    rejections = 0
    while True:
        coeffs = [rng.between(-M, M) for _ in range(k - 2)]
        vec = [as_rat(0)] * k
        nonzero = False
        for idx, c in enumerate(coeffs, start=1):
            if c == 0:
                continue
            nonzero = True
            vec[0] += c * (ords[idx] - ords[-1])
            vec[idx] += c * (ords[-1] - ords[0])
            vec[-1] += c * (ords[0] - ords[idx])
        if nonzero and any(v != 0 for v in vec):
            return tuple(vec), rejections
        rejections += 1


def _sum_zero(rng: SplitMix64, count: int, M: int, D: int) -> tuple:
    vals = [_rand_rat(rng, M, D) for _ in range(count)]
    mean = sum(vals, as_rat(0)) / count
    return tuple(v - mean for v in vals)


def _sum_minus_one(rng: SplitMix64, count: int, M: int, D: int) -> tuple:
    vals = [_rand_rat(rng, M, D) for _ in range(count)]
    shift = (sum(vals, as_rat(0)) + 1) / count
    return tuple(v - shift for v in vals)


def fuzz_combined(cfg: GenConfig, force_u2_zero=False, force_v2_zero=False):
    """Sample a grid plus a certificate pair and run the contradiction scan.

    The pair satisfies all equality rows of the combined system and both
    strict rows, so the scan must name a violated nonnegativity row; its
    failure would disprove the piercing theorem.  Nonzero weight vectors
    need at least three ordinates; smaller sides are rejected unless the
    corresponding force flag deliberately zeroes that vector to exercise
    the degenerate ledger branches.  Returns (sample, ledger).
    """
    if cfg.n < 2 or cfg.m < 2:
        raise ConfigError("fuzzing needs n, m >= 2")
    if cfg.m < 3 and not force_u2_zero:
        raise ConfigError("m < 3 leaves no nonzero weight vector on the "
                          "y ordinates; pass force_u2_zero to fuzz the "
                          "degenerate branch")
    if cfg.n < 3 and not force_v2_zero:
        raise ConfigError("n < 3 leaves no nonzero weight vector on the "
                          "x ordinates; pass force_v2_zero to fuzz the "
                          "degenerate branch")
    rng = SplitMix64(cfg.seed)
    M, D = cfg.num_bound, cfg.den_bound
    x = _rand_increasing(rng, cfg.n, M, D)
    y = _rand_increasing(rng, cfg.m, M, D)
    Z = tuple(tuple(_rand_rat(rng, M, D) for _ in range(cfg.m))
              for _ in range(cfg.n))
    rejections = 0
    if force_u2_zero:
        u2 = tuple(as_rat(0) for _ in range(cfg.m))
    else:
        u2, rej = _null_two_form(rng, y, M)
        rejections += rej
    if force_v2_zero:
        v2 = tuple(as_rat(0) for _ in range(cfg.n))
    else:
        v2, rej = _null_two_form(rng, x, M)
        rejections += rej
    u1 = _sum_zero(rng, cfg.m, M, D)
    v1 = _sum_zero(rng, cfg.n, M, D)
    u3 = _sum_minus_one(rng, cfg.m, M, D)
    v3 = _sum_minus_one(rng, cfg.n, M, D)
    U = dual_certificate(Axis.X, u1, u2, u3)
    V = dual_certificate(Axis.Y, v1, v2, v3)
    ledger = check_combined(x, y, Z, U, V)
    if not isinstance(ledger.violated, tuple):
        raise TheoremViolation("fuzz pair violated a scalar row it was "
                               "built to satisfy")
    return FuzzSample(x, y, Z, U, V, cfg.seed, rejections), ledger


def counterexample_scene() -> GeneralScene:
    """Two pairwise-meeting triples of vertical convex sets, one set per
    family straddling a skew plane, with no in-plane transversal of the
    opposite family in either middle plane.

    The four outer points span a quadrangle; its cross-sections at x = 2
    and y = 2 are the segments the middle sets are built on, fattened by
    the interior point (2, 2, 1/7) into thin triangles.  Every one of the
    nine pairwise intersections is a named point of the construction.
    """
    p11 = ("1", "1", "0")
    p31 = ("3", "1", "0")
    p13 = ("1", "3", "0")
    p35 = ("3", "5", "1")
    p22 = ("2", "2", "1/7")
    la_lo, la_hi = ("2", "1", "0"), ("2", "4", "1/2")
    lb_lo, lb_hi = ("1", "2", "0"), ("3", "2", "1/4")

    ez = ("0", "0", "1")
    plane_x1 = plane_frame(("1", "0", "0"), ("0", "1", "0"), ez)
    plane_x2 = plane_frame(("2", "0", "0"), ("0", "1", "0"), ez)
    plane_x3 = plane_frame(("3", "0", "0"), ("0", "1", "0"), ez)
    plane_y1 = plane_frame(("0", "1", "0"), ("1", "0", "0"), ez)
    plane_y2 = plane_frame(("0", "2", "0"), ("1", "0", "0"), ez)
    plane_b3 = plane_frame(p13, ("1", "1", "0"), ez)

    fam_a = (convex_set((p11, p13), plane_x1),
             convex_set((la_lo, la_hi, p22), plane_x2),
             convex_set((p31, p35), plane_x3))
    fam_b = (convex_set((p11, p31), plane_y1),
             convex_set((lb_lo, lb_hi, p22), plane_y2),
             convex_set((p13, p35), plane_b3))
    return general_scene(fam_a, fam_b)


def oracle_best_plane_line(inst: GridInstance, axis: Axis, plane_value):
    """Best stabbing line of the opposite family's sections at one plane.

    Brute-force reference: sections come straight from the hull slicer and
    the line from endpoint-pair enumeration, independent of the primal LP
    and the triple-counting route.
    """
    fam = plane_sections(inst, axis, as_rat(plane_value))
    (slope, icpt), count = best_stab_line(fam)
    return PlaneLine(axis, as_rat(plane_value), slope, icpt), count


def _fam_str(fam: SegmentFamily) -> str:
    return " ".join("%s:[%s,%s]" % (rat_str(a), rat_str(iv.lo), rat_str(iv.hi))
                    for a, iv in fam.items)


def stress_report(iters: int, nmax: int, seed: int,
                  num_bound: int = 20, den_bound: int = 20) -> str:
    """Piercing plus certificate exclusivity over seeded random grids.

    Each iteration draws sizes in [1, nmax], finds a piercing line, checks
    it against every opposite section, then solves both axis systems and
    records which side was feasible; the solver itself enforces that each
    outcome carries exactly one of point or certificate.  The report is a
    pure function of (iters, nmax, seed, bounds).
    """
    if iters < 1 or nmax < 1:
        raise ConfigError("iters and nmax must be at least 1")
    master = SplitMix64(seed)
    lines = ["stress iters=%d nmax=%d seed=%d M=%d D=%d"
             % (iters, nmax, seed, num_bound, den_bound)]
    for it in range(iters):
        sub = master.next64()
        n = 1 + SplitMix64(sub ^ 0x5EED).below(nmax)
        m = 1 + SplitMix64(sub ^ 0xFEED).below(nmax)
        cfg = GenConfig(seed=sub, n=n, m=m,
                        num_bound=num_bound, den_bound=den_bound)
        inst = random_grid(cfg)
        axis, line, wit = find_piercing_line(inst)
        if not all(line_pierces(inst, line)):
            raise TheoremViolation("stress line missed a section")
        feas = {}
        for ax in (Axis.X, Axis.Y):
            outcome = solve_feasibility(build_primal(inst, ax))
            feas[ax] = outcome.is_feasible
            if not outcome.is_feasible:
                cert = extract_dual_certificate(inst, ax)
                if not verify_dual_certificate(inst, cert):
                    raise TheoremViolation("extracted certificate failed")
        lines.append(
            "iter=%d seed=%d n=%d m=%d axis=%s plane=%s slope=%s icpt=%s "
            "feasible_x=%d feasible_y=%d" % (
                it, sub, n, m, axis.value, rat_str(line.plane_value),
                rat_str(line.slope), rat_str(line.intercept),
                int(feas[Axis.X]), int(feas[Axis.Y])))
    lines.append("stress ok=%d fail=0" % iters)
    return "\n".join(lines) + "\n"


def fuzz_report(iters: int, seed: int, n: int = 3, m: int = 3,
                num_bound: int = 10, den_bound: int = 10) -> str:
    """Run the combined-system fuzzer repeatedly; deterministic text."""
    if iters < 1:
        raise ConfigError("iters must be at least 1")
    master = SplitMix64(seed)
    lines = ["fuzz iters=%d seed=%d n=%d m=%d" % (iters, seed, n, m)]
    for it in range(iters):
        cfg = GenConfig(seed=master.next64(), n=n, m=m,
                        num_bound=num_bound, den_bound=den_bound)
        sample, ledger = fuzz_combined(cfg)
        tag, i, j = ledger.violated
        lines.append("iter=%d seed=%d branch=%s violated=%s[%d,%d] "
                     "rejections=%d" % (it, cfg.seed, ledger.branch, tag,
                                        i, j, sample.rejections))
    lines.append("fuzz ok=%d fail=0" % iters)
    return "\n".join(lines) + "\n"


def _enc_vec(values):
    return [rat_str(as_rat(v)) for v in values]


def save_instance(obj, path: str):
    """Write a grid, high-dimensional instance, or scene as exact JSON."""
    if isinstance(obj, GridInstance):
        data = {"kind": "grid", "x": _enc_vec(obj.x), "y": _enc_vec(obj.y),
                "Z": [_enc_vec(row) for row in obj.Z]}
    elif isinstance(obj, HighDimInstance):
        data = {"kind": "highdim", "d": obj.d,
                "x": [_enc_vec(t) for t in obj.base],
                "z": {",".join(str(v) for v in t): _enc_vec(fib)
                      for t, fib in sorted(obj.fibers.items())}}
    elif isinstance(obj, GeneralScene):
        def enc_set(cs: ConvexSet):
            return {"plane": {"origin": _enc_vec(cs.plane.origin),
                              "u": _enc_vec(cs.plane.u),
                              "v": _enc_vec(cs.plane.v)},
                    "vertices": [_enc_vec(p) for p in cs.vertices]}
        data = {"kind": "scene",
                "a": [enc_set(s) for s in obj.family_a],
                "b": [enc_set(s) for s in obj.family_b]}
    else:
        raise ConfigError("unsupported instance type %r" % type(obj).__name__)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def load_instance(path: str):
    """Read an instance file; scalars parse exactly (strings or decimal
    literals, never binary floats)."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh, parse_float=str)
    kind = data.get("kind")
    if kind == "grid":
        return build_grid(data["x"], data["y"], data["Z"])
    if kind == "highdim":
        fibers = {}
        for key, fib in data["z"].items():
            t = tuple(int(part) for part in key.split(","))
            fibers[t] = tuple(as_rat(v) for v in fib)
        return build_highdim(data["x"], fibers)
    if kind == "scene":
        def dec_set(blob):
            frame = plane_frame(blob["plane"]["origin"], blob["plane"]["u"],
                                blob["plane"]["v"])
            return convex_set(blob["vertices"], frame)
        return general_scene(tuple(dec_set(b) for b in data["a"]),
                             tuple(dec_set(b) for b in data["b"]))
    raise ConfigError("unknown instance kind %r" % kind)
