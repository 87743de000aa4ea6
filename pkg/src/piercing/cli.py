"""Command dispatch.  All numeric output is exact: rationals print as p/q.

Exit codes: 0 success, 1 a verified theorem guarantee failed (always a
bug worth a report), 2 bad input or configuration.  Set and plane labels
are 1-based on the way out; files and the API are 0-based.
"""

import argparse
import sys

from .errors import ConfigError, PiercingError, TheoremViolation
from .fractional import fractional_transversal, lemma33_pierce, plane_sections
from .highdim import HighDimInstance, highdim_pierce
from .lab import (GenConfig, counterexample_scene, fuzz_report, load_instance,
                  oracle_best_plane_line, random_grid, random_highdim,
                  save_instance, stress_report)
from .lpcore import rat_str
from .scene import (Axis, GridInstance, convex_sets_intersect,
                    general_line_transversal_in_plane, line_pierces)
from .transversal import extract_dual_certificate, find_piercing_line


def _vec(values) -> str:
    return "(" + ", ".join(rat_str(v) for v in values) + ")"


def _need_grid(path):
    inst = load_instance(path)
    if not isinstance(inst, GridInstance):
        raise ConfigError("expected a grid instance file")
    return inst


def _cmd_gen(args) -> int:
    cfg = GenConfig(seed=args.seed, n=args.n, m=args.m, d=args.d,
                    num_bound=args.num_bound, den_bound=args.den_bound)
    if args.kind == "grid":
        obj = random_grid(cfg)
    else:
        obj = random_highdim(cfg)
    save_instance(obj, args.out)
    print("wrote %s instance to %s" % (args.kind, args.out))
    return 0


def _cmd_pierce(args) -> int:
    inst = _need_grid(args.infile)
    axis, line, wit = find_piercing_line(inst)
    print("axis: %s" % axis.value)
    print("plane: %s = %s" % (axis.value, rat_str(line.plane_value)))
    print("line: z = %s * t + %s" % (rat_str(line.slope),
                                     rat_str(line.intercept)))
    print("witness rows:")
    for row in wit.beta:
        print("  " + " ".join(rat_str(v) for v in row))
    hits = line_pierces(inst, line)
    fam = "B" if axis is Axis.X else "A"
    for k, ok in enumerate(hits, start=1):
        print("pierces %s%d: %s" % (fam, k, "yes" if ok else "NO"))
    if not all(hits):
        raise TheoremViolation("returned line missed a section")
    print("verified: all sections pierced")
    return 0


def _cmd_dual(args) -> int:
    inst = _need_grid(args.infile)
    axis = Axis.X if args.axis == "x" else Axis.Y
    cert = extract_dual_certificate(inst, axis)
    print("side: %s" % cert.side.value)
    print("u1 (position): %s" % _vec(cert.coef_pos))
    print("u2 (height):   %s" % _vec(cert.coef_z))
    print("u3 (constant): %s" % _vec(cert.coef_const))
    print("verified: certificate proves the %s system infeasible"
          % axis.value)
    return 0


def _cmd_lemma33(args) -> int:
    inst = _need_grid(args.infile)
    trace = lemma33_pierce(inst)
    print("z_center:  %s" % rat_str(trace.z_center))
    print("z_a_chord: %s" % rat_str(trace.z_a_chord))
    print("z_b_chord: %s" % rat_str(trace.z_b_chord))
    print("z_quad:    %s" % rat_str(trace.z_quad))
    print("tests: x=%s y=%s -> axis %s"
          % ("pass" if trace.test_x else "fail",
             "pass" if trace.test_y else "fail", trace.axis.value))
    print("z_star: %s  lambda: %s" % (rat_str(trace.z_star),
                                      rat_str(trace.lam)))
    print("through %s and %s" % (_vec(trace.start_point),
                                 _vec(trace.end_point)))
    line = trace.line
    print("line: %s = %s, z = %s * t + %s"
          % (line.axis.value, rat_str(line.plane_value),
             rat_str(line.slope), rat_str(line.intercept)))
    if args.svg:
        from .svg import write_plane_svg
        fam = plane_sections(inst, line.axis, line.plane_value)
        write_plane_svg(args.svg, fam, (line.slope, line.intercept),
                        title="central plane %s = %s"
                        % (line.axis.value, rat_str(line.plane_value)))
        print("svg: %s" % args.svg)
    return 0


def _cmd_frac(args) -> int:
    inst = _need_grid(args.infile)
    res = fractional_transversal(inst)
    print("x-plane good triples: %s" % list(res.x_good))
    print("y-plane good triples: %s" % list(res.y_good))
    print("delta: %s  alpha: %s" % (rat_str(res.delta), rat_str(res.alpha)))
    print("chosen plane: %s_%d (%s = %s)"
          % (res.axis.value, res.plane_index + 1, res.axis.value,
             rat_str(res.line.plane_value)))
    print("line: z = %s * t + %s" % (rat_str(res.line.slope),
                                     rat_str(res.line.intercept)))
    size = inst.m if res.axis is Axis.X else inst.n
    print("stabs %d of %d opposite sets" % (res.count, size))
    oline, ocount = oracle_best_plane_line(inst, res.axis,
                                           res.line.plane_value)
    print("oracle count: %d (%s)" % (ocount, "match" if ocount == res.count
                                     else "MISMATCH"))
    if ocount != res.count:
        raise TheoremViolation("fractional count disagrees with the oracle")
    print("informational stabbing-fraction constant: %.6f"
          % res.kalai_fraction)
    if args.svg:
        from .svg import write_plane_svg
        fam = plane_sections(inst, res.axis, res.line.plane_value)
        write_plane_svg(args.svg, fam, (res.line.slope, res.line.intercept),
                        title="plane %s = %s, %d/%d stabbed"
                        % (res.axis.value, rat_str(res.line.plane_value),
                           res.count, size))
        print("svg: %s" % args.svg)
    return 0


def _cmd_highdim(args) -> int:
    inst = load_instance(args.infile)
    if not isinstance(inst, HighDimInstance):
        raise ConfigError("expected a high-dimensional instance file")
    res = highdim_pierce(inst)
    print("family index: %d (of %d)" % (res.index + 1, inst.d))
    print("p1 in A_1: %s" % _vec(res.p1))
    print("p3 in A_3: %s" % _vec(res.p3))
    print("blend in A_2: %s" % _vec(res.blend))
    print("split point: %s" % _vec(res.witness.point))
    print("verified: all three hull memberships exact")
    return 0


def _cmd_fuzz(args) -> int:
    sys.stdout.write(fuzz_report(args.iters, args.seed, n=args.n, m=args.m,
                                 num_bound=args.num_bound,
                                 den_bound=args.den_bound))
    return 0


def _cmd_regress(args) -> int:
    scene = counterexample_scene()
    for i, a in enumerate(scene.family_a, start=1):
        for j, b in enumerate(scene.family_b, start=1):
            if not convex_sets_intersect(a.vertices, b.vertices):
                raise TheoremViolation("A%d and B%d fail to meet" % (i, j))
            print("A%d meets B%d: yes" % (i, j))
    mid_b = scene.family_b[1].plane
    mid_a = scene.family_a[1].plane
    if general_line_transversal_in_plane(scene, mid_b, "a") is not None:
        raise TheoremViolation("unexpected transversal of the A family")
    print("A-family transversal in B2's plane: none")
    if general_line_transversal_in_plane(scene, mid_a, "b") is not None:
        raise TheoremViolation("unexpected transversal of the B family")
    print("B-family transversal in A2's plane: none")
    print("regression scene verified")
    return 0


def _cmd_stress(args) -> int:
    sys.stdout.write(stress_report(args.iters, args.nmax, args.seed,
                                   num_bound=args.num_bound,
                                   den_bound=args.den_bound))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="piercing",
        description="exact line transversals for families of vertical "
                    "convex sets")
    sub = top.add_subparsers(dest="command", required=True)

    def bounds(p, M=10, D=10):
        p.add_argument("--num-bound", type=int, default=M, metavar="M")
        p.add_argument("--den-bound", type=int, default=D, metavar="D")

    p = sub.add_parser("gen", help="sample a random instance to a file")
    p.add_argument("--kind", choices=("grid", "highdim"), default="grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--d", type=int, default=2)
    bounds(p)
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("pierce", help="find and verify a piercing line")
    p.add_argument("infile", metavar="FILE")
    p.set_defaults(func=_cmd_pierce)

    p = sub.add_parser("dual", help="extract an infeasibility certificate")
    p.add_argument("infile", metavar="FILE")
    p.add_argument("--axis", choices=("x", "y"), required=True)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("lemma33", help="central-plane line of a 3x3 grid")
    p.add_argument("infile", metavar="FILE")
    p.add_argument("--svg", metavar="FILE")
    p.set_defaults(func=_cmd_lemma33)

    p = sub.add_parser("frac", help="best plane by triple counting")
    p.add_argument("infile", metavar="FILE")
    p.add_argument("--svg", metavar="FILE")
    p.set_defaults(func=_cmd_frac)

    p = sub.add_parser("highdim", help="pierce one family in dimension 2d-1")
    p.add_argument("infile", metavar="FILE")
    p.set_defaults(func=_cmd_highdim)

    p = sub.add_parser("fuzz", help="combined-system contradiction fuzzing")
    p.add_argument("--iters", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=3)
    bounds(p)
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("regress-counterexample",
                       help="verify the skew-plane scene's nine meets and "
                            "two negative transversals")
    p.set_defaults(func=_cmd_regress)

    p = sub.add_parser("stress", help="random piercing and certificate "
                                      "exclusivity sweep")
    p.add_argument("--iters", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    bounds(p, 20, 20)
    p.set_defaults(func=_cmd_stress)
    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print("error [%s]: %s" % (exc.code, exc), file=sys.stderr)
        return 1
    except PiercingError as exc:
        print("error [%s]: %s" % (exc.code, exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
