"""Certify that one family of a grid admits no line transversal.

Feasibility of the axis system is decided by exact simplex, and the
answer is never just a boolean: a feasible system hands back the line, an
infeasible one hands back a nonnegative combination (u1, u2, u3) of its
rows that sums to 0 = -1 after clearing.  The checker re-multiplies the
certificate against the raw constraint matrix, so a verified certificate
is a proof, not a solver opinion.

The ridge grid (middle column lifted to z = 1) is the canonical failure:
no single line in a plane x = const can pass below the ridge at y = 2 and
above the floor at y = 1, 3 simultaneously.
"""

from piercing import (Axis, build_grid, build_primal, check_combined,
                      dual_certificate, extract_dual_certificate, rat_str,
                      solve_feasibility, verify_dual_certificate)

ridge = build_grid(("1", "2", "3"), ("1", "2", "3"),
                   [["0", "1", "0"]] * 3)

out = solve_feasibility(build_primal(ridge, Axis.X))
print("axis x primal:", "feasible" if out.is_feasible else "infeasible")
assert not out.is_feasible

cert = extract_dual_certificate(ridge, Axis.X)
print("extracted certificate")
print("  position rows:", [rat_str(c) for c in cert.coef_pos])
print("  height rows:  ", [rat_str(c) for c in cert.coef_z])
print("  weight rows:  ", [rat_str(c) for c in cert.coef_const])
assert verify_dual_certificate(ridge, cert)
print("  re-multiplied against the constraints: valid")

# The certificate is not unique.  This hand-written one says: twice the
# height row at y = 2 minus the rows at y = 1, 3 is the concavity defect
# of the ridge, and subtracting the middle weight row leaves 0 = -1.
hand = dual_certificate(Axis.X, ("0", "0", "0"), ("-1", "2", "-1"),
                        ("0", "-1", "0"))
assert verify_dual_certificate(ridge, hand)
print("hand-written certificate (0; -1, 2, -1; 0, -1, 0) also valid")

# Tampering must be caught: flip one sign and verification fails.
bad = dual_certificate(Axis.X, ("0", "0", "0"), ("-1", "2", "-1"),
                       ("0", "1", "0"))
assert not verify_dual_certificate(ridge, bad)
print("sign-flipped copy rejected")

# Both axes can never fail together.  Feed the combined checker a pair of
# would-be certificates and it pinpoints a constraint row the pair cannot
# both satisfy, with the exact cancellation that forces it.
led = check_combined(ridge.x, ridge.y, ridge.Z, hand,
                     dual_certificate(Axis.Y, ("0", "0", "0"),
                                      ("-1", "2", "-1"), ("0", "-1", "0")))
print("combined check branch:", led.branch)
print("violated row:", led.violated)
assert isinstance(led.violated, tuple)
print("so the y family of the ridge keeps its transversal, as it must")
