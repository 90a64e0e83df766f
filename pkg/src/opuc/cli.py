"""Command-line front end: tables to CSV and verification suites to JSON.

Every suite runs over a fixed deterministic grid and emits a canonical
report (checks sorted by name, degree, then point), so two runs with the
same flags produce byte-identical output.

Exit codes: 0 all checks pass, 1 verification failures, 2 usage errors,
3 numerical degeneracy or accuracy failures.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import __version__
from .cauchy import DEFAULT_RTOL, cauchy_G, cauchy_Gstar, laurent_tail
from .errors import AccuracyError, DegenerateMeasureError, OpucError
from .moments import moments_for
from .painleve import dpii_residual
from .rh import (
    assemble_Y,
    transfer_recurrence_residuals,
    jump_residual,
    structure_matrix_numeric,
    transfer_residual,
)
from .structure import (
    curvature_residual_bessel,
    curvature_residual_generic,
    curvature_residual_jacobi,
    first_order_residuals_bessel,
    first_order_residuals_jacobi,
    generic_second_order_residual,
    hypergeometric_residuals_jacobi,
    mtilde_bessel,
    mtilde_jacobi,
    second_curvature_residual,
    second_order_residuals_bessel,
    structure_relation_jacobi,
    structure_relations_bessel,
    traceback_residual,
)
from .szego import verblunsky_from_moments
from .weights import WeightSpec

INNER_R = 0.4
OUTER_R = 2.5
SINGULARITY_CLEARANCE = 0.05


def standard_grid(w: WeightSpec) -> list[complex]:
    """Sixteen points on two circles, avoiding weight singularities."""
    pts = []
    for r in (INNER_R, OUTER_R):
        for k in range(8):
            z = r * complex(math.cos(k * math.pi / 4), math.sin(k * math.pi / 4))
            if all(abs(z - s) >= SINGULARITY_CLEARANCE for s in w.singular_points()):
                pts.append(z)
    return pts


def circle_grid() -> list[complex]:
    """Eight circle points for the jump check, off the positive real axis."""
    return [complex(math.cos(t), math.sin(t))
            for t in ((k + 0.5) * math.pi / 4 for k in range(8))]


def _fmt_z(z: complex | None) -> str | None:
    if z is None:
        return None
    return f"{z.real:.12g}{z.imag:+.12g}j"


class Suite:
    """Accumulates checks and renders the canonical JSON report."""

    def __init__(self, meta: dict):
        self.meta = meta
        self.checks: list[dict] = []

    def add(self, name: str, n: int, residual: float, tolerance: float,
            z: complex | None = None) -> None:
        self.checks.append({
            "name": name,
            "n": n,
            "z": _fmt_z(z),
            "residual": float(residual),
            "tolerance": float(tolerance),
            "pass": bool(residual < tolerance),
        })

    def report(self) -> dict:
        checks = sorted(self.checks,
                        key=lambda c: (c["name"], c["n"], c["z"] or ""))
        passed = sum(1 for c in checks if c["pass"])
        return {
            "meta": self.meta,
            "checks": checks,
            "summary": {
                "total": len(checks),
                "passed": passed,
                "failed": len(checks) - passed,
            },
        }

    @property
    def all_pass(self) -> bool:
        return all(c["pass"] for c in self.checks)


def _weight_from_args(args, parser) -> WeightSpec:
    kind = args.weight
    if kind == "lebesgue":
        return WeightSpec.lebesgue()
    if kind == "bessel":
        if args.ell is None:
            parser.error("--weight bessel requires --ell")
        return WeightSpec.bessel(args.ell)
    if kind == "jacobi":
        if args.lam is None:
            parser.error("--weight jacobi requires --lambda")
        return WeightSpec.jacobi(complex(args.lam, args.eta or 0.0))
    if kind == "custom":
        if args.moments is None:
            parser.error("--weight custom requires --moments <file.csv>")
        from .moments import MomentTable
        return WeightSpec.custom(MomentTable.from_csv(args.moments))
    parser.error(f"unknown weight {kind!r}")


def _verblunsky_for(w: WeightSpec, nmax: int, rtol: float | None):
    c = moments_for(w, nmax + 4)
    return verblunsky_from_moments(c, nmax + 2), c


def _apply_perturb(v, spec: str, parser):
    try:
        idx, eps = spec.split(":")
        return v.perturbed(int(idx), float(eps))
    except (ValueError, IndexError):
        parser.error("--perturb expects n:eps, e.g. 5:1e-3")


# ---------------------------------------------------------------------------
# suites


def _suite_rh(suite: Suite, v, w: WeightSpec, nmax: int, rtol: float) -> None:
    grid = standard_grid(w)
    jump_tol = 1e-5 if w.kind == "jacobi" else 1e-6
    for n in range(1, nmax + 1):
        for z in grid:
            Y = assemble_Y(v, w, n, z, rtol)
            suite.add("det_unimodular", n, abs(Y.det() - 1.0), 1e-8, z)
        z = grid[1]
        if n < v.nmax - 1:
            suite.add("transfer_relation", n,
                      transfer_residual(v, w, n, z, rtol), 1e-8, z)
            r1, r2, r3, r4 = transfer_recurrence_residuals(v, w, n, z, rtol)
            suite.add("recurrence_phi", n, r1, 1e-8, z)
            suite.add("recurrence_phistar", n, r2, 1e-8, z)
            suite.add("recurrence_g", n, r3, 1e-8, z)
            suite.add("recurrence_gstar", n, r4, 1e-8, z)
        suite.add("value_g_origin", n,
                  abs(cauchy_G(v, w, n, 0.0, rtol) - 1.0 / v.b[n]), 1e-9)
        suite.add("value_gstar_origin", n,
                  abs(cauchy_Gstar(v, w, n, 0.0, rtol)
                      - v.alphas[n - 1] / v.b[n - 1]), 1e-9)
    for t in circle_grid():
        suite.add("jump_condition", nmax, jump_residual(v, w, nmax, t, rtol=rtol),
                  jump_tol, t)
    for n in (2, nmax):
        g, gs = laurent_tail(v, w, n)
        lead = -v.alpha(n).conjugate() / v.b[n]
        sub = (v.alpha(n).conjugate() / v.b[n] * v.phi1[n + 1]
               - v.alpha(n + 1).conjugate() / v.b[n + 1])
        suite.add("tail_g_leading", n, abs(g[0] - lead), 1e-6)
        suite.add("tail_g_subleading", n, abs(g[1] - sub), 1e-6)
        suite.add("tail_gstar_leading", n, abs(gs[0] + 1.0 / v.b[n - 1]), 1e-6)
        suite.add("tail_gstar_subleading", n,
                  abs(gs[1] - v.phi1[n] / v.b[n - 1]), 1e-6)


def _suite_structure(suite: Suite, v, w: WeightSpec, nmax: int, rtol: float) -> None:
    grid = standard_grid(w)
    zs = [grid[1], grid[len(grid) // 2 + 1]]
    top = min(nmax, v.nmax - 2)
    for n in range(2, top + 1):
        for z in zs:
            Mnum = structure_matrix_numeric(v, w, n, z, rtol)
            if w.kind == "bessel":
                diff = mtilde_bessel(v, w.ell, n, z) - Mnum.scale(z * z)
                suite.add("closed_structure_matrix", n, diff.frobenius(), 1e-6, z)
                suite.add("curvature_closed", n,
                          curvature_residual_bessel(v, w.ell, n, z), 1e-9, z)
            elif w.kind == "jacobi":
                diff = mtilde_jacobi(v, w.b, n, z) - Mnum.scale(z * (1.0 - z))
                suite.add("closed_structure_matrix", n, diff.frobenius(), 1e-6, z)
                suite.add("curvature_closed", n,
                          curvature_residual_jacobi(v, w.b, n, z), 1e-9, z)
            suite.add("curvature_generic", n,
                      curvature_residual_generic(v, w, n, z, rtol), 1e-7, z)
            suite.add("curvature_second", n,
                      second_curvature_residual(v, w, n, z, rtol), 1e-6, z)
        z = zs[1]
        suite.add("second_order_generic", n,
                  generic_second_order_residual(v, w, n, z, rtol), 1e-5, z)
        suite.add("first_order_traceback", n,
                  traceback_residual(v, w, n, z, rtol), 1e-5, z)
        if w.kind == "bessel":
            r1, r2 = structure_relations_bessel(v, w.ell, n)
            suite.add("structure_relation_three_term", n, r1, 1e-9)
            suite.add("structure_relation_weighted", n, r2, 1e-9)
            fo = first_order_residuals_bessel(v, w, w.ell, n, zs[0], rtol)
            so = second_order_residuals_bessel(v, w, w.ell, n, zs[1], rtol)
            for tag, rf, rg in (("first_order", fo[0], fo[1]),
                                ("second_order", so[0], so[1])):
                tol_g = 1e-7 if tag == "first_order" else 1e-6
                suite.add(f"{tag}_phi", n, rf, 1e-9)
                suite.add(f"{tag}_g", n, rg, tol_g, zs[0] if tag == "first_order" else zs[1])
            suite.add("first_order_phistar", n, fo[2], 1e-9)
            suite.add("first_order_gstar", n, fo[3], 1e-7, zs[0])
            suite.add("second_order_phistar", n, so[2], 1e-9)
            suite.add("second_order_gstar", n, so[3], 1e-6, zs[1])
        elif w.kind == "jacobi":
            suite.add("structure_relation_three_term", n,
                      structure_relation_jacobi(v, w.b, n), 1e-9)
            fo = first_order_residuals_jacobi(v, w, w.b, n, zs[0], rtol)
            hg = hypergeometric_residuals_jacobi(v, w, w.b, n, zs[1], rtol)
            suite.add("first_order_phi", n, fo[0], 1e-9)
            suite.add("first_order_g", n, fo[1], 1e-7, zs[0])
            suite.add("first_order_phistar", n, fo[2], 1e-9)
            suite.add("first_order_gstar", n, fo[3], 1e-7, zs[0])
            suite.add("second_order_phi", n, hg[0], 1e-9)
            suite.add("second_order_g", n, hg[1], 1e-6, zs[1])
            suite.add("second_order_phistar", n, hg[2], 1e-9)
            suite.add("second_order_gstar", n, hg[3], 1e-6, zs[1])


def _suite_painleve(suite: Suite, v, w: WeightSpec, nmax: int) -> None:
    if w.kind != "bessel" or w.ell <= 0:
        return
    alphas = [a.real for a in v.alphas]
    for n in range(2, min(nmax, v.nmax - 1) + 1):
        suite.add("dpii_relation", n, dpii_residual(alphas, w.ell, n), 1e-7)


def cmd_moments(args, parser) -> int:
    w = _weight_from_args(args, parser)
    table = moments_for(w, args.jmax)
    if args.out:
        table.to_csv(args.out)
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["j", "re", "im"])
        for j in range(table.jmin, table.jmax + 1):
            c = table.get(j)
            writer.writerow([j, repr(c.real), repr(c.imag)])
    return 0


def cmd_verblunsky(args, parser) -> int:
    w = _weight_from_args(args, parser)
    c = moments_for(w, args.n + 2)
    v = verblunsky_from_moments(c, args.n)
    rows = [["n", "re_alpha", "im_alpha", "kappa2", "b", "re_phi1", "im_phi1"]]
    for n in range(args.n):
        a = v.alphas[n]
        p = v.phi1[n]
        rows.append([n, repr(a.real), repr(a.imag), repr(v.kappa2[n]),
                     repr(v.b[n]), repr(p.real), repr(p.imag)])
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        csv.writer(out).writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


def cmd_dpii(args, parser) -> int:
    if args.ell is None or args.ell <= 0:
        parser.error("dpii requires --ell > 0")
    w = WeightSpec.bessel(args.ell)
    c = moments_for(w, args.n + 3)
    v = verblunsky_from_moments(c, args.n + 1)
    alphas = [a.real for a in v.alphas]
    rows = [["n", "alpha", "residual"]]
    for n in range(args.n + 1):
        resid = dpii_residual(alphas, args.ell, n) if n >= 2 else 0.0
        rows.append([n, repr(alphas[n]), repr(resid)])
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        csv.writer(out).writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


def cmd_verify(args, parser) -> int:
    w = _weight_from_args(args, parser)
    rtol = args.rtol if args.rtol is not None else DEFAULT_RTOL
    nmax = args.n
    v, _ = _verblunsky_for(w, nmax, rtol)
    if args.perturb:
        v = _apply_perturb(v, args.perturb, parser)
    meta = {
        "weight": w.label(),
        "nmax": nmax,
        "grid": f"radii [{INNER_R}, {OUTER_R}], 8 angles each",
        "rtol": rtol,
        "suite": args.suite,
        "version": __version__,
    }
    suite = Suite(meta)
    if args.suite in ("rh", "all"):
        _suite_rh(suite, v, w, nmax, rtol)
    if args.suite in ("structure", "all"):
        _suite_structure(suite, v, w, nmax, rtol)
    if args.suite in ("painleve", "all"):
        _suite_painleve(suite, v, w, nmax)
    payload = json.dumps(suite.report(), sort_keys=True, indent=2) + "\n"
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0 if suite.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opuc",
        description="Orthogonal polynomials on the unit circle: tables and "
                    "verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_weight_flags(p):
        p.add_argument("--weight", default="lebesgue",
                       choices=["lebesgue", "bessel", "jacobi", "custom"])
        p.add_argument("--ell", type=float, default=None)
        p.add_argument("--lambda", dest="lam", type=float, default=None)
        p.add_argument("--eta", type=float, default=None)
        p.add_argument("--moments", default=None,
                       help="CSV moment table for --weight custom")

    p = sub.add_parser("moments", help="write trigonometric moments as CSV")
    add_weight_flags(p)
    p.add_argument("--jmax", type=int, default=24)
    p.add_argument("--out", default=None)

    p = sub.add_parser("verblunsky", help="write recurrence coefficients as CSV")
    add_weight_flags(p)
    p.add_argument("--n", type=int, default=24)
    p.add_argument("--out", default=None)

    p = sub.add_parser("dpii", help="discrete Painleve II orbit and residuals")
    p.add_argument("--ell", type=float, default=None)
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--from-moments", action="store_true", default=True,
                   help="derive the orbit from moments (default)")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["rh", "structure", "painleve", "all"])
    add_weight_flags(p)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--grid", default="default", choices=["default"])
    p.add_argument("--rtol", type=float, default=None)
    p.add_argument("--report", default=None)
    p.add_argument("--perturb", default=None, metavar="N:EPS",
                   help="shift alpha_N by EPS before verifying")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "moments": cmd_moments,
        "verblunsky": cmd_verblunsky,
        "dpii": cmd_dpii,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args, parser)
    except (DegenerateMeasureError, AccuracyError, ZeroDivisionError) as exc:
        print(f"opuc: numerical degeneracy: {exc}", file=sys.stderr)
        return 3
    except OpucError as exc:
        print(f"opuc: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
