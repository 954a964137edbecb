"""Command-line front end.

Exit codes: 0 success / on surface, 1 mathematical negative (off surface,
not in the family, non-invariant), 2 usage error, 3 failed certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import geometry as geo
from . import rational as rat
from . import singular as sing
from . import suite
from .certificates import CertificateError
from .scalars import rat_format

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CERT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _num(text: str):
    """Exact Fraction for rational/decimal literals; float only for inf/nan-free float syntax."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse number {text!r}") from exc


def _point(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected x,y,z, got {text!r}")
    return tuple(_num(p) for p in parts)


def _fmt(v) -> str:
    if isinstance(v, (Fraction, int)):
        return rat_format(v)
    return f"{v:.17g}"


def _emit(report: dict, out) -> None:
    out.write(json.dumps(report, indent=2) + "\n")


def cmd_eval(args, out) -> int:
    p = _point(args.point)
    rho = _num(args.rho)
    value = geo.f_eval(p, rho)
    ok = geo.on_surface(p, rho, args.tol)
    if args.json:
        _emit({
            "command": "eval",
            "inputs": {"point": [_fmt(c) for c in p], "rho": _fmt(rho)},
            "results": {"value": _fmt(value), "on_surface": ok},
            "certificates": [],
            "seed": None,
        }, out)
    else:
        out.write(f"F = {_fmt(value)}\n")
        out.write("on-surface\n" if ok else "off-surface\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


def write_obj(vertices, faces, out) -> None:
    for v in vertices:
        out.write("v {:.17g} {:.17g} {:.17g}\n".format(*v))
    for f in faces:
        out.write("f {} {} {}\n".format(*(i + 1 for i in f)))


def cmd_mesh(args, out) -> int:
    if not (args.t_min > 0 and args.t_max > args.t_min):
        raise UsageError("need 0 < t-min < t-max")
    if args.n_t < 2 or args.n_theta < 2:
        raise UsageError("grid needs at least 2 levels and 2 angles")
    vertices, faces = geo.build_mesh(args.t_min, args.t_max, args.n_t, args.n_theta)
    worst = max(abs(geo.f_eval(v)) for v in vertices)
    if worst > 1e-6:
        sys.stderr.write(f"vertex residual {worst:g} exceeds 1e-6\n")
        return EXIT_CERT
    if args.output == "-":
        write_obj(vertices, faces, out)
    else:
        with open(args.output, "w", newline="\n") as fh:
            write_obj(vertices, faces, fh)
        sys.stderr.write(f"wrote {len(vertices)} vertices, {len(faces)} faces to {args.output}\n")
    return EXIT_OK


def cmd_meridian(args, out) -> int:
    if not (args.t_min > 0 and args.t_max > args.t_min) or args.n < 2:
        raise UsageError("need 0 < t-min < t-max and n >= 2")
    out.write("x,y,z\n")
    for t in geo.t_grid(args.t_min, args.t_max, args.n):
        out.write(",".join(_fmt(v) for v in geo.meridian(t)) + "\n")
    return EXIT_OK


def cmd_slice(args, out) -> int:
    t = _num(args.t)
    if t <= 0:
        raise UsageError("t must be positive: the surface has no points with x + y + z <= 0")
    s = geo.slice_circle(t)
    _emit({
        "command": "slice",
        "inputs": {"t": _fmt(t)},
        "results": {
            "center": [_fmt(c) for c in s.center],
            "plane_constant": _fmt(s.plane_constant),
            "circle_radius_sq": _fmt(s.circle_radius_sq),
            "sphere_radius_sq": _fmt(s.sphere_radius_sq),
        },
        "certificates": [],
        "seed": None,
    }, out)
    return EXIT_OK


def cmd_rotate(args, out) -> int:
    p = _point(args.point)
    P = geo.to_rotated(p)
    try:
        residual = geo.canonical_residual(P)
    except geo.OnAxisError:
        residual = None
    _emit({
        "command": "rotate",
        "inputs": {"point": [_fmt(c) for c in p]},
        "results": {
            "rotated": [_fmt(c) for c in P],
            "canonical_residual": None if residual is None else _fmt(residual),
            "on_axis": residual is None,
        },
        "certificates": [],
        "seed": None,
    }, out)
    return EXIT_OK


def cmd_rational(args, out) -> int:
    if args.action == "gen":
        u, r = _num(args.u), _num(args.r)
        if u == 0:
            raise UsageError("u must be nonzero")
        p = rat.rational_point(u, r)
        _emit({
            "command": "rational gen",
            "inputs": {"u": _fmt(u), "r": _fmt(r)},
            "results": {"point": [_fmt(c) for c in p], "on_surface": geo.f_eval(p) == 0},
            "certificates": [],
            "seed": None,
        }, out)
        return EXIT_OK
    if args.action == "member":
        p = _point(args.point)
        if geo.f_eval(p) != 0:
            raise UsageError(f"{args.point} is not on the surface")
        m = rat.family_membership(p)
        _emit({
            "command": "rational member",
            "inputs": {"point": [_fmt(c) for c in p]},
            "results": m.to_json(),
            "certificates": [],
            "seed": None,
        }, out)
        return EXIT_OK if m.generated else EXIT_NEGATIVE
    # enum
    if args.height < 1:
        raise UsageError("height must be at least 1")
    points = rat.enumerate_points(args.height)
    if args.format == "csv":
        out.write(rat.points_to_csv(points, with_height=True))
    else:
        rows = []
        for p in points:
            m = rat.family_membership(p)
            rows.append({
                "point": [_fmt(c) for c in p],
                "height": rat.point_height(p),
                "membership": m.to_json(),
            })
        _emit({
            "command": "rational enum",
            "inputs": {"height": args.height},
            "results": {"points": rows},
            "certificates": [],
            "seed": None,
        }, out)
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    if args.what == "singular":
        reports = sing.singular_catalog(args.surface)
        ok = all(r.singular for r in reports)
        _emit({
            "command": "analyze singular",
            "inputs": {"surface": args.surface},
            "results": {"points": [r.to_json() for r in reports]},
            "certificates": [r.to_json() for r in reports],
            "seed": None,
        }, out)
        return EXIT_OK if ok else EXIT_CERT
    lines = sing.lines_at_infinity()
    rejection = [sing.finite_line_rejection(args.trials, args.seed, s) for s in ("rational", "gaussian")]
    ok = all(r.passed for r in rejection)
    _emit({
        "command": "analyze lines",
        "inputs": {"trials": args.trials},
        "results": {
            "lines_at_infinity": [
                {"name": l.name, "points": [[str(c) for c in l.line.p], [str(c) for c in l.line.q]]}
                for l in lines
            ],
            "finite_line_rejection": [r.to_json() for r in rejection],
        },
        "certificates": [l.certificate.to_json() for l in lines],
        "seed": args.seed,
    }, out)
    return EXIT_OK if ok else EXIT_CERT


def cmd_verify(args, out) -> int:
    rho = _num(args.rho)
    certs = suite.run_suite(rho=rho, seed=args.seed, tol=args.tol)
    report = suite.summary(certs, rho, args.seed, args.tol)
    if args.json:
        _emit(report, out)
    else:
        for c in certs:
            out.write(f"{'PASS' if c.passed else 'FAIL'}  {c.subject}\n")
            for chk in c.failures():
                out.write(f"      failed: {chk.name}  witness: {json.dumps(chk.to_json()['witness'])}\n")
    return EXIT_OK if report["results"]["passed"] else EXIT_CERT


def cmd_revolution(args, out) -> int:
    rho = _num(args.rho)
    if args.samples < 1:
        raise UsageError("samples must be at least 1")
    rep = geo.revolution_invariance_test(rho, args.samples, args.tol, args.seed)
    _emit({
        "command": "revolution-check",
        "inputs": {"rho": float(rho), "samples": args.samples, "tol": args.tol},
        "results": rep.to_json(),
        "certificates": [],
        "seed": args.seed,
    }, out)
    return EXIT_OK if rep.invariant else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubicrev", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate x^3 + y^3 + z^3 - rho xyz - 1 at a point")
    p.add_argument("--point", required=True, help="x,y,z as rationals (a/b) or decimals")
    p.add_argument("--rho", default="3")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("mesh", help="write an OBJ mesh of the surface")
    p.add_argument("--t-min", type=float, default=0.2)
    p.add_argument("--t-max", type=float, default=8.0)
    p.add_argument("--n-t", type=int, default=96)
    p.add_argument("--n-theta", type=int, default=96)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_mesh)

    p = sub.add_parser("meridian", help="CSV samples of the meridian curve")
    p.add_argument("--t-min", type=float, default=0.2)
    p.add_argument("--t-max", type=float, default=8.0)
    p.add_argument("-n", type=int, default=96)
    p.set_defaults(func=cmd_meridian)

    p = sub.add_parser("slice", help="the circle cut by x + y + z = t")
    p.add_argument("--t", required=True)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("rotate", help="rotate a point so x = y = z becomes the Z axis")
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("rational", help="rational points")
    rsub = p.add_subparsers(dest="action", required=True)
    g = rsub.add_parser("gen")
    g.add_argument("--u", required=True)
    g.add_argument("--r", required=True)
    m = rsub.add_parser("member")
    m.add_argument("--point", required=True)
    e = rsub.add_parser("enum")
    e.add_argument("--height", type=int, required=True)
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("analyze", help="singular points and lines")
    asub = p.add_subparsers(dest="what", required=True)
    s = asub.add_parser("singular")
    s.add_argument("--surface", choices=sorted(sing.SURFACES), default="hcubic")
    l = asub.add_parser("lines")
    l.add_argument("--trials", type=int, default=1000)
    l.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run every certificate")
    p.add_argument("--rho", default="3")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("revolution-check", help="rotation-invariance test about x = y = z")
    p.add_argument("--rho", default="3")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_revolution)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CertificateError as exc:
        sys.stderr.write(f"certificate failure: {exc}\n")
        return EXIT_CERT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
