"""Command-line front end.

Usage::

    majradius radius --case half_plane_alpha --alpha 0
    majradius table --format csv
    majradius bb-solve --case exponential --z 0.3
    majradius sharpness --case sine --format text
    majradius verify

The default root tolerance can be overridden with ``MAJRADIUS_TOL``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .bb import BBSolution, QuadratureConfig
from .catalog import CASE_IDS, PARAM_NAMES, canonical_case, make_case
from .errors import MajorizationError, ParameterError
from .majorization import DEFAULT_ANGLES
from .radius import radius_table, solve_radius
from .sharpness import verify_sharpness

TOL_ENV = "MAJRADIUS_TOL"
TABLE_COLUMNS = ("case", "params", "r_psi", "residual", "r2", "m_source", "sharp_verified")
ALL_PARAMS = ("D", "E", "alpha", "eta", "a", "b")


def fmt_num(x: float) -> str:
    return format(float(x), ".12g")


def rounded(obj):
    """Round every float in a JSON-able structure to 12 significant digits."""
    if isinstance(obj, (bool, np.bool_)) or obj is None:
        return obj if obj is None else bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return float(fmt_num(x)) if math.isfinite(x) else str(x)
    if isinstance(obj, complex):
        return {"re": rounded(obj.real), "im": rounded(obj.imag)}
    if isinstance(obj, dict):
        return {k: rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(rounded(obj), indent=2, ensure_ascii=False) + "\n"


def params_str(params: dict) -> str:
    return ";".join(f"{k}={fmt_num(v)}" for k, v in params.items())


def _csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([row[c] for c in columns])
    return buf.getvalue()


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return 1e-12
    try:
        return float(raw)
    except ValueError:
        raise ParameterError(f"{TOL_ENV}={raw!r} is not a number")


def table_record(row) -> dict:
    res = row.result
    return {
        "case": res.case_id,
        "params": params_str(res.params),
        "r_psi": res.r_psi,
        "residual": res.residual,
        "r2": res.r2,
        "m_source": res.m_source,
        "sharp_verified": row.sharp_verified,
    }


def emit_table(rows, fmt: str = "csv") -> str:
    """Serialize radius-table rows with the fixed column order."""
    if not rows:
        raise ValueError("no rows to emit")
    recs = [table_record(r) for r in rows]
    if fmt == "json":
        return dump_json(recs)
    if fmt == "csv":
        return _csv([_csv_cells(r) for r in recs], TABLE_COLUMNS)
    width = max(len(f"{r['case']}[{r['params']}]") for r in recs)
    lines = [f"{'case':<{width}}  {'r_psi':<15} {'residual':<12} {'r2':<6} sharp"]
    for r in recs:
        lines.append(f"{r['case'] + '[' + r['params'] + ']':<{width}}  "
                     f"{fmt_num(r['r_psi']):<15} {r['residual']:<12.3e} "
                     f"{fmt_num(r['r2']):<6} {r['sharp_verified']}")
    return "\n".join(lines) + "\n"


def _csv_cells(rec: dict) -> dict:
    out = {}
    for k, v in rec.items():
        if isinstance(v, bool):
            out[k] = "true" if v else "false"
        elif isinstance(v, float):
            out[k] = fmt_num(v)
        elif v is None:
            out[k] = ""
        else:
            out[k] = v
    return out


def _add_case_args(p):
    p.add_argument("--case", required=True,
                   help=f"one of: {', '.join(CASE_IDS)} (aliases: exp, i..ix)")
    for name in ALL_PARAMS:
        p.add_argument(f"--{name}", type=float, default=None, dest=name)


def _add_common(p, *, fmt="json", formats=("json", "csv", "text"),
                grid=False, angles=False, nodes=False):
    p.add_argument("--format", choices=formats, default=fmt)
    p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")
    p.add_argument("--tol", type=float, default=None, help=f"root tolerance (env {TOL_ENV})")
    if grid:
        p.add_argument("--grid", type=int, default=2048, help="angles for min |psi| search")
        p.add_argument("--refine-tol", type=float, default=1e-12)
    if angles:
        p.add_argument("--angles", type=int, default=DEFAULT_ANGLES)
    if nodes:
        p.add_argument("--nodes", type=int, default=64, help="base Gauss-Legendre nodes")
        p.add_argument("--quad-tol", type=float, default=1e-10)
        p.add_argument("--max-doublings", type=int, default=6)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majradius", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="majorization radius for one case")
    _add_case_args(p)
    _add_common(p, grid=True)
    p.add_argument("--m-source", choices=("closed_form", "grid", "specialized"),
                   default="closed_form")

    p = sub.add_parser("table", help="radius table for all catalog cases")
    _add_common(p, fmt="csv", grid=True)
    p.add_argument("--samples", type=int, default=10)

    p = sub.add_parser("bb-solve", help="solve psi + z psi'/psi = phi for a catalog phi")
    _add_case_args(p)
    _add_common(p, nodes=True)
    p.add_argument("--z", type=float, default=0.5, help="real part of the evaluation point")
    p.add_argument("--z-imag", type=float, default=0.0)
    p.add_argument("--fd-step", type=float, default=1e-5)
    p.add_argument("--no-radius", action="store_true",
                   help="skip the radius of the convex class built from phi")

    p = sub.add_parser("sharpness", help="sharpness verification for one case")
    _add_case_args(p)
    _add_common(p)
    p.add_argument("--samples", type=int, default=10)

    p = sub.add_parser("verify", help="run every module's invariant suite")
    _add_common(p, fmt="text", formats=("json", "text"), angles=True)
    p.add_argument("--seed", type=int, default=20240101)
    return parser


def _descriptor(args):
    case_id = canonical_case(args.case)
    if case_id == "custom":
        raise ParameterError("custom descriptors are library-only")
    given = {n: getattr(args, n) for n in ALL_PARAMS if getattr(args, n) is not None}
    extra = set(given) - set(PARAM_NAMES[case_id])
    if extra:
        raise ParameterError(
            f"case {case_id!r} takes {list(PARAM_NAMES[case_id]) or 'no parameters'}; "
            f"got {sorted(extra)}")
    return make_case(case_id, **given)


def cmd_radius(args, tol) -> str:
    desc = _descriptor(args)
    res = solve_radius(desc, tol, args.m_source, args.grid, args.refine_tol)
    rec = res.to_dict()
    if args.format == "csv":
        rec["params"] = params_str(res.params)
        return _csv([_csv_cells(rec)], ("case", "params", "r_psi", "residual", "r2", "m_source"))
    if args.format == "text":
        return (f"case      {res.case_id} [{params_str(res.params)}]\n"
                f"r_psi     {fmt_num(res.r_psi)}\n"
                f"residual  {res.residual:.3e}\n"
                f"r2        {fmt_num(res.r2)}\n"
                f"m_source  {res.m_source}\n")
    rec["metadata"] = {"tol": tol, "grid": args.grid, "refine_tol": args.refine_tol,
                       "scan": 512}
    return dump_json(rec)


def cmd_table(args, tol) -> str:
    rows = radius_table(tol=tol, grid_n=args.grid, refine_tol=args.refine_tol,
                        n_samples=args.samples)
    return emit_table(rows, args.format)


def cmd_bb_solve(args, tol) -> str:
    phi = _descriptor(args)
    cfg = QuadratureConfig(args.nodes, args.max_doublings, args.quad_tol)
    sol = BBSolution(phi, cfg)
    z = complex(args.z, args.z_imag)
    rec = {
        "phi_case": phi.case_id,
        "params": dict(phi.params),
        "z": z,
        "phi": complex(phi(z)),
        "q": sol.q_eval(z),
        "psi": sol.psi_eval(z),
        "kphi": sol.kphi_eval(z),
        "kphi_prime": sol.kphi_prime_eval(z),
        "residual": sol.residual(z, args.fd_step) if z != 0 else 0.0,
    }
    if not args.no_radius:
        res = solve_radius(sol.psi_descriptor(), tol, "closed_form", grid_n=256)
        rec["convex_class_radius"] = res.r_psi
    rec["metadata"] = {"nodes": cfg.base_nodes, "max_doublings": cfg.max_doublings,
                       "quad_tol": cfg.tol, "fd_step": args.fd_step, "tol": tol}
    if args.format == "json":
        return dump_json(rec)
    flat = {k: v for k, v in rec.items() if k != "metadata"}
    flat["params"] = params_str(phi.params)
    if args.format == "csv":
        for k, v in list(flat.items()):
            if isinstance(v, complex):
                flat[k + "_re"], flat[k + "_im"] = v.real, v.imag
                del flat[k]
        return _csv([_csv_cells(flat)], tuple(flat))
    lines = []
    for k, v in flat.items():
        if isinstance(v, complex):
            v = f"{fmt_num(v.real)} {'+' if v.imag >= 0 else '-'} {fmt_num(abs(v.imag))}i"
        elif isinstance(v, float):
            v = fmt_num(v)
        lines.append(f"{k:<20}{v}")
    return "\n".join(lines) + "\n"


def cmd_sharpness(args, tol) -> str:
    desc = _descriptor(args)
    res = solve_radius(desc, tol)
    rep = verify_sharpness(desc, res, args.samples)
    if args.format == "json":
        return dump_json(rep.to_dict())
    if args.format == "csv":
        rows = [{"side": "inside", "r": c.r, "value": c.sup_h, "delta": "",
                 "dK_at_1": "", "passed": c.passed} for c in rep.inside_checks]
        rows += [{"side": "outside", "r": c.r, "value": c.K_max, "delta": c.best_delta,
                  "dK_at_1": c.dK_at_1, "passed": c.passed} for c in rep.outside_checks]
        return _csv([_csv_cells(r) for r in rows],
                    ("side", "r", "value", "delta", "dK_at_1", "passed"))
    lines = [f"{rep.case_id} [{params_str(rep.params)}]  r_psi={fmt_num(rep.r_psi)}  "
             f"r2={fmt_num(rep.r2)}",
             f"F(r_psi)={rep.F_at_root:.3e}  dK/ddelta(r_psi)={rep.dK_at_root:.3e}",
             f"{'side':<8}{'r':<16}{'sup h / K max':<18}{'delta':<16}{'dK at 1':<12}result"]
    for c in rep.inside_checks:
        lines.append(f"{'inside':<8}{fmt_num(c.r):<16}{fmt_num(c.sup_h):<18}{'':<16}{'':<12}"
                     f"{'PASS' if c.passed else 'FAIL'}")
    for c in rep.outside_checks:
        lines.append(f"{'outside':<8}{fmt_num(c.r):<16}{fmt_num(c.K_max):<18}"
                     f"{fmt_num(c.best_delta):<16}{c.dK_at_1:<12.3e}"
                     f"{'PASS' if c.passed else 'FAIL'}")
    lines.append(f"verdict: {'SHARP' if rep.verdict else 'NOT VERIFIED'}")
    return "\n".join(lines) + "\n"


def cmd_verify(args, tol):
    from .verify import run_all

    checks = run_all(args.seed, args.angles)
    failed = sum(not c.passed for c in checks)
    if args.format == "json":
        text = dump_json({"checks": [c.to_dict() for c in checks], "failed": failed})
    else:
        text = "".join(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.detail})\n"
                       for c in checks)
        text += f"{len(checks) - failed}/{len(checks)} checks passed\n"
    return text, (1 if failed else 0)


COMMANDS = {
    "radius": cmd_radius,
    "table": cmd_table,
    "bb-solve": cmd_bb_solve,
    "sharpness": cmd_sharpness,
    "verify": cmd_verify,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tol = args.tol if args.tol is not None else _default_tol()
        out = COMMANDS[args.command](args, tol)
    except MajorizationError as exc:
        if exc.exit_code == 2:
            stderr.write(f"majradius: error: {exc}\n")
        else:
            stderr.write(dump_json(exc.to_dict()))
        return exc.exit_code
    except ValueError as exc:
        stderr.write(f"majradius: error: {exc}\n")
        return 2
    code = 0
    if isinstance(out, tuple):
        out, code = out
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return code


def main():
    sys.exit(run())
