"""Command-line front end: build, inspect, export, verify, sweep.

Exit codes: 0 success (verify: all PASS), 1 verify found a FAIL, 2 usage error
or verify finished with skipped rows, 3 domain error, 4 resource cap, 5 I/O.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor

from .cayley import build_cayley_graph, to_dot, to_graphml, to_json_obj
from .config import Caps
from .errors import CapExceeded, DomainError
from .invariants import compute_invariants, report_to_json_obj
from .oracle import growth_scan, growth_to_json_obj, verification_to_json_obj, verify
from .polyring import PolyRing, involutions_bruteforce, involutions_closed_form
from .rings import involutions_zn, involutions_zn_bruteforce

_GRID_RE = re.compile(r"^\s*(\d+)\.\.(\d+)\s*[xX]\s*(\d+)\.\.(\d+)\s*$")


def _write_text(path: str | None, data: str) -> None:
    """stdout when no path; otherwise atomic tmp-file-then-replace."""
    if path is None or path == "-":
        sys.stdout.write(data)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".invcayley-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(value) -> str:
    if value is None:
        return "-"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_inv(args, caps: Caps) -> int:
    ring = PolyRing(args.n, args.degree)
    closed = involutions_closed_form(ring)
    lines = []
    if ring.d == 0:
        values = " ".join(str(f[0]) for f in closed)
        lines.append(f"{values} (count {len(closed)})")
    else:
        lines.extend(ring.render(f) for f in closed)
        lines.append(f"(count {len(closed)})")
    if args.brute:
        if ring.d == 0:
            brute = involutions_zn_bruteforce(args.n, cap=caps.zn_brute_force)
            agree = tuple(f[0] for f in closed) == brute
        else:
            brute = involutions_bruteforce(ring, cap=caps.brute_force)
            agree = closed == brute
        lines.append(f"agreement: {'true' if agree else 'false'}")
    print("\n".join(lines))
    return 0


def cmd_build(args, caps: Caps) -> int:
    ring = PolyRing(args.n, args.degree)
    g = build_cayley_graph(ring, caps=caps)
    power_series = args.ring == "zn-power-series"
    if args.format == "dot":
        data = to_dot(g)
    elif args.format == "json":
        data = _json_text(to_json_obj(g, power_series=power_series))
    else:
        data = to_graphml(g)
    _write_text(args.out, data)
    return 0


def cmd_invariants(args, caps: Caps) -> int:
    ring = PolyRing(args.n, args.degree)
    g = build_cayley_graph(ring, caps=caps)
    rep = compute_invariants(g, caps=caps, power_series=args.ring == "zn-power-series")
    _write_text(args.out, _json_text(report_to_json_obj(rep)))
    return 0


def _verify_cell(task) -> dict:
    n, d, caps, power_series = task
    rep = verify(PolyRing(n, d), caps=caps, power_series=power_series)
    return verification_to_json_obj(rep)


def _print_verification(obj: dict) -> None:
    spec = obj["spec"]
    head = f"n={spec['n']} d={spec['d']}"
    if spec.get("family") == "power-series":
        head += " (power-series window)"
    print(head)
    for r in obj["results"]:
        line = (
            f"  {r['invariant']:<19} {r['status']:<8}"
            f" predicted={_fmt(r['predicted'])} computed={_fmt(r['computed'])}"
        )
        if r.get("note"):
            line += f"  [{r['note']}]"
        print(line)
    if "k33_witness" in obj:
        a, b = obj["k33_witness"]
        print(f"  k33_witness: {a} x {b}")
    print(f"  overall: {obj['overall']}")


def cmd_verify(args, caps: Caps) -> int:
    power_series = args.ring == "zn-power-series"
    if args.grid is not None:
        m = _GRID_RE.match(args.grid)
        if m is None:
            raise DomainError(f"grid must look like '2..12 x 0..2', got {args.grid!r}")
        n_lo, n_hi, d_lo, d_hi = map(int, m.groups())
        cells = [
            (n, d, caps, power_series)
            for n in range(n_lo, n_hi + 1)
            for d in range(d_lo, d_hi + 1)
        ]
    else:
        if args.n is None:
            raise DomainError("verify needs --n or --grid")
        cells = [(args.n, args.degree, caps, power_series)]

    if args.jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_cell, cells))
    else:
        reports = [_verify_cell(c) for c in cells]

    for obj in reports:
        _print_verification(obj)
    statuses = [obj["overall"] for obj in reports]
    if any(s == "FAIL" for s in statuses):
        overall, code = "FAIL", 1
    elif any(s == "PASS_WITH_SKIPS" for s in statuses):
        overall, code = "PASS_WITH_SKIPS", 2
    else:
        overall, code = "PASS", 0
    if len(reports) > 1:
        print(f"grid overall: {overall} ({len(reports)} specs)")
    if args.report is not None:
        payload = reports[0] if len(reports) == 1 else {"overall": overall, "reports": reports}
        _write_text(args.report, _json_text(payload))
    return code


def cmd_scan(args, caps: Caps) -> int:
    rows = growth_scan(args.n, args.dmax, caps=caps)
    if args.json:
        _write_text(args.out, _json_text(growth_to_json_obj(args.n, rows)))
        return 0
    lines = ["d\tvertices\tcomponents\tinvolutions\talpha_lower_bound"]
    for r in rows:
        lines.append(
            f"{r.d}\t{r.vertex_count}\t{r.component_count}\t{r.inv_count}\t{r.alpha_lower_bound}"
        )
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _add_ring_args(sub: argparse.ArgumentParser, *, degree: bool = True) -> None:
    sub.add_argument("--n", type=int, required=True, help="base modulus (n >= 2)")
    if degree:
        sub.add_argument(
            "--degree", type=int, default=0, help="polynomial degree bound d (default 0)"
        )
    sub.add_argument(
        "--ring",
        choices=("zn-poly", "zn-power-series"),
        default="zn-poly",
        help="ring family label; both route to the same truncated window",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invcayley",
        description="Cayley graphs on Z_n[x] windows whose connection set is the involutions",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_inv = subs.add_parser("inv", help="list involutions (closed form)")
    _add_ring_args(p_inv)
    p_inv.add_argument("--brute", action="store_true", help="cross-check against brute force")
    p_inv.set_defaults(func=cmd_inv)

    p_build = subs.add_parser("build", help="build the graph and export it")
    _add_ring_args(p_build)
    p_build.add_argument("--format", choices=("dot", "json", "graphml"), default="dot")
    p_build.add_argument("--out", default=None, help="output path (default stdout)")
    p_build.set_defaults(func=cmd_build)

    p_invar = subs.add_parser("invariants", help="compute the invariant report (JSON)")
    _add_ring_args(p_invar)
    p_invar.add_argument("--out", default=None, help="output path (default stdout)")
    p_invar.set_defaults(func=cmd_invariants)

    p_verify = subs.add_parser("verify", help="compare predictions against computed invariants")
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--degree", type=int, default=0)
    p_verify.add_argument("--grid", default=None, help="sweep, e.g. '2..12 x 0..2'")
    p_verify.add_argument("--report", default=None, help="write a JSON report here")
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel workers for sweeps")
    p_verify.add_argument(
        "--ring", choices=("zn-poly", "zn-power-series"), default="zn-poly"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_scan = subs.add_parser("scan", help="growth table over d = 0..dmax")
    _add_ring_args(p_scan, degree=False)
    p_scan.add_argument("--dmax", type=int, required=True)
    p_scan.add_argument("--json", action="store_true")
    p_scan.add_argument("--out", default=None, help="output path (default stdout)")
    p_scan.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    caps = Caps.from_env()
    try:
        return args.func(args, caps)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CapExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 5


def run() -> None:
    raise SystemExit(main())
