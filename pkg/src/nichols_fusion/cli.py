"""Command-line frontend.

Commands
    fusion     full fusion table for all (r1, nu1, r2, nu2); exit 2 if the
               closed-form and brute-force paths ever disagree
    decompose  decomposition of the 1- or 2-vertex space
    classify   module generated from a coinvariant (or the whole table)
    loop       tables of loop eigenvalues lambda and nilpotent coefficients mu
    verify     run a verification suite, one pass/fail line per check

Exit codes: 0 success, 1 usage error, 2 verification failure.
Output is deterministic (sorted keys, fixed float formatting); results are
cached as JSON keyed by (command, p, options, schema version) under
--cache-dir, NICHOLS_FUSION_CACHE_DIR, or ~/.cache/nichols-fusion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .cyclo import cyclotomic_field
from . import classify as cl
from . import loop as lp
from .fusion import fuse_simples
from .suites import run_suite, SUITES

SCHEMA_VERSION = "nichols-fusion/1"
DEFAULT_MAX_P = 12


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1 (argparse defaults to 2, which we reserve for
    # verification failures)
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def scalar_json(x) -> dict:
    nums, den = x.coeffs()
    approx = x.evalf()
    return {
        "zeta_coeffs": nums,
        "den": den,
        "approx": [f"{approx.real:.12g}", f"{approx.imag:.12g}"],
    }


def _payload_fusion(p: int, nu_mod: int) -> dict:
    table = []
    ok = True
    nus = range(nu_mod)
    for r1 in range(1, p + 1):
        for nu1 in nus:
            for r2 in range(1, p + 1):
                for nu2 in nus:
                    try:
                        res = fuse_simples(p, r1, nu1, r2, nu2)
                        summands = [
                            {"kind": d.kind, "r": d.r, "nu": d.nu % nu_mod}
                            for d in res.summands
                        ]
                        summands.sort(key=lambda d: (d["kind"], d["r"], d["nu"]))
                        row = {"r1": r1, "nu1": nu1, "r2": r2, "nu2": nu2, "summands": summands}
                    except AssertionError as exc:
                        ok = False
                        row = {"r1": r1, "nu1": nu1, "r2": r2, "nu2": nu2, "error": str(exc)}
                    table.append(row)
    return {"schema": SCHEMA_VERSION, "command": "fusion", "p": p, "nu_mod": nu_mod,
            "ok": ok, "table": table}


def _payload_decompose(p: int, vertices: int) -> dict:
    counts, dim = cl.decompose_space(p, vertices)
    summands = [
        {"kind": kind, "r": r, "mult": mult}
        for (kind, r), mult in sorted(counts.items())
    ]
    checks = cl.decompose_checks(p)
    return {
        "schema": SCHEMA_VERSION,
        "command": "decompose",
        "p": p,
        "vertices": vertices,
        "summands": summands,
        "dimension": dim,
        "ok": bool(checks["one_vertex_ok"] and checks["two_vertex_ok"]),
    }


def _desc_json(d: cl.ModuleDescriptor) -> dict:
    return {"kind": d.kind, "r": d.r, "nu": d.nu % 4, "nu_raw": d.nu}


def _payload_classify(p: int, a, b, t) -> dict:
    if a is not None and b is not None and t is not None:
        cell = _desc_json(cl.classify_coinvariant(p, a, b, t))
        return {"schema": SCHEMA_VERSION, "command": "classify", "p": p,
                "a": a, "b": b, "t": t, "ok": True, **cell}
    grid = cl.classification_grid(p)
    table = [
        {"a": a0, "b": b0, "t": t0, **_desc_json(d)}
        for (a0, b0, t0), d in sorted(grid.items())
    ]
    return {"schema": SCHEMA_VERSION, "command": "classify", "p": p, "ok": True,
            "table": table}


def _payload_loop(p: int, nu_mod: int) -> dict:
    K = cyclotomic_field(p)
    rows = []
    for rp in range(1, p + 1):
        for nup in range(nu_mod):
            for r in range(1, p + 1):
                for nu in range(nu_mod):
                    row = {
                        "rp": rp,
                        "nup": nup,
                        "r": r,
                        "nu": nu,
                        "lambda": scalar_json(lp.lambda_closed(K, rp, nup, r, nu)),
                    }
                    if rp <= p - 1:
                        row["mu"] = scalar_json(lp.mu_closed(K, rp, nup, r, nu))
                    rows.append(row)
    return {"schema": SCHEMA_VERSION, "command": "loop", "p": p, "nu_mod": nu_mod,
            "ok": True, "table": rows}


def _payload_verify(p: int, suite: str) -> dict:
    results = run_suite(p, suite)
    checks = [
        {"name": c.name, "ok": c.ok, "count": c.count, "detail": c.detail}
        for c in results
    ]
    return {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "p": p,
        "suite": suite,
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }


def _render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"
    if fmt == "csv":
        rows = payload.get("table") or payload.get("summands") or payload.get("checks") or [payload]
        if not rows:
            return ""
        cols = sorted({k for row in rows for k in row})
        lines = [",".join(cols)]
        for row in rows:
            lines.append(",".join(_csv_cell(row.get(c)) for c in cols))
        return "\n".join(lines) + "\n"
    if fmt == "pretty":
        return _render_pretty(payload)
    raise CliError(f"unknown format {fmt!r}")


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, (dict, list)):
        return '"' + json.dumps(v, sort_keys=True).replace('"', '""') + '"'
    return str(v)


def _render_pretty(payload: dict) -> str:
    cmd = payload["command"]
    lines = [f"# {cmd} p={payload['p']} ({payload['schema']})"]
    if cmd == "verify":
        for c in payload["checks"]:
            status = "PASS" if c["ok"] else "FAIL"
            extra = f"  [{c['detail']}]" if c["detail"] else ""
            lines.append(f"{status} {c['name']} (checks={c['count']}){extra}")
        good = sum(1 for c in payload["checks"] if c["ok"])
        lines.append(f"{good}/{len(payload['checks'])} checks passed")
    elif cmd == "fusion":
        for row in payload["table"]:
            if "error" in row:
                rhs = f"DISAGREE: {row['error']}"
            else:
                rhs = " + ".join(
                    f"{d['kind']}({d['r']})_{d['nu']}" for d in row["summands"]
                )
            lines.append(
                f"X({row['r1']})_{row['nu1']} x X({row['r2']})_{row['nu2']} = {rhs}"
            )
    elif cmd == "decompose":
        for s in payload["summands"]:
            lines.append(f"{s['mult']} x {s['kind']}[{s['r']}]")
        lines.append(f"total dimension {payload['dimension']}")
    elif cmd == "classify":
        rows = payload.get("table") or [payload]
        for row in rows:
            lines.append(
                f"(a={row['a']}, b={row['b']}, t={row['t']}) -> "
                f"{row['kind']}({row['r']})_{row['nu_raw']}"
            )
    elif cmd == "loop":
        for row in payload["table"]:
            mu = row.get("mu")
            mu_txt = f"  mu={_scalar_txt(mu)}" if mu else ""
            lines.append(
                f"lambda(Y=X({row['rp']})_{row['nup']}; Z=X({row['r']})_{row['nu']}) = "
                f"{_scalar_txt(row['lambda'])}{mu_txt}"
            )
    return "\n".join(lines) + "\n"


def _scalar_txt(s: dict) -> str:
    return f"{s['approx'][0]}{'+' if not s['approx'][1].startswith('-') else ''}{s['approx'][1]}j"


def _cache_dir(args) -> Path | None:
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get("NICHOLS_FUSION_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "nichols-fusion"


def _cached(args, key: str, build):
    if args.no_cache:
        return build()
    cdir = _cache_dir(args)
    path = cdir / f"{key}.json"
    if path.exists():
        try:
            stored = json.loads(path.read_text())
            if stored.get("schema") == SCHEMA_VERSION:
                return stored
        except (ValueError, OSError):
            pass
    payload = build()
    try:
        cdir.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, sort_keys=True))
    except OSError:
        pass
    return payload


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nichols-fusion", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--p", type=int, required=True, help="the parameter p >= 2")
        sp.add_argument("--max-p", type=int, default=DEFAULT_MAX_P,
                        help="refuse p above this cap (runtime guard)")
        sp.add_argument("--format", choices=("json", "csv", "pretty"), default=None,
                        help="default: pretty for verify, json otherwise")
        sp.add_argument("--out", help="also write the report to this path")
        sp.add_argument("--cache-dir", help="cache directory override")
        sp.add_argument("--no-cache", action="store_true")

    sp = sub.add_parser("fusion", help="fusion table of simple modules")
    common(sp)
    sp.add_argument("--nu-mod", type=int, choices=(2, 4), default=2)

    sp = sub.add_parser("decompose", help="decompose the 1- or 2-vertex space")
    common(sp)
    sp.add_argument("--vertices", type=int, choices=(1, 2), default=2)

    sp = sub.add_parser("classify", help="classify coinvariants")
    common(sp)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--t", type=int)

    sp = sub.add_parser("loop", help="loop eigenvalue tables")
    common(sp)
    sp.add_argument("--nu-mod", type=int, choices=(2, 4), default=2)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument("--suite", default="all", choices=tuple(SUITES) + ("all",))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.p < 2:
        parser.error("p must be at least 2")
    if args.p > args.max_p:
        parser.error(f"p={args.p} exceeds the cap {args.max_p} (raise with --max-p)")

    if args.command == "fusion":
        key = f"fusion-p{args.p}-nu{args.nu_mod}"
        payload = _cached(args, key, lambda: _payload_fusion(args.p, args.nu_mod))
    elif args.command == "decompose":
        key = f"decompose-p{args.p}-v{args.vertices}"
        payload = _cached(args, key, lambda: _payload_decompose(args.p, args.vertices))
    elif args.command == "classify":
        given = [x is not None for x in (args.a, args.b, args.t)]
        if any(given) and not all(given):
            parser.error("--a, --b, --t must be given together")
        if args.t is not None and not 0 <= args.t <= args.p - 1:
            parser.error("t must lie in [0, p-1]")
        if args.a is None:
            key = f"classify-p{args.p}-table"
            payload = _cached(args, key, lambda: _payload_classify(args.p, None, None, None))
        else:
            key = f"classify-p{args.p}-a{args.a}-b{args.b}-t{args.t}"
            payload = _cached(args, key, lambda: _payload_classify(args.p, args.a, args.b, args.t))
    elif args.command == "loop":
        key = f"loop-p{args.p}-nu{args.nu_mod}"
        payload = _cached(args, key, lambda: _payload_loop(args.p, args.nu_mod))
    elif args.command == "verify":
        key = f"verify-p{args.p}-{args.suite}"
        payload = _cached(args, key, lambda: _payload_verify(args.p, args.suite))
    else:  # pragma: no cover - argparse enforces the choices
        parser.error(f"unknown command {args.command}")

    fmt = args.format or ("pretty" if args.command == "verify" else "json")
    text = _render(payload, fmt)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return 0 if payload.get("ok", True) else 2


if __name__ == "__main__":
    sys.exit(main())
