"""Command-line front end.  Reports go to stdout (or --out) as JSON, a short
summary goes to stderr.  Exit status: 0 success, 1 verification failure,
2 usage or input error."""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from .cyclo import gauss_gamma
from .errors import WRTError
from .laplace import andrews_specialized_check, ev_Q, fourier_lhs, laplace_transform, \
    qbk_product_form
from .qkit import habiro_C_from_jones, jones_table_from_json
from .suites import SUITES, random_zpoly, run_suite
from .unify import covers_order, ev_unified, ohtsuki_congruence, unified_from_spec
from .wrt import LensPiece, ManifoldSpec, lens_tau_prime_closed, tau, tau_prime, tau_prime_lens

COMMANDS = ("lens", "tau", "unified", "qbk-verify", "andrews-verify", "laplace-verify",
            "ohtsuki", "habiro-coeffs", "suite")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output_path: str | None = None
    jobs: int = 1


def _roots(params: dict) -> list[int]:
    if params.get("roots"):
        try:
            out = [int(x) for x in params["roots"].split(",") if x.strip()]
        except ValueError as exc:
            raise UsageError(f"bad --roots value {params['roots']!r}") from exc
    elif params.get("root") is not None:
        out = [params["root"]]
    else:
        raise UsageError("need --root or --roots")
    for r in out:
        if r < 1 or r % 2 == 0:
            raise UsageError(f"root orders must be odd and positive, got {r}")
    return out


def _need(params: dict, *names: str) -> None:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _manifold(params: dict) -> ManifoldSpec:
    if params.get("manifold"):
        try:
            return ManifoldSpec.from_json(_load_json(params["manifold"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed manifold file: {exc}") from exc
    _need(params, "b", "a")
    return ManifoldSpec([LensPiece(params["b"], params["a"], params.get("d") or 1)])


# ---------------------------------------------------------------------------
# commands


def cmd_lens(p: dict) -> tuple[dict, bool]:
    _need(p, "b", "a")
    d = p.get("d") or 1
    mode = p.get("mode") or "both"
    rows, ok = [], True
    for r in _roots(p):
        row: dict = {"b": p["b"], "a": p["a"], "d": d, "r": r}
        if mode in ("closed", "both"):
            row["closed"] = lens_tau_prime_closed(p["b"], p["a"], d, r).to_json()
        if mode in ("brute", "both"):
            row["brute"] = tau_prime_lens(p["b"], p["a"], d, r).to_json()
        if mode == "both":
            row["equal"] = row["closed"] == row["brute"]
            ok = ok and row["equal"]
        rows.append(row)
    return {"command": "lens", "results": rows}, ok


def cmd_tau(p: dict) -> tuple[dict, bool]:
    m = _manifold(p)
    rows = [{"r": r, "tau": tau(m, r).to_json(), "tauPrime": tau_prime(m, r).to_json()}
            for r in _roots(p)]
    return {"command": "tau", "manifold": m.to_json(), "results": rows}, True


def cmd_unified(p: dict) -> tuple[dict, bool]:
    m = _manifold(p)
    inv = unified_from_spec(m)
    rows, ok = [], True
    roots = _roots(p) if (p.get("root") is not None or p.get("roots")) else []
    for r in roots:
        if not covers_order(inv, r):
            rows.append({"r": r, "skipped": "sector not carried by this invariant"})
            continue
        got = ev_unified(inv, r)
        want = tau_prime(m, r)
        rows.append({"r": r, "ev": got.to_json(), "tauPrime": want.to_json(), "equal": got == want})
        ok = ok and got == want
    return {"command": "unified", "manifold": m.to_json(), "invariant": inv.to_json(),
            "evaluations": rows}, ok


def cmd_qbk(p: dict) -> tuple[dict, bool]:
    _need(p, "b", "k")
    rows, ok = [], True
    for r in _roots(p):
        lhs, rhs = qbk_product_form(p["b"], p["k"], r)
        rows.append({"b": p["b"], "k": p["k"], "r": r, "ev": ev_Q(p["b"], p["k"], r).to_json(),
                     "lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": lhs == rhs})
        ok = ok and lhs == rhs
    return {"command": "qbk-verify", "results": rows}, ok


def cmd_andrews(p: dict) -> tuple[dict, bool]:
    _need(p, "b", "k")
    j = p.get("j") or 0
    rep = andrews_specialized_check(p["b"], j, p["k"])
    out = {"command": "andrews-verify", "b": p["b"], "j": j, "k": p["k"],
           "identity": rep.identity, "productForm": rep.product_form,
           "rootFree": rep.root_free, "lattice": rep.lattice, "equal": rep.ok}
    return out, rep.ok


def cmd_laplace(p: dict) -> tuple[dict, bool]:
    _need(p, "b")
    rng = random.Random(p.get("seed") or 0)
    f = random_zpoly(rng)
    rows, ok = [], True
    for r in _roots(p):
        lhs = fourier_lhs(f, p["b"], r)
        rhs = gauss_gamma(p["b"], r) * laplace_transform(f, -p["b"]).evaluate(r)
        rows.append({"b": p["b"], "r": r, "lhs": lhs.to_json(), "rhs": rhs.to_json(),
                     "equal": lhs == rhs})
        ok = ok and lhs == rhs
    poly = {str(a): c.to_json() for a, c in sorted(f.items())}
    return {"command": "laplace-verify", "f": poly, "results": rows}, ok


def cmd_ohtsuki(p: dict) -> tuple[dict, bool]:
    m = _manifold(p)
    r0 = p.get("at") or 1
    K = p.get("order") or 8
    primes = None
    if p.get("primes"):
        try:
            primes = [int(x) for x in p["primes"].split(",") if x.strip()]
        except ValueError as exc:
            raise UsageError(f"bad --primes value {p['primes']!r}") from exc
    rep = ohtsuki_congruence(m, r0, primes, K)
    return rep.to_json(), rep.ok


def cmd_habiro(p: dict) -> tuple[dict, bool]:
    _need(p, "jones")
    try:
        values, arity, colors = jones_table_from_json(_load_json(p["jones"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed Jones table: {exc}") from exc
    N = p.get("order") or max(max(n) for n in values)
    table = habiro_C_from_jones(values, arity, N, colors)
    return {"command": "habiro-coeffs", "table": table.to_json()}, True


def cmd_suite(p: dict, jobs: int) -> tuple[dict, bool]:
    name = p.get("name") or "all"
    if name not in SUITES + ("all",):
        raise UsageError(f"unknown suite {name!r}")
    results = run_suite(name, seed=p.get("seed") or 0, jobs=jobs)
    return {"command": "suite", "name": name, "seed": p.get("seed") or 0,
            "results": [r.to_json() for r in results]}, all(r.ok for r in results)


HANDLERS = {
    "lens": cmd_lens, "tau": cmd_tau, "unified": cmd_unified, "qbk-verify": cmd_qbk,
    "andrews-verify": cmd_andrews, "laplace-verify": cmd_laplace, "ohtsuki": cmd_ohtsuki,
    "habiro-coeffs": cmd_habiro,
}


def run(config: RunConfig) -> tuple[int, dict]:
    """Execute one command; returns (exit status, report)."""
    try:
        if config.command == "suite":
            report, ok = cmd_suite(config.params, config.jobs)
        elif config.command in HANDLERS:
            report, ok = HANDLERS[config.command](config.params)
        else:
            raise UsageError(f"unknown command {config.command!r}")
    except UsageError as exc:
        return 2, {"command": config.command, "error": str(exc)}
    except WRTError as exc:
        return 2, {"command": config.command, "error": f"{type(exc).__name__}: {exc}"}
    return (0 if ok else 1), report


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="unified-wrt",
                                 description="Exact SO(3) WRT invariants and unified invariants.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("name", nargs="?", help="suite name for the suite command")
    ap.add_argument("--b", type=int)
    ap.add_argument("--a", type=int)
    ap.add_argument("--d", type=int)
    ap.add_argument("--k", type=int)
    ap.add_argument("--j", type=int)
    ap.add_argument("--root", type=int)
    ap.add_argument("--roots", help="comma-separated odd orders")
    ap.add_argument("--manifold", help="ManifoldSpec JSON file")
    ap.add_argument("--jones", help="colored Jones table JSON file")
    ap.add_argument("--mode", choices=("brute", "closed", "both"))
    ap.add_argument("--at", type=int, help="Taylor center order r0")
    ap.add_argument("--order", type=int, help="Taylor depth, or Jones color bound")
    ap.add_argument("--primes", help="comma-separated primes")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="write the JSON report here instead of stdout")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "out", "jobs")}
    config = RunConfig(args.command, params, args.out, max(1, args.jobs))
    start = time.perf_counter()
    status, report = run(config)
    text = json.dumps(report, indent=2, sort_keys=True)
    if config.output_path:
        with open(config.output_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    verdict = {0: "ok", 1: "FAILED", 2: "error"}[status]
    print(f"{config.command}: {verdict} ({time.perf_counter() - start:.1f}s)", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
