"""Command-line front end.

Every subcommand prints either a JSON document (``--format json``) or a plain
text table. JSON documents share one envelope::

    {"schema_version": 1, "command": ..., "metadata": {...}, "result": {...}}

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from collections import Counter
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__
from .errors import QRSTError
from .growth_engine import (
    MAX_EXACT_N,
    Permutation,
    backward_exact,
    enumerate_growths_brackets,
    forward_exact,
    sample_backward,
    sample_forward,
)
from .hook_walk import absorption_exact, canonical_start, walk_sample
from .local_rules import FORMULATIONS, SPECIALIZATIONS, evaluate_kernel, kernel, kernel_col, kernel_specialized
from .partitions import Partition, StandardTableau, ups
from .qt_algebra import BracketProduct, RationalQT
from .sampling import GENERATOR, ExactSampler, check_parameters
from .verify import CHECKS, SIZE_ARGUMENT, run_all, run_check

SCHEMA_VERSION = 1
EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2

_RATIONAL = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


class UsageError(Exception):
    """Bad flag value detected after parsing; reported with exit code 2."""


# -- argument types ----------------------------------------------------------------------


def rational_arg(text: str) -> Fraction:
    """Parse ``"p/r"`` or an integer; decimals are refused so values stay exact."""
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected an exact rational like 1/2, got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except (ValueError, QRSTError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def permutation_arg(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except (ValueError, QRSTError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def tableau_arg(text: str) -> StandardTableau:
    try:
        return StandardTableau.parse(text)
    except (ValueError, QRSTError) as exc:
        raise argparse.ArgumentTypeError(f"{exc} (rows separated by ';', entries by ',')") from None


def cell_arg(text: str) -> tuple[int, int]:
    parts = text.replace(" ", "").split(",")
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise argparse.ArgumentTypeError(f"expected x,y, got {text!r}")
    return int(parts[0]), int(parts[1])


def _env_int(name: str) -> int | None:
    value = os.environ.get(name)
    return int(value) if value else None


# -- rendering ----------------------------------------------------------------------------


def fmt_rational(v: RationalQT | Fraction, factored: BracketProduct | None = None) -> dict[str, Any]:
    if isinstance(v, Fraction):
        return {"value": str(v)}
    out: dict[str, Any] = {"expr": str(v), "poly": v.to_json_obj()}
    if factored is not None:
        out["factored"] = str(factored)
    return out


def _display(v: dict[str, Any]) -> str:
    return v.get("value") or v.get("factored") or v["expr"]


@dataclass
class RunMetadata:
    """Provenance recorded with every JSON document."""

    argv: list[str]
    version: str = __version__
    seed: int | None = None
    q: str | None = None
    t: str | None = None
    generator: str | None = None
    timing: dict[str, float] = field(default_factory=dict)

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "argv": self.argv,
            "version": self.version,
            "seed": self.seed,
            "q": self.q,
            "t": self.t,
            "generator": self.generator,
            "timing": self.timing,
        }


@dataclass
class Outcome:
    result: dict[str, Any]
    table: list[str]
    code: int = EXIT_OK


def _params(meta: RunMetadata, args: argparse.Namespace, required: bool) -> tuple[Fraction, Fraction] | None:
    qv, tv = getattr(args, "q", None), getattr(args, "t", None)
    if qv is None and tv is None:
        if required:
            raise UsageError("--q and --t are required here")
        return None
    if qv is None or tv is None:
        raise UsageError("--q and --t must be given together")
    meta.q, meta.t = str(qv), str(tv)
    return qv, tv


def _sampling_params(meta: RunMetadata, args: argparse.Namespace) -> tuple[Fraction, Fraction, ExactSampler]:
    qv, tv = _params(meta, args, required=True)  # type: ignore[misc]
    try:
        check_parameters(qv, tv)
    except QRSTError as exc:
        raise UsageError(f"--q/--t: {exc}") from None
    if args.seed is None:
        raise UsageError("--seed is required when sampling")
    if args.count < 1:
        raise UsageError("--count must be positive")
    meta.seed, meta.generator = args.seed, GENERATOR
    return qv, tv, ExactSampler(args.seed)


def _numeric(v: RationalQT, point: tuple[Fraction, Fraction] | None) -> dict[str, Any]:
    if point is None:
        return {}
    return {"at_point": str(Fraction(v.evaluate(*point)))}


# -- subcommands -----------------------------------------------------------------------------


def cmd_insert(args: argparse.Namespace, meta: RunMetadata) -> Outcome:
    sigma: Permutation = args.perm
    if args.sample:
        qv, tv, sampler = _sampling_params(meta, args)
        counts = Counter(
            (str(p), str(qq)) for p, qq in (sample_forward(sigma, qv, tv, sampler, args.variant) for _ in range(args.count))
        )
        rows = [{"P": p, "Q": qq, "count": c} for (p, qq), c in sorted(counts.items())]
        table = [f"{r['P']:>16}  {r['Q']:>16}  {r['count']}" for r in rows]
        return Outcome({"permutation": str(sigma), "variant": args.variant, "count": args.count, "samples": rows}, table)
    point = _params(meta, args, required=False)
    if args.variant != "row":
        raise UsageError("--variant column is only available with --sample")
    dist = forward_exact(sigma, order=args.order)
    rows = []
    for (p, qq), v in sorted(dist.items(), key=lambda kv: (kv[0][0].rows(), kv[0][1].rows())):
        rows.append({"P": str(p), "Q": str(qq), "probability": {**fmt_rational(v), **_numeric(v, point)}})
    table = [f"{r['P']:>16}  {r['Q']:>16}  {r['probability'].get('at_point', r['probability']['expr'])}" for r in rows]
    return Outcome({"permutation": str(sigma), "order": args.order, "distribution": rows}, table)


def cmd_backward(args: argparse.Namespace, meta: RunMetadata) -> Outcome:
    p, qq = args.P, args.Q
    if p.shape != qq.shape:
        raise UsageError(f"--P and --Q have different shapes {p.shape} and {qq.shape}")
    if args.sample:
        qv, tv, sampler = _sampling_params(meta, args)
        counts = Counter(str(sample_backward(p, qq, qv, tv, sampler, args.variant)) for _ in range(args.count))
        rows = [{"permutation": s, "count": c} for s, c in sorted(counts.items())]
        return Outcome(
            {"P": str(p), "Q": str(qq), "variant": args.variant, "count": args.count, "samples": rows},
            [f"{r['permutation']:>12}  {r['count']}" for r in rows],
        )
    point = _params(meta, args, required=False)
    dist = backward_exact(p, qq)
    rows = [
        {"permutation": str(s), "probability": {**fmt_rational(v), **_numeric(v, point)}}
        for s, v in sorted(dist.items())
        if not v.is_zero()
    ]
    table = [f"{r['permutation']:>12}  {r['probability'].get('at_point', r['probability']['expr'])}" for r in rows]
    return Outcome({"P": str(p), "Q": str(qq), "distribution": rows}, table)


def cmd_probs(args: argparse.Namespace, meta: RunMetadata) -> Outcome:
    lam: Partition = args.shape
    point = _params(meta, args, required=False)
    if args.spec and point:
        raise UsageError("--spec and --q/--t cannot be combined")
    if args.spec:
        k = kernel_specialized(lam, args.spec)
        source = f"specialization {args.spec}"
    elif args.column:
        k = kernel_col(lam)
        source = "column"
    else:
        k = kernel(lam, args.formulation)
        source = f"formulation {args.formulation}"
    if point is not None:
        try:
            k = evaluate_kernel(lam, *point, column=args.column)
        except QRSTError as exc:
            raise UsageError(f"--q/--t: {exc}") from None
    d = len(ups(lam)) - 1
    brackets = k.brackets

    def matrix(which: str) -> list[list[dict[str, Any]]]:
        entries = getattr(k, which)
        factored = brackets.get(which, {})
        return [[fmt_rational(entries[(r, s)], factored.get((r, s))) for s in range(d + 1)] for r in range(d + 1)]

    forward, backward = matrix("forward"), matrix("backward")
    result = {
        "shape": str(lam),
        "source": source,
        "rows": [str(mu) for mu in k.dstar],
        "columns": [str(nu) for nu in k.ups],
        "forward": forward,
        "backward": backward,
    }
    table = [f"shape {lam} ({source}); rows mu in D*(lam), columns nu in U(lam)"]
    for name, m in (("forward", forward), ("backward", backward)):
        table.append(f"{name}:")
        for r, row in enumerate(m):
            table.append(f"  {r}: " + "  |  ".join(_display(v) for v in row))
    return Outcome(result, table)


def cmd_hookwalk(args: argparse.Namespace, meta: RunMetadata) -> Outcome:
    lam: Partition = args.shape
    start = args.start or tuple(canonical_start(lam))
    try:
        if args.sample:
            qv, tv, sampler = _sampling_params(meta, args)
            counts = Counter(str(walk_sample(lam, start, qv, tv, sampler)) for _ in range(args.count))
            rows = [{"nu": nu, "count": c} for nu, c in sorted(counts.items())]
            return Outcome(
                {"shape": str(lam), "start": list(start), "count": args.count, "samples": rows},
                [f"{r['nu']:>12}  {r['count']}" for r in rows],
            )
        point = _params(meta, args, required=False)
        dist = absorption_exact(lam, start)
    except QRSTError as exc:
        raise UsageError(f"--start: {exc}") from None
    rows = [{"nu": str(nu), "probability": {**fmt_rational(v), **_numeric(v, point)}} for nu, v in dist.items()]
    table = [f"{r['nu']:>12}  {r['probability'].get('at_point', r['probability']['expr'])}" for r in rows]
    return Outcome({"shape": str(lam), "start": list(start), "absorption": rows}, table)


def cmd_verify(args: argparse.Namespace, meta: RunMetadata) -> Outcome:
    max_size = args.max_size if args.max_size is not None else _env_int("QRST_MAX_SIZE")
    n = args.n if args.n is not None else _env_int("QRST_VERIFY_N")
    try:
        if args.check == "all":
            reports = run_all(max_size, n)
        else:
            size = max_size if SIZE_ARGUMENT[args.check] == "max_n" else n
            reports = [run_check(args.check, size)]
    except QRSTError as exc:
        raise UsageError(f"--max-size/--n: {exc}") from None
    ok = all(r.passed for r in reports)
    table = [f"{r.status.upper():4}  {r.name:20} {r.instances:6} assertions  [{r.range}]" for r in reports]
    table += [f"      witness: {r.witness}" for r in reports if not r.passed]
    result = {"passed": ok, "reports": [r.to_json_obj() for r in reports]}
    return Outcome(result, table, EXIT_OK if ok else EXIT_CHECK_FAILED)


def cmd_growths(args: argparse.Namespace, meta: RunMetadata) -> Outcome:
    sigma: Permutation = args.perm
    point = _params(meta, args, required=False)
    rows, table = [], []
    for g, w in enumerate_growths_brackets(sigma, args.order, args.bound):
        v = w.to_rq()
        rows.append(
            {
                "P": str(g.p_tableau()),
                "Q": str(g.q_tableau()),
                "diagram": g.to_text().splitlines(),
                "probability": {**fmt_rational(v, w), **_numeric(v, point)},
            }
        )
        table += [f"P={rows[-1]['P']}  Q={rows[-1]['Q']}  p={_display(rows[-1]['probability'])}", g.to_text(), ""]
    return Outcome({"permutation": str(sigma), "order": args.order, "growths": rows}, table)


# -- parser ---------------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "table"), default="json", help="output format (default json)")
    p.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")


def _add_point(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=rational_arg, help="value of q as p/r")
    p.add_argument("--t", type=rational_arg, help="value of t as p/r")


def _add_sampling(p: argparse.ArgumentParser) -> None:
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact distribution (default)")
    mode.add_argument("--sample", action="store_true", help="draw samples instead")
    p.add_argument("--seed", type=int, help="seed for sampling")
    p.add_argument("--count", type=int, default=1, help="number of samples (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrst", description="Exact (q,t)-randomized Robinson-Schensted tools.")
    parser.add_argument("--version", action="version", version=f"qrst {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="insert a permutation: P(sigma -> P,Q)")
    p.add_argument("--perm", type=permutation_arg, required=True, help="one-line notation, e.g. 526134 or 5,2,6,1,3,4")
    _add_sampling(p)
    _add_point(p)
    p.add_argument("--variant", choices=("row", "column"), default="row")
    p.add_argument("--order", choices=("row", "column"), default="row", help="growth fill order")
    _add_common(p)
    p.set_defaults(run=cmd_insert)

    p = sub.add_parser("backward", help="backward map: P-bar(sigma <- P,Q)")
    p.add_argument("--P", "--p", "--insertion", dest="P", type=tableau_arg, required=True, help="insertion tableau, e.g. '1,3;2'")
    p.add_argument("--Q", "--recording", dest="Q", type=tableau_arg, required=True, help="recording tableau")
    _add_sampling(p)
    _add_point(p)
    p.add_argument("--variant", choices=("row", "column"), default="row")
    _add_common(p)
    p.set_defaults(run=cmd_backward)

    p = sub.add_parser("probs", help="forward/backward kernel of a shape")
    p.add_argument("--shape", type=partition_arg, required=True, help="e.g. 3,1")
    p.add_argument("--formulation", choices=FORMULATIONS, default="explicit")
    p.add_argument("--spec", choices=SPECIALIZATIONS, help="closed-form specialization")
    p.add_argument("--column", action="store_true", help="column-insertion kernel")
    _add_point(p)
    _add_common(p)
    p.set_defaults(run=cmd_probs)

    p = sub.add_parser("hookwalk", help="(q,t) hook walk absorption")
    p.add_argument("--shape", type=partition_arg, required=True)
    p.add_argument("--start", type=cell_arg, help="starting cell x,y (default lam_1+1, lam'_1+1)")
    _add_sampling(p)
    _add_point(p)
    _add_common(p)
    p.set_defaults(run=cmd_hookwalk)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("check", nargs="?", default="all", choices=["all", *sorted(CHECKS)])
    p.add_argument("--max-size", type=int, help="partition size bound (env QRST_MAX_SIZE)")
    p.add_argument("--n", type=int, help="permutation size bound (env QRST_VERIFY_N)")
    _add_common(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("growths", help="list every growth diagram of a permutation")
    p.add_argument("--perm", type=permutation_arg, required=True)
    p.add_argument("--order", choices=("row", "column"), default="row")
    p.add_argument("--bound", type=int, default=MAX_EXACT_N, help=f"size bound (default {MAX_EXACT_N}, env QRST_MAX_N)")
    _add_point(p)
    _add_common(p)
    p.set_defaults(run=cmd_growths)
    return parser


def dispatch(argv: Sequence[str], out: Callable[[str], None] = print, err: Callable[[str], None] | None = None) -> int:
    """Run one command line; returns the exit code."""
    err = err or (lambda s: print(s, file=sys.stderr))
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    meta = RunMetadata(argv=list(argv))
    started = time.perf_counter()
    try:
        outcome = args.run(args, meta)
    except UsageError as exc:
        err(f"qrst {args.command}: error: {exc}")
        return EXIT_USAGE
    except QRSTError as exc:
        err(f"qrst {args.command}: error: {exc}")
        return EXIT_USAGE
    meta.timing = {"seconds": round(time.perf_counter() - started, 6)}
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "metadata": meta.to_json_obj(),
            "result": outcome.result,
        }
        out(json.dumps(doc, indent=2, sort_keys=True))
    else:
        out("\n".join(outcome.table))
    return outcome.code


def main(argv: Sequence[str] | None = None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
