"""``csf``: command-line front end.

Data goes to standard output and diagnostics to standard error.  Each error
class has its own exit status (see :mod:`chromapleth.errors`); argument errors
exit with 2 as usual for argparse.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import csf
from .alphabet import alphabets, parse_expr
from .corpus import load_corpus
from .errors import CapacityError, CsfError, GraphFormatError
from .plethysm import pleth
from .poly import Poly
from .symfunc import BASES, DEGREE_BOUND, parse_symfunc
from .verify import SUITES, build_jobs, run_jobs, summary
from .wgraph import WeightedGraph, complete_graph, cycle_graph, path_graph

BOUND_ENV = "CSF_BOUND"
FORMATS = ("text", "json", "latex")
METHODS = ("subsets", "partitions", "delcon")


@dataclass
class RunConfig:
    command: str
    graph: str | None = None
    expr: str | None = None
    symfunc: str | None = None
    bounds: dict[str, int] = field(default_factory=dict)
    default_bound: int | None = None
    order: str = "default"
    basis: str = "p"
    method: str = "subsets"
    fmt: str = "text"
    corpus: str = "default"
    degree_cap: int = DEGREE_BOUND
    n: int | None = None
    n_vars: int | None = None
    alphabet: str = "x"
    suite: str = "all"
    seed: int = 0
    report: str | None = None
    jobs: int = 1
    verbose: bool = False


# ---------------------------------------------------------------------------
# inputs
# ---------------------------------------------------------------------------

_NAMED = re.compile(r"([PKC])(\d+)")


def load_graph(source: str) -> WeightedGraph:
    """A graph from a JSON file, inline JSON, inline text or a name like ``P3``/``K4``/``C5``."""
    named = _NAMED.fullmatch(source.strip())
    if named:
        kind, n = named.group(1), int(named.group(2))
        if n < 1 or (kind == "C" and n < 3):
            raise GraphFormatError(f"no graph named {source!r}")
        return {"P": path_graph, "K": complete_graph, "C": cycle_graph}[kind](n)
    path = Path(source)
    if path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {source}: {exc}") from None
    elif source.lstrip().startswith("{") or "/" in source or ":" in source or ";" in source:
        text = source
    else:
        raise GraphFormatError(f"no graph file {source!r}")
    if text.lstrip().startswith("{"):
        return WeightedGraph.from_json(text)
    return WeightedGraph.from_text(text)


def _parse_bounds(values: list[str]) -> tuple[int | None, dict[str, int]]:
    default, named = None, {}
    for item in values:
        name, sep, num = item.partition("=")
        try:
            value = int(num if sep else name)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad bound {item!r}") from None
        if value < 1:
            raise argparse.ArgumentTypeError(f"bounds must be at least 1, got {item!r}")
        if sep:
            named[name.strip()] = value
        else:
            default = value
    return default, named


def _bounds_for(cfg: RunConfig, expr) -> dict[str, int]:
    out = {}
    for name in alphabets(expr):
        if name in cfg.bounds:
            out[name] = cfg.bounds[name]
        elif cfg.default_bound is not None:
            out[name] = cfg.default_bound
    return out


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _emit(value, fmt: str, meta: dict | None = None) -> str:
    if isinstance(value, int):
        value = Poly.const(value)
    if fmt == "text":
        return value.to_text()
    if fmt == "latex":
        return value.to_latex()
    data = value.to_json()
    if meta:
        data = {**data, "meta": meta}
    return json.dumps(data, indent=2, sort_keys=True)


def _check_cap(g: WeightedGraph, cap: int) -> None:
    if g.total_weight() > cap:
        raise CapacityError(f"total vertex weight {g.total_weight()} exceeds the degree cap {cap}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _symmetric(cfg: RunConfig, tutte: bool) -> str:
    g = load_graph(cfg.graph)
    _check_cap(g, cfg.degree_cap)
    table = {
        (False, "subsets"): csf.x_via_subsets,
        (False, "partitions"): csf.x_via_stable_partitions,
        (False, "delcon"): csf.x_via_delcon,
        (True, "subsets"): csf.xb_via_subsets,
        (True, "partitions"): csf.xb_via_partitions,
        (True, "delcon"): csf.xb_via_delcon,
    }
    value = table[(tutte, cfg.method)](g).convert(cfg.basis, cfg.degree_cap)
    return _emit(value, cfg.fmt)


def _plethysm(cfg: RunConfig, tutte: bool) -> str:
    if cfg.graph is None:
        if cfg.symfunc is None or cfg.expr is None:
            raise GraphFormatError("pleth needs --graph with --expr, or a symmetric function and an expression")
        f = parse_symfunc(cfg.symfunc)
        if "[" in cfg.expr or cfg.expr.strip().startswith("{"):
            inner = parse_symfunc(cfg.expr)
            return _emit(pleth(f, inner).convert(cfg.basis, cfg.degree_cap), cfg.fmt)
        e = parse_expr(cfg.expr)
        return _emit(pleth(f, e, _bounds_for(cfg, e)), cfg.fmt)
    if cfg.expr is None:
        raise GraphFormatError("--expr is required with --graph")
    g = load_graph(cfg.graph)
    _check_cap(g, cfg.degree_cap)
    e = parse_expr(cfg.expr)
    bounds = _bounds_for(cfg, e)
    run = csf.xb_pleth_combinatorial if tutte else csf.x_pleth_combinatorial
    value = run(g, e, bounds, cfg.order)
    meta = {"expr": cfg.expr, "bounds": bounds, "order": cfg.order}
    return _emit(value, cfg.fmt, meta)


def _chromatic(cfg: RunConfig) -> str:
    g = load_graph(cfg.graph)
    return _emit(csf.chromatic_polynomial(g, cfg.n), cfg.fmt)


def _verify(cfg: RunConfig) -> tuple[str, int]:
    corpus = None if cfg.corpus == "default" else load_corpus(cfg.corpus)
    n_vars = cfg.default_bound or 3
    jobs = build_jobs(cfg.suite, corpus, n_vars, cfg.seed)
    reports = run_jobs(jobs, cfg.jobs)
    failed = [r for r in reports if not r.passed]
    counts = summary(reports)
    if cfg.report:
        payload = {
            "suite": cfg.suite,
            "bound": n_vars,
            "seed": cfg.seed,
            "summary": counts,
            "reports": [r.to_json() for r in reports],
        }
        Path(cfg.report).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    lines = [r.line() for r in (reports if cfg.verbose else failed)]
    for name, c in counts.items():
        lines.append(f"{name}: {c['passed']} passed, {c['failed']} failed")
    lines.append("OK" if not failed else f"FAILED ({len(failed)} of {len(reports)})")
    return "\n".join(lines), (1 if failed else 0)


def run(cfg: RunConfig) -> tuple[str, int]:
    """Execute one command; returns the text for stdout and the exit status."""
    if cfg.command == "compute":
        return _symmetric(cfg, tutte=False), 0
    if cfg.command == "xb":
        return _symmetric(cfg, tutte=True), 0
    if cfg.command == "pleth":
        return _plethysm(cfg, tutte=False), 0
    if cfg.command == "xbpleth":
        return _plethysm(cfg, tutte=True), 0
    if cfg.command == "chromatic":
        return _chromatic(cfg), 0
    if cfg.command == "verify":
        return _verify(cfg)
    f = parse_symfunc(cfg.symfunc)
    if cfg.command == "expand":
        if f.degree() > cfg.degree_cap:
            raise CapacityError(f"degree {f.degree()} exceeds the degree cap {cfg.degree_cap}")
        return _emit(f.expand(cfg.n_vars, cfg.alphabet), cfg.fmt), 0
    if cfg.command == "convert":
        return _emit(f.convert(cfg.basis, cfg.degree_cap), cfg.fmt), 0
    raise ValueError(f"unknown command {cfg.command!r}")


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csf", description="Chromatic and Tutte symmetric functions and their plethysms."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=FORMATS, help="output format (default text)")
        p.add_argument("--degree-cap", type=int, help=f"largest degree handled (default {DEGREE_BOUND})")
        p.add_argument("--config", help="JSON file of option defaults, keyed like the long flags")

    def graph_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--graph", help="JSON file, inline JSON, 'a:2; b / a-b', or P<n>/K<n>/C<n>")

    def bound_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--bound", action="append", default=[], metavar="N|NAME=N",
            help=f"truncation of infinite alphabets, repeatable (default ${BOUND_ENV})",
        )

    for name, text in (("compute", "chromatic symmetric function X"), ("xb", "Tutte symmetric function XB")):
        p = sub.add_parser(name, help=text)
        graph_arg(p)
        p.add_argument("--basis", choices=BASES)
        p.add_argument("--method", choices=METHODS)
        common(p)

    for name, text in (("pleth", "plethysm X[f], or f[g] for symmetric functions"), ("xbpleth", "plethysm XB[f]")):
        p = sub.add_parser(name, help=text)
        graph_arg(p)
        p.add_argument("--expr", help="plethystic expression, e.g. 'x+y', '-1', 'eps(x)'")
        if name == "pleth":
            p.add_argument("operands", nargs="*", metavar="ARG", help="symmetric function and expression")
            p.add_argument("--basis", choices=BASES)
        bound_arg(p)
        p.add_argument("--order", help="colour order: default or seed:<k>")
        common(p)

    p = sub.add_parser("chromatic", help="chromatic polynomial value chi_G(n)")
    graph_arg(p)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="run the identity suites")
    p.add_argument("--suite", choices=("all",) + SUITES)
    p.add_argument("--corpus", help="'default' or a corpus JSON file")
    bound_arg(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--report", help="write every report as JSON to this file")
    p.add_argument("--jobs", type=int, help="worker processes (default 1)")
    p.add_argument("--verbose", action="store_true", default=None, help="print passing checks too")
    common(p)

    p = sub.add_parser("expand", help="expand a symmetric function in N variables")
    p.add_argument("symfunc", help="e.g. 'e[2] + p[1,1]'")
    p.add_argument("--vars", dest="n_vars", type=int, required=True)
    p.add_argument("--alphabet")
    common(p)

    p = sub.add_parser("convert", help="rewrite a symmetric function in another basis")
    p.add_argument("symfunc")
    p.add_argument("--basis", choices=BASES, required=True)
    common(p)
    return parser


def _config_from(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if v is not None}
    if args.config:
        try:
            extra = json.loads(Path(args.config).read_text())
        except (OSError, ValueError) as exc:
            parser.error(f"cannot read config {args.config}: {exc}")
        if not isinstance(extra, dict):
            parser.error("config file must hold a JSON object")
        for key, value in extra.items():
            key = key.replace("-", "_")
            key = {"format": "fmt", "vars": "n_vars"}.get(key, key)
            if key == "bound":
                value = value if isinstance(value, list) else [value]
                if not values.get("bound"):
                    values["bound"] = [str(v) for v in value]
            elif key not in values:
                values[key] = value
    bound_items = values.pop("bound", [])
    if not bound_items and os.environ.get(BOUND_ENV):
        bound_items = [os.environ[BOUND_ENV]]
    try:
        default_bound, named = _parse_bounds([str(b) for b in bound_items])
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    operands = values.pop("operands", [])
    values.pop("config", None)
    if operands:
        if len(operands) != 2 or values.get("graph"):
            parser.error("positional form is: csf pleth SYMFUNC EXPR")
        values["symfunc"], values["expr"] = operands
    known = set(RunConfig.__dataclass_fields__)
    unknown = set(values) - known
    if unknown:
        parser.error(f"unknown option(s) {', '.join(sorted(unknown))}")
    cfg = RunConfig(**values, default_bound=default_bound, bounds=named)
    if cfg.command in ("compute", "xb", "chromatic") and not cfg.graph:
        parser.error("--graph is required")
    if not re.fullmatch(r"default|seed:-?\d+", str(cfg.order)):
        parser.error(f"--order must be 'default' or 'seed:<k>', got {cfg.order!r}")
    if cfg.degree_cap < 1:
        parser.error("--degree-cap must be positive")
    if cfg.jobs < 1:
        parser.error("--jobs must be positive")
    if cfg.command == "expand" and cfg.n_vars < 1:
        parser.error("--vars must be positive")
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from(args, parser)
    try:
        out, status = run(cfg)
    except CsfError as exc:
        print(f"csf: error: {exc}", file=sys.stderr)
        return exc.exit_code
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
