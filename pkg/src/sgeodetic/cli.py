"""Command-line interface: compute, verify, formula, construct, crosscheck.

JSON reports go to stdout, diagnostics to stderr. Exit codes: 0 ok,
1 internal error, 2 input error, 3 budget exhausted, 4 a check failed
(invalid witness, failed self-verification, crosscheck disagreement).
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import constructions, formulas
from .errors import BudgetExhausted, GraphError, HypothesisViolation, ParseError, WitnessError
from .io import dumps_witness, format_edge_list, loads_witness, read_graph, witness_to_json
from .solver import ORACLE_MAX_N, sge_exact, sge_oracle
from .verifier import _budget, kernel_name, validate_witness

log = logging.getLogger("sgeodetic")

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_BUDGET, EXIT_CHECK = 0, 1, 2, 3, 4


def _emit(command, result, fingerprint=None, budget=None, started=None):
    report = {"command": command, "input": {"fingerprint": fingerprint}, "result": result}
    if budget is not None:
        report["budget"] = budget
    print(json.dumps(report, indent=2, sort_keys=True))
    if started is not None:
        log.info("elapsed %.3fs (kernel: %s)", time.perf_counter() - started, kernel_name())


def _verify_payload(report):
    return {
        "valid": report.valid,
        "covered": len(report.covered),
        "uncovered": [list(e) for e in sorted(report.uncovered)],
        "problems": report.problems,
    }


def cmd_compute(args) -> int:
    started = time.perf_counter()
    g = read_graph(args.graph)
    limit = _budget(args.budget)
    command = ["compute", str(args.graph)] + (["--oracle"] if args.oracle else [])
    if args.oracle:
        res = sge_oracle(g, max_n=args.oracle_max)
        budget = None
    else:
        try:
            res = sge_exact(g, budget=limit, threads=args.threads)
        except BudgetExhausted as exc:
            _emit(command, {"status": "unknown", "lower": exc.lower, "upper": exc.upper},
                  g.fingerprint(), {"limit": limit, "used": exc.nodes}, started)
            return EXIT_BUDGET
        budget = {"limit": limit, "used": res.nodes}
    payload = {"status": "ok", **res.to_json()}
    _emit(command, payload, g.fingerprint(), budget, started)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    w = loads_witness(Path(args.witness).read_text())
    report = validate_witness(g, w)
    _emit(["verify", str(args.graph), str(args.witness)], _verify_payload(report), g.fingerprint())
    return EXIT_OK if report.valid else EXIT_CHECK


def _formula(family, params):
    if family == "bipartite":
        n, m = params
        return formulas.sge_complete_bipartite(n, m)
    if family == "multipartite":
        return formulas.sge_complete_multipartite(params)
    if family == "prism":
        n, m = params
        return formulas.sge_path_times_complete((n, m))
    if family == "complete":
        (n,) = params
        return formulas.sge_complete(n)
    raise ValueError(f"unknown family {family!r}")


def _construct(family, params):
    if family == "bipartite":
        return constructions.construct_bipartite(*params)
    if family == "multipartite":
        return constructions.construct_multipartite(params)
    if family == "prism":
        return constructions.construct_prism(*params)
    if family == "complete":
        return constructions.construct_complete(*params)
    raise ValueError(f"unknown family {family!r}")


def cmd_formula(args) -> int:
    value = _formula(args.family, args.params)
    _emit(["formula", args.family, *map(str, args.params)], {"value": value})
    return EXIT_OK


def cmd_construct(args) -> int:
    c = _construct(args.family, args.params)
    report = validate_witness(c.graph, c.witness)
    if args.emit_graph:
        Path(args.emit_graph).write_text(format_edge_list(c.graph))
    if args.emit_witness:
        Path(args.emit_witness).write_text(dumps_witness(c.witness) + "\n")
    payload = {
        "size": len(c.vertices),
        "set": sorted(c.vertices),
        "verification": _verify_payload(report),
        "witness": witness_to_json(c.witness),
    }
    _emit(["construct", args.family, *map(str, args.params)], payload, c.graph.fingerprint())
    if not report.valid:
        log.error("constructed witness failed verification")
        return EXIT_CHECK
    return EXIT_OK


# -- crosscheck -----------------------------------------------------------


def parse_range(text: str) -> list[dict]:
    """Expand ``"n=2..5,m=2..n"`` into parameter dicts (later bounds may name earlier vars)."""
    specs = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        m = re.fullmatch(r"(\w+)=(\w+)(?:\.\.(\w+))?", part)
        if not m:
            raise ValueError(f"bad range item {part!r}")
        name, lo, hi = m.group(1), m.group(2), m.group(3) or m.group(2)
        specs.append((name, lo, hi))

    def value(token, env):
        if token.lstrip("-").isdigit():
            return int(token)
        if token not in env:
            raise ValueError(f"range bound {token!r} is neither a number nor an earlier variable")
        return env[token]

    out = [{}]
    for name, lo, hi in specs:
        out = [
            {**env, name: x}
            for env in out
            for x in range(value(lo, env), value(hi, env) + 1)
        ]
    return out


def _instances(args):
    if args.family == "multipartite":
        max_part = args.max_part or args.sum_max
        for k in range(2, args.max_k + 1):
            for parts in itertools.combinations_with_replacement(range(2, max_part + 1), k):
                if args.sum_max is None or sum(parts) <= args.sum_max:
                    yield list(parts)
        return
    for env in parse_range(args.range):
        if args.family in ("bipartite", "prism"):
            yield [env["n"], env["m"]]
        else:
            yield [env["n"]]


def _check_instance(job):
    family, params, oracle_max, exact_max, budget = job
    row = {"family": family, "params": params}
    formula = _formula(family, params)
    c = _construct(family, params)
    report = validate_witness(c.graph, c.witness)
    row.update(formula=formula, construction=len(c.vertices), witness_valid=report.valid)
    solver, value = None, None
    try:
        if c.graph.n <= oracle_max:
            solver, value = "oracle", sge_oracle(c.graph, max_n=oracle_max).value
        elif c.graph.n <= exact_max:
            solver, value = "exact", sge_exact(c.graph, budget=budget).value
    except BudgetExhausted as exc:
        solver, value = "exact", None
        row["unknown"] = [exc.lower, exc.upper]
    row.update(solver=solver, solver_value=value)
    row["agree"] = (
        report.valid
        and len(c.vertices) == formula
        and (value is None or value == formula)
        and "unknown" not in row
    )
    return row


def cmd_crosscheck(args) -> int:
    started = time.perf_counter()
    jobs = [(args.family, p, args.oracle_max, args.exact_max, args.budget) for p in _instances(args)]
    if args.threads > 1:
        with ProcessPoolExecutor(args.threads) as pool:
            rows = list(pool.map(_check_instance, jobs))
    else:
        rows = [_check_instance(j) for j in jobs]
    failures = [r for r in rows if not r["agree"]]
    command = ["crosscheck", "--family", args.family]
    if args.range:
        command += ["--range", args.range]
    if args.sum_max is not None:
        command += ["--sum-max", str(args.sum_max)]
    _emit(command, {"instances": rows, "checked": len(rows), "failures": len(failures)},
          started=started)
    for r in failures:
        log.error("disagreement: %s", r)
    return EXIT_CHECK if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sgeodetic", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log timings to stderr")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("compute", help="exact sg_e of a graph file")
    c.add_argument("graph")
    c.add_argument("--budget", type=int, default=None,
                   help="node expansion limit (default: $SGE_BUDGET or 10^8)")
    c.add_argument("--oracle", action="store_true", help="use the brute-force oracle")
    c.add_argument("--oracle-max", type=int, default=ORACLE_MAX_N)
    c.add_argument("--threads", type=int, default=1)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check a witness JSON against a graph")
    v.add_argument("graph")
    v.add_argument("witness")
    v.set_defaults(func=cmd_verify)

    families = ["bipartite", "multipartite", "prism", "complete"]
    f = sub.add_parser("formula", help="closed-form value for a family")
    f.add_argument("family", choices=families)
    f.add_argument("params", type=int, nargs="+")
    f.set_defaults(func=cmd_formula)

    k = sub.add_parser("construct", help="build and self-verify a witness")
    k.add_argument("family", choices=families)
    k.add_argument("params", type=int, nargs="+")
    k.add_argument("--emit-graph")
    k.add_argument("--emit-witness")
    k.set_defaults(func=cmd_construct)

    x = sub.add_parser("crosscheck", help="formula vs construction vs solver sweep")
    x.add_argument("--family", choices=families, required=True)
    x.add_argument("--range", default="", help='e.g. "n=2..5,m=2..n"')
    x.add_argument("--sum-max", type=int, default=None)
    x.add_argument("--max-part", type=int, default=None)
    x.add_argument("--max-k", type=int, default=4)
    x.add_argument("--oracle-max", type=int, default=ORACLE_MAX_N)
    x.add_argument("--exact-max", type=int, default=15)
    x.add_argument("--budget", type=int, default=None)
    x.add_argument("--threads", type=int, default=1)
    x.set_defaults(func=cmd_crosscheck)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.cmd == "crosscheck" and args.family == "multipartite" and args.sum_max is None \
            and args.max_part is None:
        print("crosscheck multipartite needs --sum-max or --max-part", file=sys.stderr)
        return EXIT_INPUT
    if args.cmd == "crosscheck" and args.family != "multipartite" and not args.range:
        print(f"crosscheck {args.family} needs --range", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (GraphError, ParseError, WitnessError, HypothesisViolation, OSError, KeyError,
            ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
