"""Command-line front end.

  polyring count ring --type "t(2)t(3)t(3)t(1)t(3)t(3)t(3)t(2)t(2)t(3)t(3)"
  polyring count chain --type "t(6,*)t(6,*)" --method both --json
  polyring count graph --file dump.txt
  polyring vector --type "t(6,*)t(5,2)t(6,*)" --method both
  polyring gen-matrix --size 5 --offset 2 --format json
  polyring verify --max-faces 4 --sizes 4..7 --seed 1
  polyring bench --faces 1000 --repeat 3

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 the transfer
formula and the oracle disagree.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from dataclasses import dataclass
from typing import Any, Optional

from . import matgen, oracle, transfer, verify
from .notation import RingSpec, SpecError, format_spec, parse_spec
from .polygraph import GraphError, build_chain, build_ring, dump_graph, read_edge_list

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3

# above these transfer counts the oracle row of `bench` is skipped
ORACLE_BUDGET = {"cython": 10**8, "python": 5 * 10**6}


@dataclass
class RunReport:
    input: str
    mode: str
    result: Any
    elapsed_s: float
    method: str = "transfer"
    agreement: Optional[bool] = None

    def to_json(self) -> str:
        res = self.result
        if isinstance(res, int):
            res = transfer.to_decimal(res)
        elif isinstance(res, (tuple, list)) and res and isinstance(res[0], (tuple, list)):
            res = [[transfer.to_decimal(x) for x in row] for row in res]
        elif isinstance(res, (tuple, list)):
            res = [transfer.to_decimal(x) for x in res]
        return json.dumps({
            "mode": self.mode,
            "input": self.input,
            "method": self.method,
            "result": res,
            "elapsed_s": round(self.elapsed_s, 6),
            "agreement": self.agreement,
        })


def _sizes(text: str) -> tuple[int, ...]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if lo_i < 4 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"size range {text!r} must satisfy 4 <= a <= b")
    return tuple(range(lo_i, hi_i + 1))


def _emit(report: RunReport, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(report.to_json())
    else:
        for line in lines:
            print(line)


def cmd_count(args) -> int:
    t0 = time.perf_counter()
    if args.kind == "graph":
        if not args.file:
            print("error: count graph needs --file", file=sys.stderr)
            return EXIT_INPUT
        with open(args.file) as fh:
            g = read_edge_list(fh.read())
        result = oracle.count_maximal(g)
        report = RunReport(args.file, "graph", result, time.perf_counter() - t0, "oracle")
        _emit(report, args.json, [transfer.to_decimal(result)])
        return EXIT_OK
    if not args.type:
        print("error: --type is required", file=sys.stderr)
        return EXIT_INPUT
    spec = parse_spec(args.kind, args.type)
    build = build_chain if args.kind == "chain" else build_ring
    formula = transfer.count_chain if args.kind == "chain" else transfer.count_ring
    graph = None
    if args.dump_graph:
        graph = build(spec)
        with open(args.dump_graph, "w") as fh:
            fh.write(dump_graph(graph))
    values = {}
    if args.method in ("transfer", "both"):
        values["transfer"] = formula(spec)
    if args.method in ("oracle", "both"):
        values["oracle"] = oracle.count_maximal(graph or build(spec))
    agreement = None
    if args.method == "both":
        agreement = values["transfer"] == values["oracle"]
    result = values.get("transfer", values.get("oracle"))
    report = RunReport(format_spec(spec), args.kind, result, time.perf_counter() - t0,
                       args.method, agreement)
    lines = [f"{k} {transfer.to_decimal(v)}" for k, v in values.items()] if args.method == "both" \
        else [transfer.to_decimal(result)]
    _emit(report, args.json, lines)
    if agreement is False:
        print("error: transfer formula and oracle disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_vector(args) -> int:
    t0 = time.perf_counter()
    spec = parse_spec("chain", args.type)
    values = {}
    if args.method in ("transfer", "both"):
        values["transfer"] = transfer.chain_vector(spec)
    if args.method in ("oracle", "both"):
        g = build_chain(spec)
        a, b = g.terminal_edges[0]
        values["oracle"] = tuple(oracle.mm_vector(g, a, b))
    agreement = values["transfer"] == values["oracle"] if args.method == "both" else None
    result = values.get("transfer", values.get("oracle"))
    report = RunReport(format_spec(spec), "vector", result, time.perf_counter() - t0,
                       args.method, agreement)
    _emit(report, args.json,
          [f"{k} " + " ".join(transfer.to_decimal(x) for x in v) for k, v in values.items()])
    return EXIT_DISAGREE if agreement is False else EXIT_OK


def cmd_matrix(args) -> int:
    T = matgen.transition_matrix(args.size, args.offset)
    if args.format == "json":
        print(transfer.matrix_to_json(T, args.size, args.offset))
    else:
        sys.stdout.write(transfer.format_matrix(T))
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    results = verify.run_all(args.max_faces, args.sizes, args.seed, args.samples, args.suite)
    ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.name} ({r.checked} checks)"
        if not r.passed:
            ok = False
            line += f" -- {r.detail}"
        print(line)
    print(f"{'all suites passed' if ok else 'verification FAILED'} in {time.perf_counter() - t0:.2f}s")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    pool = verify.face_types(args.sizes)
    spec = RingSpec(tuple(rng.choice(pool) for _ in range(args.faces)))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "method", "seconds", "digits"])

    best, value = None, None
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        value = transfer.count_ring(spec)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    digits = len(transfer.to_decimal(value))
    writer.writerow([args.faces, "transfer", f"{best:.6f}", digits])

    budget = ORACLE_BUDGET.get(oracle.backend(), 0)
    if value > budget:
        writer.writerow([args.faces, f"oracle-{oracle.backend()}", "skipped", ""])
        return EXIT_OK
    g = build_ring(spec)
    best, got = None, None
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        got = oracle.count_maximal(g)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    writer.writerow([args.faces, f"oracle-{oracle.backend()}", f"{best:.6f}", len(str(got))])
    if got != value:
        print(f"error: oracle {got} != transfer {value} on {format_spec(spec)}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyring", description="Count maximal matchings of polygon chains and rings.")
    p.add_argument("--backend", choices=oracle.available_backends(),
                   help="enumeration kernel for the oracle (default: compiled when built)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count maximal matchings")
    c.add_argument("kind", choices=("chain", "ring", "graph"))
    c.add_argument("--type", help="connection-type string, e.g. 't(6,*)t(5,2)t(6,*)'")
    c.add_argument("--file", help="edge-list file (kind 'graph')")
    c.add_argument("--method", choices=("transfer", "oracle", "both"), default="transfer")
    c.add_argument("--json", action="store_true")
    c.add_argument("--dump-graph", metavar="PATH", help="write the built graph as an edge list")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("vector", help="maximal matching vector of a chain on its edge ab")
    v.add_argument("--type", required=True)
    v.add_argument("--method", choices=("transfer", "oracle", "both"), default="transfer")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_vector)

    m = sub.add_parser("gen-matrix", help="generate the transition matrix T(m,i)")
    m.add_argument("--size", type=int, required=True)
    m.add_argument("--offset", type=int, required=True)
    m.add_argument("--format", choices=("plain", "json"), default="plain")
    m.set_defaults(func=cmd_matrix)

    ver = sub.add_parser("verify", help="run the oracle-vs-formula suites")
    ver.add_argument("--max-faces", type=int, default=4)
    ver.add_argument("--sizes", type=_sizes, default=(4, 5, 6, 7), help="face sizes a..b")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--samples", type=int, default=100, help="specs sampled per face count")
    ver.add_argument("--suite", action="append", choices=sorted(verify.SUITES),
                     help="run only this suite (repeatable)")
    ver.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time transfer counting (and the oracle where feasible)")
    b.add_argument("--faces", type=int, default=11)
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--sizes", type=_sizes, default=(6,))
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.backend:
        oracle.set_backend(args.backend)
    try:
        return args.func(args)
    except (SpecError, GraphError, transfer.MatrixFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
