"""grboot: one binary dispatching to the library's subcommands.

Exit codes: 0 success, 1 usage or validation error, 2 domain-negative
result (non-percolation, disconnected input, edge outside the closure),
3 resource cap reached.  Rationals are emitted as "p/q" strings alongside
float renderings so downstream consumers never argue about rounding.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .anchored import SizeCapError, build_anchored, DEFAULT_VERTEX_CAP
from .density import DEFAULT_CAP_BITS, min_density
from .engine import percolation_time_k3, run
from .graph import Graph, dumps_canonical
from .montecarlo import (
    SWEEP_CSV_HEADER,
    TrialConfig,
    estimate,
    sweep,
    sweep_to_csv,
)
from .witness import OrderPolicy, check_witness_bound, run_with_witnesses

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_CAP = 3


def _load_graph(path: str) -> Graph:
    return Graph.from_json(Path(path).read_text())


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_edge(text: str) -> tuple[int, int]:
    u, v = (int(part) for part in text.split(","))
    return (u, v) if u < v else (v, u)


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("GRBOOT_THREADS", "1"))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grboot",
        description="Clique bootstrap percolation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run the synchronous process to its closure")
    p_run.add_argument("--graph", required=True)
    p_run.add_argument("--r", type=int, required=True)
    p_run.add_argument("--max-rounds", type=int, default=None)
    p_run.add_argument("--out", default=None)
    p_run.add_argument("--threads", type=int, default=None)

    p_ft = sub.add_parser("ft", help="build an anchored delay gadget")
    p_ft.add_argument("--r", type=int, required=True)
    p_ft.add_argument("--t", type=int, required=True)
    p_ft.add_argument("--max-vertices", type=int, default=DEFAULT_VERTEX_CAP)
    p_ft.add_argument("--out", default=None)
    p_ft.add_argument("--dot", default=None)

    p_eps = sub.add_parser("epsilon", help="exhaustive minimum-density report")
    p_eps.add_argument("--r", type=int, required=True)
    p_eps.add_argument("--t", type=int, required=True)
    p_eps.add_argument("--cap-bits", type=int, default=DEFAULT_CAP_BITS)
    p_eps.add_argument("--out", default=None)
    p_eps.add_argument("--threads", type=int, default=None)

    p_w = sub.add_parser("witness", help="witness set for one closure edge")
    p_w.add_argument("--graph", required=True)
    p_w.add_argument("--r", type=int, required=True)
    p_w.add_argument("--policy", choices=["lex", "seeded-random"], default="lex")
    p_w.add_argument("--seed", type=int, default=0)
    p_w.add_argument("--edge", required=True, metavar="U,V")
    p_w.add_argument("--out", default=None)

    p_mc = sub.add_parser("mc", help="Monte Carlo estimate of P(T <= t)")
    p_mc.add_argument("--n", type=int, required=True)
    p_mc.add_argument("--r", type=int, required=True)
    p_mc.add_argument("--t", type=int, required=True)
    p_mc.add_argument("--p", type=float, required=True)
    p_mc.add_argument("--reps", type=int, default=400)
    p_mc.add_argument("--seed", type=int, default=0)
    p_mc.add_argument("--out", default=None)
    p_mc.add_argument("--threads", type=int, default=None)

    p_sw = sub.add_parser("sweep", help="estimate over a probability grid")
    p_sw.add_argument("--n", type=int, required=True)
    p_sw.add_argument("--r", type=int, required=True)
    p_sw.add_argument("--t", type=int, required=True)
    p_sw.add_argument("--p-grid", required=True, metavar="A:B:STEPS[:log]")
    p_sw.add_argument("--reps", type=int, default=400)
    p_sw.add_argument("--seed", type=int, default=0)
    p_sw.add_argument("--out", default=None)
    p_sw.add_argument("--threads", type=int, default=None)

    p_k3 = sub.add_parser("k3", help="triangle-process time via the diameter")
    p_k3.add_argument("--graph", required=True)
    p_k3.add_argument("--verify", action="store_true")

    return parser


def _parse_grid(spec: str) -> list[float]:
    parts = spec.split(":")
    if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "log"):
        raise ValueError(f"bad grid spec {spec!r}, want A:B:STEPS[:log]")
    a, b, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if steps < 1:
        raise ValueError("grid needs at least one step")
    if steps == 1:
        return [a]
    if len(parts) == 4:
        if a <= 0 or b <= 0:
            raise ValueError("log grid needs positive endpoints")
        ratio = (b / a) ** (1.0 / (steps - 1))
        return [a * ratio**k for k in range(steps)]
    return [a + (b - a) * k / (steps - 1) for k in range(steps)]


def _cmd_run(args) -> int:
    g = _load_graph(args.graph)
    trace = run(g, args.r, max_rounds=args.max_rounds)
    _emit(dumps_canonical(trace.to_json_dict()), args.out)
    if trace.cap_reached:
        return EXIT_CAP
    return EXIT_OK if trace.T is not None else EXIT_NEGATIVE


def _cmd_ft(args) -> int:
    try:
        anchored = build_anchored(args.r, args.t, max_vertices=args.max_vertices)
    except SizeCapError as exc:
        print(f"grboot ft: {exc}", file=sys.stderr)
        return EXIT_CAP
    _emit(anchored.to_json(), args.out)
    if args.dot is not None:
        Path(args.dot).write_text(anchored.graph.to_dot())
    return EXIT_OK


def _cmd_epsilon(args) -> int:
    try:
        anchored = build_anchored(args.r, args.t)
        report = min_density(anchored, cap_bits=args.cap_bits, threads=_threads(args))
    except SizeCapError as exc:
        print(f"grboot epsilon: {exc}", file=sys.stderr)
        return EXIT_CAP
    _emit(dumps_canonical(report.to_json_dict()), args.out)
    return EXIT_OK


def _cmd_witness(args) -> int:
    g = _load_graph(args.graph)
    target = _parse_edge(args.edge)
    policy = OrderPolicy(args.policy)
    witnesses = run_with_witnesses(g, args.r, policy=policy, seed=args.seed)
    if target not in witnesses:
        print(f"grboot witness: edge {target} is not in the closure", file=sys.stderr)
        return EXIT_NEGATIVE
    w = witnesses[target]
    doc = w.to_json_dict()
    doc["bound_satisfied"] = check_witness_bound(w, args.r)
    _emit(dumps_canonical(doc), args.out)
    return EXIT_OK


def _cmd_mc(args) -> int:
    cfg = TrialConfig(
        n=args.n, r=args.r, t=args.t, p=args.p, reps=args.reps, seed=args.seed
    )
    result = estimate(cfg, threads=_threads(args))
    _emit(dumps_canonical(result.to_json_dict()), args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    grid = _parse_grid(args.p_grid)
    rows = sweep(
        args.n, args.r, args.t, grid, args.reps, args.seed, threads=_threads(args)
    )
    _emit(sweep_to_csv(rows), args.out)
    return EXIT_OK


def _cmd_k3(args) -> int:
    g = _load_graph(args.graph)
    d = g.diameter()
    if d == float("inf"):
        print("diameter: infinite (disconnected); the process never completes")
        return EXIT_NEGATIVE
    predicted = percolation_time_k3(g)
    print(f"diameter: {int(d)}")
    print(f"predicted_T: {predicted}")
    if args.verify:
        verified = run(g, 3).T
        print(f"verified_T: {verified}")
    return EXIT_OK


_HANDLERS = {
    "run": _cmd_run,
    "ft": _cmd_ft,
    "epsilon": _cmd_epsilon,
    "witness": _cmd_witness,
    "mc": _cmd_mc,
    "sweep": _cmd_sweep,
    "k3": _cmd_k3,
}


def dispatch(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 0 for --help, 2 for usage errors
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"grboot {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(dispatch())
