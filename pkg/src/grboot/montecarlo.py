"""G(n,p) sampling and estimation of percolation-by-time-t probabilities.

Trial i of a batch draws its randomness from stream_for(seed, i), so the
result of every estimate is a pure function of its configuration: workers
may process trials in any order, on any process count, and the reduction
(sorted by trial index) gives byte-identical numbers.

Sweeps over a probability grid reuse one uniform draw per trial across
every grid point and threshold it at each p.  Under this coupling a
trial's success indicator is monotone in p pointwise, so the estimated
curve is exactly non-decreasing, not just statistically.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .anchored import threshold_exponent
from .engine import edge_addition_time, run
from .graph import Graph, edge
from .rng import SplitMix64, stream_for

__all__ = [
    "TrialConfig",
    "EstimateResult",
    "SweepRow",
    "BracketError",
    "wilson_interval",
    "sample_gnp",
    "estimate",
    "sweep",
    "sweep_to_csv",
    "pc_bisect",
    "SWEEP_CSV_HEADER",
]

_Z95 = 1.959963984540054  # two-sided 95% normal quantile

SWEEP_CSV_HEADER = "p,p_hat,ci_lo,ci_hi,mean_T,reps,seed"


class BracketError(RuntimeError):
    """Raised when no probability bracket contains the requested level."""


@dataclass(frozen=True)
class TrialConfig:
    n: int
    r: int
    t: int
    p: float
    reps: int
    seed: int

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be in [0,1], got {self.p}")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.n < self.r:
            raise ValueError(f"need n >= r, got n={self.n}, r={self.r}")
        if self.t < 0:
            raise ValueError("time budget t must be >= 0")


@dataclass
class EstimateResult:
    successes: int
    reps: int
    p_hat: float
    ci_lo: float
    ci_hi: float
    mean_T_given_success: float | None

    def to_json_dict(self) -> dict:
        return {
            "successes": self.successes,
            "reps": self.reps,
            "p_hat": self.p_hat,
            "ci95": [self.ci_lo, self.ci_hi],
            "mean_T_given_success": self.mean_T_given_success,
        }


@dataclass
class SweepRow:
    p: float
    p_hat: float
    ci_lo: float
    ci_hi: float
    mean_T: float | None
    reps: int
    seed: int


def wilson_interval(successes: int, trials: int, z: float = _Z95):
    """Wilson score interval; always contains successes/trials."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = (
        z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
        / denom
    )
    # rounding must not push the endpoints past the point estimate or [0,1]
    lo = max(0.0, min(center - half, phat))
    hi = min(1.0, max(center + half, phat))
    return lo, hi


_TRIU_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _triu(n: int):
    if n not in _TRIU_CACHE:
        _TRIU_CACHE[n] = np.triu_indices(n, 1)
    return _TRIU_CACHE[n]


def _graph_from_mask(n: int, mask: np.ndarray) -> Graph:
    a = np.zeros((n, n), dtype=bool)
    a[_triu(n)] = mask
    a |= a.T
    rows = np.packbits(a, axis=1, bitorder="little")
    return Graph(n, [int.from_bytes(rows[i].tobytes(), "little") for i in range(n)])


def sample_gnp(n: int, p: float, stream: SplitMix64) -> Graph:
    """Each of the C(n,2) edges present independently with probability p.

    Edge k in canonical order (0,1),(0,2),...,(n-2,n-1) is present iff the
    stream's k-th uniform is < p.
    """
    m = n * (n - 1) // 2
    u = stream.uniforms(m)
    return _graph_from_mask(n, u < p)


def _time_within(g: Graph, r: int, t: int) -> int | None:
    """Percolation time if the graph completes within t rounds, else None."""
    if g.is_complete():
        return 0
    if t == 0:
        return None
    if t == 1:
        # completes at round 1 iff every non-edge is addable right now
        need = r - 2
        adj = g.adj
        saw_nonedge = False
        for u in range(g.n):
            row = adj[u]
            for v in range(u + 1, g.n):
                if row >> v & 1:
                    continue
                saw_nonedge = True
                if not g.contains_clique(adj[u] & adj[v], need):
                    return None
        return 1 if saw_nonedge else 0
    trace = run(g, r, max_rounds=t)
    return trace.T


def _trial_batch(args) -> list[tuple[int, bool, int | None]]:
    n, r, t, p, seed, indices, probe = args
    out = []
    for i in indices:
        g = sample_gnp(n, p, stream_for(seed, i))
        if probe is None:
            tval = _time_within(g, r, t)
        else:
            tval = edge_addition_time(g, r, probe, max_rounds=t)
        out.append((i, tval is not None, tval))
    return out


def _run_batches(worker, tasks, threads: int):
    if threads <= 1 or len(tasks) <= 1:
        results = [worker(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(worker, tasks))
    flat = [item for batch in results for item in batch]
    flat.sort(key=lambda item: item[0])
    return flat


def _chunk_indices(reps: int, threads: int) -> list[tuple[int, ...]]:
    chunks = max(1, min(reps, threads * 4))
    size = (reps + chunks - 1) // chunks
    return [
        tuple(range(lo, min(lo + size, reps))) for lo in range(0, reps, size)
    ]


def estimate(
    config: TrialConfig,
    threads: int = 1,
    probe_edge: tuple[int, int] | None = None,
) -> EstimateResult:
    """Monte Carlo estimate of P(T <= t), or of a single pair's presence.

    With probe_edge set, success means that specific pair is an edge of
    the graph after t rounds (a weaker event than full percolation).
    """
    probe = edge(*probe_edge) if probe_edge is not None else None
    tasks = [
        (config.n, config.r, config.t, config.p, config.seed, idx, probe)
        for idx in _chunk_indices(config.reps, threads)
    ]
    per_trial = _run_batches(_trial_batch, tasks, threads)
    successes = sum(1 for _, ok, _ in per_trial if ok)
    t_sum = sum(tv for _, ok, tv in per_trial if ok)
    lo, hi = wilson_interval(successes, config.reps)
    return EstimateResult(
        successes=successes,
        reps=config.reps,
        p_hat=successes / config.reps,
        ci_lo=lo,
        ci_hi=hi,
        mean_T_given_success=(t_sum / successes) if successes else None,
    )


def _sweep_trial_batch(args) -> list[tuple[int, list[tuple[bool, int | None]]]]:
    n, r, t, grid, seed, indices = args
    m = n * (n - 1) // 2
    out = []
    for i in indices:
        u = stream_for(seed, i).uniforms(m)
        row = []
        prev_success = False
        for p in grid:
            g = _graph_from_mask(n, u < p)
            tval = _time_within(g, r, t)
            row.append((tval is not None, tval))
            # coupling sanity: success can only switch on as p grows
            assert not (prev_success and tval is None)
            prev_success = tval is not None
        out.append((i, row))
    return out


def sweep(
    n: int,
    r: int,
    t: int,
    p_grid: list[float],
    reps: int,
    seed: int,
    threads: int = 1,
) -> list[SweepRow]:
    """One estimate per grid point, coupled through shared trial uniforms.

    The grid is sorted ascending; the returned p_hat column is exactly
    non-decreasing.
    """
    grid = sorted(p_grid)
    for p in grid:
        TrialConfig(n=n, r=r, t=t, p=p, reps=reps, seed=seed)  # validation
    tasks = [
        (n, r, t, tuple(grid), seed, idx) for idx in _chunk_indices(reps, threads)
    ]
    per_trial = _run_batches(_sweep_trial_batch, tasks, threads)

    rows = []
    for k, p in enumerate(grid):
        successes = sum(1 for _, row in per_trial if row[k][0])
        t_sum = sum(row[k][1] for _, row in per_trial if row[k][0])
        lo, hi = wilson_interval(successes, reps)
        rows.append(
            SweepRow(
                p=p,
                p_hat=successes / reps,
                ci_lo=lo,
                ci_hi=hi,
                mean_T=(t_sum / successes) if successes else None,
                reps=reps,
                seed=seed,
            )
        )
    return rows


def sweep_to_csv(rows: list[SweepRow]) -> str:
    lines = [SWEEP_CSV_HEADER]
    for row in rows:
        mean_t = "nan" if row.mean_T is None else repr(row.mean_T)
        lines.append(
            f"{row.p!r},{row.p_hat!r},{row.ci_lo!r},{row.ci_hi!r},"
            f"{mean_t},{row.reps},{row.seed}"
        )
    return "\n".join(lines) + "\n"


def pc_bisect(
    n: int,
    r: int,
    t: int,
    level: float = 0.5,
    tol: float = 0.02,
    reps: int = 400,
    seed: int = 0,
    threads: int = 1,
) -> tuple[float, float]:
    """Interval of width <= tol where the success curve crosses `level`.

    Probes share trial streams, so the sampled curve is monotone in p and
    the crossing is well defined.  The bracket is seeded at the theoretical
    scale n^-exponent and expanded geometrically.
    """
    if not 0.0 < level < 1.0:
        raise ValueError("level must be in (0,1)")
    if tol <= 0:
        raise ValueError("tol must be positive")

    cache: dict[float, float] = {}

    def phat(p: float) -> float:
        if p not in cache:
            cfg = TrialConfig(n=n, r=r, t=t, p=p, reps=reps, seed=seed)
            cache[p] = estimate(cfg, threads=threads).p_hat
        return cache[p]

    p0 = float(n) ** -float(threshold_exponent(r, t))
    lo = hi = min(p0, 1.0)
    if phat(hi) >= level:
        while lo > 0 and phat(lo) >= level:
            hi = lo
            lo = lo / 2 if lo > 1e-12 else 0.0
    else:
        while hi < 1.0 and phat(hi) < level:
            lo = hi
            hi = min(1.0, hi * 2)
        if phat(hi) < level:
            raise BracketError(
                f"success probability at p=1 is {phat(1.0)} < level {level}"
            )

    while hi - lo > tol:
        mid = (lo + hi) / 2
        if phat(mid) >= level:
            hi = mid
        else:
            lo = mid
    return lo, hi
