"""Wall-clock scaling of the matcher on random isomorphic pairs."""

from __future__ import annotations

import math
import random
import statistics
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import generate_random_graph, permute, random_permutation
from .matcher import Mode, run

__all__ = ["BenchRow", "BenchResult", "bench", "loglog_slope"]


@dataclass(frozen=True)
class BenchRow:
    n: int
    median_m: float
    median_seconds: float
    verdicts: dict[str, int]


@dataclass
class BenchResult:
    rows: list[BenchRow] = field(default_factory=list)

    @property
    def slope(self) -> Optional[float]:
        if len(self.rows) < 2:
            return None
        return loglog_slope([r.n for r in self.rows], [r.median_seconds for r in self.rows])

    def format(self) -> str:
        out = [f"{'n':>6} {'median_m':>10} {'median_s':>12}  verdicts"]
        for r in self.rows:
            verdicts = " ".join(f"{k}={v}" for k, v in sorted(r.verdicts.items()))
            out.append(f"{r.n:>6} {r.median_m:>10.1f} {r.median_seconds:>12.6f}  {verdicts}")
        slope = self.slope
        if slope is not None:
            out.append(f"log-log slope: {slope:.3f}")
        return "\n".join(out) + "\n"


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    fit = statistics.linear_regression([math.log(x) for x in xs], [math.log(y) for y in ys])
    return fit.slope


def bench(
    sizes: Sequence[int],
    samples: int,
    seed: int,
    p: float = 0.1,
    mode: Mode | str = Mode.FAITHFUL,
) -> BenchResult:
    """Median matcher time per size over ``samples`` relabelled G(n, p) pairs."""
    if samples < 1:
        raise ValueError("samples must be positive")
    if not sizes or list(sizes) != sorted(set(sizes)):
        raise ValueError("sizes must be non-empty, distinct and ascending")
    master = random.Random(seed)
    result = BenchResult()
    for n in sizes:
        times, ms = [], []
        verdicts: Counter[str] = Counter()
        for _ in range(samples):
            rng = random.Random(master.getrandbits(32))
            g = generate_random_graph(n, p, rng.getrandbits(32))
            h = permute(g, random_permutation(g.vertices, rng))
            start = time.perf_counter()
            verdict = run(g, h, mode)
            times.append(time.perf_counter() - start)
            ms.append(g.m)
            verdicts[verdict.status.value] += 1
        result.rows.append(BenchRow(n, statistics.median(ms), statistics.median(times), dict(verdicts)))
    return result
