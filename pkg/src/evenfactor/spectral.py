"""Largest adjacency eigenvalue, bipartite factor thresholds, and sweeps.

The eigenvalue comes from shifted power iteration (A + I keeps the dominant
eigenvalue unique on each connected component, which plain iteration loses on
bipartite graphs); disconnected graphs take the maximum over components.
Threshold comparisons carry a guard band: values within it are reported as
boundary cases instead of being silently classified, because the bipartite
threshold claim is sharp at equality.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SearchBudgetExceeded, ScaleError
from .graph import Edge, Graph, build_graph
from .search import find_ab_factor

#: Half-width of the guard band used when comparing against sharp thresholds.
THRESHOLD_GUARD = 1e-9

#: Exhaustive sweeps enumerate all 2^(n choose 2) graphs; beyond this n the
#: request must fail loudly.
SWEEP_EXHAUSTIVE_CAP = 8

DEFAULT_LAMBDA_TOL = 1e-10
DEFAULT_ROOT_TOL = 1e-12


@dataclass(frozen=True)
class SpectralResult:
    lambda1: float
    iterations: int
    residual: float

    def to_json(self) -> dict:
        return {"lambda1": self.lambda1, "iterations": self.iterations,
                "residual": self.residual}


def _component_lambda1(adj: np.ndarray, tol: float, max_iter: int) -> tuple[float, int, float]:
    k = adj.shape[0]
    if k == 1:
        return 0.0, 0, 0.0
    vec = np.ones(k) / math.sqrt(k)
    lam = 0.0
    for it in range(1, max_iter + 1):
        av = adj @ vec
        lam = float(vec @ av)
        residual = float(np.max(np.abs(av - lam * vec)))
        if residual <= tol:
            return lam, it, residual
        # Shifted step: (A + I)v keeps the iteration from oscillating.
        nxt = av + vec
        norm = float(np.linalg.norm(nxt))
        if norm == 0.0:
            return 0.0, it, 0.0
        vec = nxt / norm
    raise RuntimeError(
        f"power iteration did not reach residual {tol} within {max_iter} iterations")


def lambda1(g: Graph, tol: float = DEFAULT_LAMBDA_TOL,
            max_iter: int = 500_000) -> SpectralResult:
    """Largest adjacency eigenvalue with residual ||Av - lambda*v||_inf <= tol."""
    if g.n < 1:
        raise ValueError("eigenvalue undefined for the empty graph")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    from .graph import components_after_deletion

    best = (0.0, 0, 0.0)
    total_iter = 0
    for comp in components_after_deletion(g, ()):
        index = {v: i for i, v in enumerate(comp)}
        mat = np.zeros((len(comp), len(comp)))
        for v in comp:
            for w in g.adjacency[v]:
                mat[index[v], index[w]] = 1.0
        lam, iters, res = _component_lambda1(mat, tol, max_iter)
        total_iter += iters
        if lam > best[0]:
            best = (lam, iters, res)
    return SpectralResult(best[0], total_iter, best[2])


def bipartite_threshold(a: int, b: int, n: int) -> float:
    """Eigenvalue threshold for an [a,b]-factor in a complete bipartite graph:
    sqrt(a(n-a)) when n < a+b, else sqrt(ab)/(a+b) * n."""
    if not (0 < a <= b):
        raise ValueError(f"need 0 < a <= b, got a={a}, b={b}")
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if n >= a + b:
        return math.sqrt(a * b) / (a + b) * n
    radicand = a * (n - a)
    if radicand < 0:
        raise ValueError(
            f"threshold formula leaves the reals for n={n} < a={a} "
            f"(radicand a(n-a) = {radicand})")
    return math.sqrt(radicand)


def observation_decide(x: int, y: int, a: int, b: int) -> bool:
    """Closed-form decision: K_{x,y} (x <= y) has an [a,b]-factor iff
    x >= a and x >= a(x+y)/(a+b).  Exact arithmetic throughout."""
    if x > y:
        raise ValueError(f"expected x <= y, got x={x}, y={y}")
    if not (0 < a <= b):
        raise ValueError(f"need 0 < a <= b, got a={a}, b={b}")
    n = x + y
    return x >= a and Fraction(x) >= Fraction(a * n, a + b)


def classify_threshold(value: float, threshold: float,
                       guard: float = THRESHOLD_GUARD) -> str:
    """Three-way comparison: 'above', 'below', or 'boundary' within the guard."""
    if abs(value - threshold) <= guard:
        return "boundary"
    return "above" if value > threshold else "below"


def _cubic(n: int, a: int, x: float) -> float:
    return ((x - (n - 3)) * x - (a + n - 3)) * x - a * a + (a - 1) * n + 1


def rho(n: int, a: int, tol: float = DEFAULT_ROOT_TOL) -> float:
    """Largest real root of x^3 - (n-3)x^2 - (a+n-3)x - a^2 + (a-1)n + 1.

    Bisection on [n-3, n-1] with safeguarded widening of the bracket.
    """
    if n < a + 1:
        raise ValueError(f"need n >= a+1, got n={n}, a={a}")
    if (a * n) % 2:
        raise ValueError(f"need a*n even, got a={a}, n={n}")
    lo, hi = float(n - 3), float(n - 1)
    for _ in range(64):
        if _cubic(n, a, lo) <= 0:
            break
        lo -= 1.0
    for _ in range(64):
        if _cubic(n, a, hi) >= 0:
            break
        hi += 1.0
    if _cubic(n, a, lo) > 0 or _cubic(n, a, hi) < 0:
        raise RuntimeError(
            f"no sign change for the cubic on bracket [{lo}, {hi}] (n={n}, a={a})")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _cubic(n, a, mid) >= 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class SweepRecord:
    """One graph examined by a conjecture sweep, with its factor verdict."""

    n: int
    a: int
    b: int
    mask: int | None
    edges: tuple[Edge, ...]
    lambda1: float
    rho: float
    classification: str  # "candidate" | "boundary"
    verdict: str | None  # "present" | "absent" | "budget_exhausted" | None

    def to_json(self) -> dict:
        return {
            "n": self.n, "a": self.a, "b": self.b,
            "mask": self.mask,
            "edges": [list(e) for e in self.edges],
            "lambda1": self.lambda1,
            "rho": self.rho,
            "classification": self.classification,
            "verdict": self.verdict,
        }


def _vertex_pairs(n: int) -> list[Edge]:
    return list(itertools.combinations(range(n), 2))


def graph_from_mask(n: int, mask: int, pairs: list[Edge] | None = None) -> Graph:
    pairs = pairs if pairs is not None else _vertex_pairs(n)
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return build_graph(n, edges)


def _degree_sorted(g: Graph) -> bool:
    degs = g.degrees
    return all(degs[i] >= degs[i + 1] for i in range(g.n - 1))


def _examine(g: Graph, mask: int | None, a: int, b: int, rho_value: float,
             budget: int | None) -> SweepRecord | None:
    lam = lambda1(g).lambda1
    cls = classify_threshold(lam, rho_value)
    if cls == "below":
        return None
    if cls == "boundary":
        verdict = None
    else:
        try:
            factor = find_ab_factor(g, a, b, budget=budget)
            verdict = "present" if factor is not None else "absent"
        except SearchBudgetExceeded:
            verdict = "budget_exhausted"
    return SweepRecord(g.n, a, b, mask, tuple(g.sorted_edges()), lam,
                       rho_value, "candidate" if cls == "above" else "boundary",
                       verdict)


def _sweep_chunk(n: int, a: int, b: int, rho_value: float,
                 masks: list[int], budget: int | None) -> list[SweepRecord]:
    pairs = _vertex_pairs(n)
    out = []
    for mask in masks:
        g = graph_from_mask(n, mask, pairs)
        if not _degree_sorted(g):
            continue
        rec = _examine(g, mask, a, b, rho_value, budget)
        if rec is not None:
            out.append(rec)
    return out


def conjecture_sweep(n: int, a: int, b: int, source: str = "exhaustive",
                     seed: int | None = None, count: int | None = None,
                     budget: int | None = None, jobs: int = 1) -> list[SweepRecord]:
    """Scan graphs whose largest eigenvalue strictly exceeds rho(n, a).

    Every such candidate gets an [a,b]-factor verdict; an 'absent' record is a
    counterexample candidate to the eigenvalue conjecture and is kept in full.
    Graphs within the guard band of rho are recorded as boundary, never
    classified.  Exhaustive mode enumerates upper-triangular edge bitmasks,
    skipping graphs whose degree sequence is not already sorted (every
    isomorphism class keeps at least one representative); random mode needs an
    explicit seed.
    """
    if not (1 <= a <= b):
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")
    rho_value = rho(n, a)
    if source == "exhaustive":
        if n > SWEEP_EXHAUSTIVE_CAP:
            raise ScaleError(
                f"exhaustive sweep supports n <= {SWEEP_EXHAUSTIVE_CAP}, got n={n}")
        masks = list(range(1 << (n * (n - 1) // 2)))
        if jobs > 1:
            chunk = max(1, len(masks) // (4 * jobs))
            chunks = [masks[i:i + chunk] for i in range(0, len(masks), chunk)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = pool.map(_sweep_chunk,
                                 itertools.repeat(n), itertools.repeat(a),
                                 itertools.repeat(b), itertools.repeat(rho_value),
                                 chunks, itertools.repeat(budget))
                return [rec for part in parts for rec in part]
        return _sweep_chunk(n, a, b, rho_value, masks, budget)
    if source == "random":
        if seed is None or count is None:
            raise ValueError("random sweep requires explicit seed and count")
        rng = random.Random(seed)
        pairs = _vertex_pairs(n)
        records = []
        for _ in range(count):
            mask = rng.getrandbits(len(pairs))
            g = graph_from_mask(n, mask, pairs)
            rec = _examine(g, mask, a, b, rho_value, budget)
            if rec is not None:
                records.append(rec)
        return records
    raise ValueError(f"unknown sweep source {source!r}")


def sweep_summary(records: list[SweepRecord]) -> dict:
    verdicts = [r.verdict for r in records]
    return {
        "records": len(records),
        "candidates": sum(1 for r in records if r.classification == "candidate"),
        "boundary": sum(1 for r in records if r.classification == "boundary"),
        "present": verdicts.count("present"),
        "absent": verdicts.count("absent"),
        "budget_exhausted": verdicts.count("budget_exhausted"),
    }
