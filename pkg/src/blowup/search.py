"""Search for graphs with a large (lambda_k + 1)/n limit ratio.

Three strategies: exhaustive enumeration over all labeled graphs on up to
8 vertices (8 needs an explicit acknowledgment flag), a streaming maximum
over externally supplied graph6 lines, and seeded local search (hill climb
or simulated annealing) over edge toggles.

Determinism: a (seed, config) pair gives byte-identical results within one
build. The generator is numpy's PCG64 behind default_rng. Ties are broken
by higher ratio first, then lexicographically smallest graph6 string, so
chunked and serial scans agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import GraphParseError, InternalConsistencyError, NumericError
from .bounds import nikiforov_upper
from .graphs import Graph, g6_decode, g6_encode, g6_encode_bits, triu_pair_arrays
from .spectra import eigen_spectrum

#: seed used when the caller does not provide one
DEFAULT_SEED = 1729

#: slack for comparisons against proven or open thresholds
THRESHOLD_TOL = 1e-9

EXHAUSTIVE_FREE_MAX = 7
EXHAUSTIVE_HARD_MAX = 8


@dataclass(frozen=True)
class SearchConfig:
    """Parameters for local search; defaults follow the documented schedule."""

    k: int
    n: int
    method: str = "anneal"  # "hillclimb" or "anneal"
    seed: int = DEFAULT_SEED
    budget: int = 10_000
    restarts: int = 10
    t0: float = 0.05
    cooling: float = 0.999
    stall: int = 5000

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.n < self.k:
            raise ValueError("need n >= k so lambda_k exists")
        if self.n > 64:
            raise ValueError("local search is desk-scale: n <= 64")
        if self.method not in ("hillclimb", "anneal"):
            raise ValueError(f"unknown method '{self.method}'")
        if self.budget < 1 or self.restarts < 0 or self.stall < 1:
            raise ValueError("budget and stall must be positive, restarts nonnegative")
        if not (0 < self.cooling <= 1) or self.t0 <= 0:
            raise ValueError("need 0 < cooling <= 1 and t0 > 0")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search: the best ratio seen and its graph6 witness."""

    best_ratio: float
    best_graph: str
    evaluations: int
    k: int
    n: int | None
    seed: int | None
    method: str
    history: tuple[tuple[int, float], ...] = field(default=())

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "method": self.method,
            "seed": self.seed,
            "evaluations": self.evaluations,
            "best_ratio": self.best_ratio,
            "best_graph": self.best_graph,
            "history": [[i, r] for i, r in self.history],
        }


def _ratio_of_graph(g: Graph, k: int) -> float:
    lam = float(eigen_spectrum(g).kth(k))
    return max(0.0, (lam + 1.0) / g.n)


def _self_check(result: SearchResult) -> SearchResult:
    """Recompute the witness ratio and enforce the proven ceiling."""
    g = g6_decode(result.best_graph)
    again = _ratio_of_graph(g, result.k)
    if abs(again - result.best_ratio) > 1e-12:
        raise InternalConsistencyError(
            f"witness ratio drifted: stored {result.best_ratio}, recomputed {again}"
        )
    if result.k >= 2 and result.best_ratio > nikiforov_upper(result.k) + THRESHOLD_TOL:
        raise InternalConsistencyError(
            f"search ratio {result.best_ratio} for k={result.k} exceeds the proven "
            f"ceiling {nikiforov_upper(result.k)}; diagnostics: graph6={result.best_graph}"
        )
    return result


# -- exhaustive enumeration ------------------------------------------------------


def exhaustive_max(k: int, n: int, allow_large: bool = False, chunk: int = 1 << 16) -> SearchResult:
    """Maximum limit ratio over every labeled graph on n vertices.

    Free up to n = 7 (2^21 graphs); n = 8 costs 2^28 eigensolves and must be
    acknowledged with allow_large=True; larger n is refused. The edge masks
    follow graph6 bit order, so the tie-break (smallest graph6 string among
    equal ratios) is a plain integer comparison on bit-reversed masks.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < k:
        raise ValueError("need n >= k so lambda_k exists")
    if n > EXHAUSTIVE_HARD_MAX:
        raise ValueError(f"exhaustive search is capped at n = {EXHAUSTIVE_HARD_MAX}")
    if n == EXHAUSTIVE_HARD_MAX and not allow_large:
        raise ValueError(
            "n = 8 enumerates 2^28 graphs; pass allow_large=True to acknowledge the cost"
        )
    m = n * (n - 1) // 2
    total = 1 << m
    ii, jj = triu_pair_arrays(n)
    shifts = np.arange(m, dtype=np.uint64)
    revshifts = np.arange(m - 1, -1, -1, dtype=np.uint64) if m else shifts

    best_ratio = -math.inf
    best_rank = 0
    best_mask = 0
    history: list[tuple[int, float]] = []

    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        masks = np.arange(start, stop, dtype=np.uint64)
        if m:
            bits = ((masks[:, None] >> shifts) & np.uint64(1)).astype(np.float64)
        else:
            bits = np.zeros((len(masks), 0))
        a = np.zeros((len(masks), n, n))
        if m:
            a[:, ii, jj] = bits
            a[:, jj, ii] = bits
        try:
            w = np.linalg.eigvalsh(a)
        except np.linalg.LinAlgError as e:
            raise NumericError(f"batched eigensolver failed: {e}") from e
        ratios = np.maximum(0.0, (w[:, n - k] + 1.0) / n)
        mx = float(ratios.max())
        if mx < best_ratio:
            continue
        cand = np.nonzero(ratios == mx)[0]
        if m:
            ranks = ((bits[cand].astype(np.uint64)) << revshifts).sum(axis=1)
        else:
            ranks = np.zeros(len(cand), dtype=np.uint64)
        pick = int(cand[np.argmin(ranks)])
        rank = int(ranks[np.argmin(ranks)])
        if mx > best_ratio:
            first = int(cand[0])
            history.append((start + first + 1, mx))
            best_ratio, best_rank, best_mask = mx, rank, int(masks[pick])
        elif rank < best_rank:
            best_rank, best_mask = rank, int(masks[pick])

    edge_bits = (np.uint64(best_mask) >> shifts) & np.uint64(1) if m else np.zeros(0, np.uint64)
    witness = g6_encode_bits(n, np.asarray(edge_bits, dtype=np.uint8))
    result = SearchResult(
        best_ratio=best_ratio,
        best_graph=witness,
        evaluations=total,
        k=k,
        n=n,
        seed=None,
        method="exhaustive",
        history=tuple(history),
    )
    return _self_check(result)


# -- streaming maximum -------------------------------------------------------------


def stream_max(k: int, lines: Iterable[str], on_error: str = "raise") -> SearchResult:
    """Maximum limit ratio over a stream of graph6 lines.

    Blank lines and a '>>graph6<<' header are skipped. Malformed lines or
    graphs with fewer than k vertices raise GraphParseError tagged with the
    line number, or are counted and skipped with on_error='skip'. An empty
    stream (no usable graphs) is an error.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if on_error not in ("raise", "skip"):
        raise ValueError("on_error must be 'raise' or 'skip'")
    best: tuple[float, str] | None = None
    evaluations = 0
    skipped = 0
    history: list[tuple[int, float]] = []
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if text.startswith(">>graph6<<"):
            text = text[len(">>graph6<<") :]
        if not text:
            continue
        try:
            g = g6_decode(text)
            if g.n < k:
                raise GraphParseError(f"graph has n={g.n} < k={k}")
            ratio = _ratio_of_graph(g, k)
        except (GraphParseError, ValueError) as e:
            if on_error == "skip":
                skipped += 1
                continue
            raise GraphParseError(f"line {lineno}: {e}") from None
        evaluations += 1
        canon = g6_encode(g)
        key = (-ratio, canon)
        if best is None or key < (-best[0], best[1]):
            if best is None or ratio > best[0]:
                history.append((evaluations, ratio))
            best = (ratio, canon)
    if best is None:
        raise ValueError(f"empty stream: no usable graphs ({skipped} skipped)")
    result = SearchResult(
        best_ratio=best[0],
        best_graph=best[1],
        evaluations=evaluations,
        k=k,
        n=None,
        seed=None,
        method="stream",
        history=tuple(history),
    )
    return _self_check(result)


# -- local search --------------------------------------------------------------------


def local_search(cfg: SearchConfig) -> SearchResult:
    """Seeded hill climb or simulated annealing over single edge toggles.

    Each phase starts from a fresh random graph. Annealing accepts a
    worsening move of size delta < 0 with probability exp(delta/T), cooling
    geometrically on every acceptance; the hill climb accepts only strict
    improvements. A phase restarts after cfg.stall consecutive rejections,
    up to cfg.restarts extra phases, within a total evaluation budget. The
    result is never below the best initial state encountered.
    """
    n, k, m = cfg.n, cfg.k, cfg.n * (cfg.n - 1) // 2
    ii, jj = triu_pair_arrays(n)
    rng = np.random.default_rng(cfg.seed)
    anneal = cfg.method == "anneal"

    a = np.zeros((n, n))

    def objective(state: np.ndarray) -> float:
        a[ii, jj] = state
        a[jj, ii] = state
        try:
            w = np.linalg.eigvalsh(a)
        except np.linalg.LinAlgError as e:
            raise NumericError(f"eigensolver failed during search: {e}") from e
        return max(0.0, (float(w[n - k]) + 1.0) / n)

    evaluations = 0
    best_ratio = -math.inf
    best_state: np.ndarray | None = None
    history: list[tuple[int, float]] = []

    for _phase in range(cfg.restarts + 1):
        if evaluations >= cfg.budget:
            break
        state = rng.random(m) < 0.5
        current = objective(state)
        evaluations += 1
        if current > best_ratio:
            best_ratio, best_state = current, state.copy()
            history.append((evaluations, current))
        temp = cfg.t0
        rejections = 0
        while evaluations < cfg.budget and rejections < cfg.stall:
            if m == 0:
                break
            e = int(rng.integers(m))
            state[e] = not state[e]
            value = objective(state)
            evaluations += 1
            delta = value - current
            if delta > 0:
                accept = True
            elif anneal:
                accept = rng.random() < math.exp(delta / temp)
            else:
                accept = False
            if accept:
                current = value
                rejections = 0
                if anneal:
                    temp *= cfg.cooling
                if value > best_ratio:
                    best_ratio, best_state = value, state.copy()
                    history.append((evaluations, value))
            else:
                state[e] = not state[e]
                rejections += 1
        if m == 0:
            break

    assert best_state is not None
    witness = g6_encode_bits(n, best_state.astype(np.uint8))
    result = SearchResult(
        best_ratio=best_ratio,
        best_graph=witness,
        evaluations=evaluations,
        k=k,
        n=n,
        seed=cfg.seed,
        method=cfg.method,
        history=tuple(history),
    )
    return _self_check(result)


# -- the k = 3 campaign -----------------------------------------------------------------

C3_THRESHOLD = 1.0 / 3.0


@dataclass(frozen=True)
class CampaignReport:
    """Outcome of an annealing sweep hunting for a ratio above 1/3 at k = 3."""

    per_n: tuple[SearchResult, ...]
    exceeded: bool
    witness: dict | None

    @property
    def best(self) -> SearchResult | None:
        if not self.per_n:
            return None
        return min(self.per_n, key=lambda r: (-r.best_ratio, r.best_graph))

    def to_json_obj(self) -> dict:
        best = self.best
        return {
            "k": 3,
            "threshold": C3_THRESHOLD,
            "runs": [r.to_json_obj() for r in self.per_n],
            "best": best.to_json_obj() if best else None,
            "exceeded": self.exceeded,
            "witness": self.witness,
        }


def c3_campaign(
    ns: Iterable[int] = (6, 9, 12),
    seeds: Iterable[int] = (DEFAULT_SEED, DEFAULT_SEED + 1, DEFAULT_SEED + 2),
    budget: int = 30_000,
    restarts: int = 10,
) -> CampaignReport:
    """Anneal for lambda_3 across several orders; flag any ratio above 1/3.

    Returns the best run per n and, if the open threshold 1/3 is beaten by
    more than 1e-9, a witness block with the graph6 string, the numeric
    spectrum, and the recomputed ratio. An empty ns gives an empty report.
    """
    seeds = tuple(seeds)
    best_per_n: list[SearchResult] = []
    for n in ns:
        runs = [
            local_search(SearchConfig(k=3, n=n, method="anneal", seed=s, budget=budget, restarts=restarts))
            for s in seeds
        ]
        best_per_n.append(min(runs, key=lambda r: (-r.best_ratio, r.best_graph)))
    overall = min(best_per_n, key=lambda r: (-r.best_ratio, r.best_graph)) if best_per_n else None
    exceeded = overall is not None and overall.best_ratio > C3_THRESHOLD + THRESHOLD_TOL
    witness = None
    if exceeded:
        g = g6_decode(overall.best_graph)
        witness = {
            "graph6": overall.best_graph,
            "n": g.n,
            "ratio": overall.best_ratio,
            "spectrum": eigen_spectrum(g).to_json_obj(),
            "seed": overall.seed,
        }
    return CampaignReport(tuple(best_per_n), exceeded, witness)
