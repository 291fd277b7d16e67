"""Resolving sets and exact metric dimension.

Two independent routes compute the dimension:

* :func:`metric_dimension_oracle` enumerates vertex subsets by size and
  tests each one as a hitting set of the "distinguished pairs" bitmasks.
* :func:`metric_dimension_exact` uses twin classes to fix a mandatory core
  and refines the core's distance-vector partition over the remaining
  choices.

Both return the lexicographically least minimum resolving set.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from .errors import CapExceededError
from .graph import UNREACHABLE, TotalGraph, twin_partition

ORACLE_CAP = 24
SOLVER_CAP = 4096


class Method(enum.Enum):
    ORACLE = "ORACLE"
    PRUNED = "PRUNED"


@dataclass(frozen=True)
class ResolvingSetResult:
    dimension: int
    witness: tuple
    method: Method


@dataclass(frozen=True)
class Representation:
    vertex: Hashable
    distances: tuple[int, ...]


@dataclass(frozen=True)
class ResolveCheck:
    resolving: bool
    collision: tuple | None = None

    def __bool__(self) -> bool:
        return self.resolving


def representation(g: TotalGraph, v: Hashable, W: Sequence[Hashable]) -> Representation:
    i = g.position(v)
    cols = [g.position(w) for w in W]
    d = g.distances()
    return Representation(v, tuple(int(d[i, c]) for c in cols))


def is_resolving(g: TotalGraph, W: Sequence[Hashable]) -> ResolveCheck:
    cols = [g.position(w) for w in W]
    d = g.distances()
    seen: dict[tuple[int, ...], int] = {}
    for i in range(len(g)):
        key = tuple(int(x) for x in d[i, cols])
        if key in seen:
            return ResolveCheck(False, (g.vertices[seen[key]], g.vertices[i]))
        seen[key] = i
    return ResolveCheck(True)


def _witness(g: TotalGraph, positions) -> tuple:
    return tuple(g.vertices[i] for i in sorted(positions))


def metric_dimension_oracle(g: TotalGraph) -> ResolvingSetResult:
    """Naive search: subsets in increasing size, lexicographic within a size."""
    n = len(g)
    if n > ORACLE_CAP:
        raise CapExceededError(f"oracle is capped at {ORACLE_CAP} vertices, got {n}")
    d = g.distances()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    full = (1 << len(pairs)) - 1
    masks = []
    for w in range(n):
        m = 0
        for k, (u, v) in enumerate(pairs):
            if d[u, w] != d[v, w]:
                m |= 1 << k
        masks.append(m)

    def search(start: int, left: int, acc: int, chosen: list[int]) -> list[int] | None:
        if left == 0:
            return list(chosen) if acc == full else None
        for w in range(start, n - left + 1):
            chosen.append(w)
            hit = search(w + 1, left - 1, acc | masks[w], chosen)
            chosen.pop()
            if hit is not None:
                return hit
        return None

    for size in range(n + 1):
        hit = search(0, size, 0, [])
        if hit is not None:
            return ResolvingSetResult(size, _witness(g, hit), Method.ORACLE)
    raise AssertionError("the full vertex set always resolves")


def check_twin_lower_bound(g: TotalGraph) -> int:
    """|V| minus the number of twin classes; every resolving set is at least this big."""
    if len(g) <= 1:
        return 0
    return len(g) - len(twin_partition(g))


def _distinct_rows(keys: np.ndarray) -> np.ndarray:
    """Dense relabelling of the rows of an integer matrix (or entries of a vector)."""
    if keys.ndim == 1:
        return np.unique(keys, return_inverse=True)[1].reshape(-1)
    if keys.shape[1] == 0:
        return np.zeros(keys.shape[0], dtype=np.int64)
    return np.unique(keys, axis=0, return_inverse=True)[1].reshape(-1)


def metric_dimension_exact(g: TotalGraph) -> ResolvingSetResult:
    """Twin-pruned exact search.

    Every resolving set keeps all but at most one vertex of each twin class,
    and swapping twins is an automorphism.  So a minimum resolving set is the
    core (each class minus its largest vertex) plus the largest vertices of
    some classes.  Choices are scanned by size and then lexicographically,
    which yields the lexicographically least minimum resolving set.
    """
    n = len(g)
    if n > SOLVER_CAP:
        raise CapExceededError(f"solver is capped at {SOLVER_CAP} vertices, got {n}")
    if n <= 1:
        return ResolvingSetResult(0, (), Method.PRUNED)
    d = np.array(g.distances(), dtype=np.int64)
    finite_max = int(d.max()) if d.size else 0
    d[d == UNREACHABLE] = finite_max + 1
    base = finite_max + 2

    classes = twin_partition(g).blocks()
    heads = sorted(max(c) for c in classes)
    head_set = set(heads)
    core = [i for i in range(n) if i not in head_set]
    labels = _distinct_rows(d[:, core])
    k = len(heads)
    hd = d[:, heads]

    def resolved(lab: np.ndarray) -> bool:
        return int(lab.max()) + 1 == n

    def search(start: int, left: int, lab: np.ndarray, chosen: list[int]) -> list[int] | None:
        if left == 0:
            return list(chosen) if resolved(lab) else None
        # each further column splits a block into at most `base` parts
        if np.bincount(lab).max() > base ** left:
            return None
        if left == 1:
            cand = hd[:, start:]
            if cand.shape[1] == 0:
                return None
            keys = np.sort(lab[:, None] * base + cand, axis=0)
            hits = np.flatnonzero(~(keys[1:] == keys[:-1]).any(axis=0))
            if len(hits) == 0:
                return None
            return chosen + [start + int(hits[0])]
        for j in range(start, k - left + 1):
            chosen.append(j)
            hit = search(j + 1, left - 1, _distinct_rows(lab * base + hd[:, j]), chosen)
            chosen.pop()
            if hit is not None:
                return hit
        return None

    for extra in range(k + 1):
        hit = search(0, extra, labels, [])
        if hit is not None:
            picked = core + [heads[j] for j in hit]
            return ResolvingSetResult(len(picked), _witness(g, picked), Method.PRUNED)
    raise AssertionError("the full vertex set always resolves")


def is_irredundant(g: TotalGraph, W: Sequence[Hashable]) -> bool:
    """W resolves, but dropping any single vertex of W does not."""
    if not is_resolving(g, W):
        return False
    if not W:
        return True
    return not any(is_resolving(g, sub) for sub in itertools.combinations(W, len(W) - 1))
