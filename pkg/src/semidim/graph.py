"""Total graphs of semirings: construction, distances, twins, DOT export."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import CapExceededError, UnknownVertexError
from .product import ProductSemiring, zero_divisor_masks
from .semiring import SemiringTable, require_admissible, zero_divisors

UNREACHABLE = -1
GRAPH_CAP = 4096


class TotalGraph:
    """A simple undirected graph on an ordered vertex list.

    ``adj`` is a read-only symmetric boolean matrix indexed by vertex position.
    ``restricted`` marks the zero-divisor subgraph (vertex set Z(S)).
    """

    def __init__(
        self,
        vertices: Sequence[Hashable],
        adj: np.ndarray,
        restricted: bool = True,
        labels: Sequence[str] | None = None,
    ):
        adj = np.array(adj, dtype=bool)
        n = len(vertices)
        if adj.shape != (n, n):
            raise ValueError(f"adjacency shape {adj.shape} does not match {n} vertices")
        if (adj != adj.T).any() or adj.diagonal().any():
            raise ValueError("adjacency must be symmetric and irreflexive")
        adj.setflags(write=False)
        self.vertices = tuple(vertices)
        self.adj = adj
        self.restricted = restricted
        self.labels = tuple(labels) if labels is not None else tuple(str(v) for v in self.vertices)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        self._dist: np.ndarray | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> TotalGraph:
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u != v:
                adj[u, v] = adj[v, u] = True
        return cls(list(range(n)), adj, restricted=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        kind = "restricted" if self.restricted else "full"
        return f"<TotalGraph {kind} |V|={len(self)} |E|={self.edge_count()}>"

    def position(self, v: Hashable) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise UnknownVertexError(f"{v!r} is not a vertex of this graph") from None

    def neighbors(self, i: int) -> frozenset[int]:
        return frozenset(int(j) for j in np.flatnonzero(self.adj[i]))

    def degree(self, i: int) -> int:
        return int(self.adj[i].sum())

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adj))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def distances(self) -> np.ndarray:
        if self._dist is None:
            self._dist = distances(self)
        return self._dist


def _graph_from_table(t: SemiringTable, restricted: bool) -> TotalGraph:
    z = zero_divisors(t)
    inz = np.zeros(t.order, dtype=bool)
    inz[list(z)] = True
    verts = sorted(z) if restricted else list(range(t.order))
    if len(verts) > GRAPH_CAP:
        raise CapExceededError(f"graph would have {len(verts)} vertices (cap {GRAPH_CAP})")
    sums = t.add[np.ix_(verts, verts)]
    adj = inz[sums]
    np.fill_diagonal(adj, False)
    return TotalGraph(verts, adj, restricted, [t.labels[v] for v in verts])


def _graph_from_product(p: ProductSemiring, restricted: bool) -> TotalGraph:
    masks = zero_divisor_masks(p)
    size = p.order - math.prod(int((~m).sum()) for m in masks) if restricted else p.order
    if size > GRAPH_CAP:
        raise CapExceededError(f"graph would have {size} vertices (cap {GRAPH_CAP})")
    verts = []
    patterns = []
    for a in p.elements():
        bits = 0
        for i, (m, x) in enumerate(zip(masks, a)):
            if m[x]:
                bits |= 1 << i
        if bits or not restricted:
            verts.append(a)
            patterns.append(bits)
    # a + c lies in Z(S) iff some coordinate has a_i, c_i both in Z(S_i)
    pat = np.array(patterns, dtype=np.int64)
    adj = (pat[:, None] & pat[None, :]) != 0
    np.fill_diagonal(adj, False)
    return TotalGraph(verts, adj, restricted, [p.label(a) for a in verts])


def build_total_graph(s: SemiringTable | ProductSemiring, restricted: bool = True) -> TotalGraph:
    """Total graph Γ(S) (``restricted=False``) or its zero-divisor part Γ₁(S).

    Tables are evaluated directly (x + y in Z(S)).  Products use the
    coordinatewise zero-divisor pattern of each element, which is valid for
    antinegative factors whose zero-divisors are closed under addition.
    """
    if isinstance(s, ProductSemiring):
        for f in s.factors:
            require_admissible(f)
        return _graph_from_product(s, restricted)
    require_admissible(s)
    return _graph_from_table(s, restricted)


def distances(g: TotalGraph) -> np.ndarray:
    """All-pairs BFS distances, layer by layer on the adjacency matrix."""
    n = len(g)
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    if n == 0:
        return dist
    A = g.adj.astype(np.float32)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    dist[reached] = 0
    k = 0
    while frontier.any():
        k += 1
        nxt = (frontier.astype(np.float32) @ A > 0) & ~reached
        dist[nxt] = k
        reached |= nxt
        frontier = nxt
    dist.setflags(write=False)
    return dist


def diameter(g: TotalGraph) -> int:
    """Largest distance, or UNREACHABLE if the graph is disconnected."""
    d = g.distances()
    if (d == UNREACHABLE).any():
        return UNREACHABLE
    return int(d.max()) if len(g) else 0


def is_connected(g: TotalGraph) -> bool:
    return not (g.distances() == UNREACHABLE).any()


@dataclass(frozen=True)
class TwinClass:
    members: tuple[int, ...]
    # "open" when members share N(v), "closed" when they share N[v], "single" otherwise
    kind: str
    neighborhood: frozenset[int]


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[TwinClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def blocks(self) -> list[tuple[int, ...]]:
        return [c.members for c in self.classes]

    def class_of(self) -> dict[int, int]:
        return {v: k for k, c in enumerate(self.classes) for v in c.members}


def twin_partition(g: TotalGraph) -> TwinPartition:
    """Maximal classes of the twin relation (equal open or equal closed neighborhoods).

    A vertex with a nontrivial open-twin class can never also have a closed
    twin, so grouping the two signatures separately yields the partition.
    """
    n = len(g)
    open_groups: dict[bytes, list[int]] = {}
    closed_groups: dict[bytes, list[int]] = {}
    for i in range(n):
        row = g.adj[i].copy()
        open_groups.setdefault(np.packbits(row).tobytes(), []).append(i)
        row[i] = True
        closed_groups.setdefault(np.packbits(row).tobytes(), []).append(i)
    assigned: dict[int, TwinClass] = {}
    for kind, groups in (("open", open_groups), ("closed", closed_groups)):
        for members in groups.values():
            if len(members) < 2:
                continue
            nb = g.neighbors(members[0])
            if kind == "closed":
                nb = nb | {members[0]}
            cls = TwinClass(tuple(members), kind, nb)
            for v in members:
                # the two signature kinds cannot both be nontrivial for one vertex
                assert v not in assigned
                assigned[v] = cls
    classes = []
    seen = set()
    for i in range(n):
        if i in assigned:
            c = assigned[i]
            if c.members not in seen:
                seen.add(c.members)
                classes.append(c)
        else:
            classes.append(TwinClass((i,), "single", g.neighbors(i)))
    return TwinPartition(tuple(classes))


def are_twins(g: TotalGraph, u: int, v: int) -> bool:
    nu, nv = g.neighbors(u), g.neighbors(v)
    return u != v and (nu == nv or nu | {u} == nv | {v})


def pattern_partition(p: ProductSemiring, g: TotalGraph) -> list[tuple[int, ...]]:
    """Group the vertices of a product graph by coordinatewise zero-divisor pattern."""
    masks = zero_divisor_masks(p)
    groups: dict[tuple[bool, ...], list[int]] = {}
    for i, a in enumerate(g.vertices):
        key = tuple(bool(m[x]) for m, x in zip(masks, a))
        groups.setdefault(key, []).append(i)
    return sorted(tuple(v) for v in groups.values())


def twin_pattern_mismatches(p: ProductSemiring, g: TotalGraph) -> list[tuple[int, ...]]:
    """Graph twin classes that merge more than one pattern class.

    Empty when the pattern characterization of twins holds exactly.
    """
    pattern_of = {}
    for k, block in enumerate(pattern_partition(p, g)):
        for v in block:
            pattern_of[v] = k
    out = []
    for cls in twin_partition(g).classes:
        if len({pattern_of[v] for v in cls.members}) > 1:
            out.append(cls.members)
    # the reverse direction (one pattern split across graph classes) is also a mismatch
    graph_of = twin_partition(g).class_of()
    for block in pattern_partition(p, g):
        if len({graph_of[v] for v in block}) > 1:
            out.append(block)
    return out


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: TotalGraph, name: str = "G") -> str:
    lines = [f"graph {_dot_id(name)} {{"]
    for lab in g.labels:
        lines.append(f"  {_dot_id(lab)};")
    for u, v in sorted(g.edges()):
        lines.append(f"  {_dot_id(g.labels[u])} -- {_dot_id(g.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
