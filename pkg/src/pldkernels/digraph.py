"""Loopless simple digraphs, distances and the arc-set operators.

Vertices are the dense integers ``0..n-1``.  Vertex sets are returned as
sorted tuples and arc sets as sorted tuples of ``(tail, head)`` pairs, so
every result has a canonical, hashable form.  Hot loops elsewhere in the
package work on integer bitmasks; :func:`to_mask` and :func:`from_mask`
convert between the two encodings.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

Arc = tuple[int, int]
VertexSet = tuple[int, ...]
ArcSet = tuple[Arc, ...]

#: Distance of an unreachable pair.  Compares greater than every int and
#: absorbs addition, so ``d(x, y) + d(y, z)`` never overflows.
INF = math.inf


class DigraphError(ValueError):
    """Invalid digraph data."""


class LoopArc(DigraphError):
    def __init__(self, u: int):
        super().__init__(f"loop arc at vertex {u}")
        self.vertex = u


class DuplicateArc(DigraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate arc ({u}, {v})")
        self.arc = (u, v)


class VertexOutOfRange(DigraphError):
    def __init__(self, v: int, n: int):
        super().__init__(f"vertex {v} outside 0..{n - 1}")
        self.vertex = v


@dataclass(frozen=True)
class Digraph:
    """Immutable loopless simple digraph on ``range(n)``.

    Digons (both ``(u, v)`` and ``(v, u)``) are allowed.  ``labels`` is an
    optional display name per vertex; it never affects equality of the
    arc structure but is carried along for readable output.
    """

    n: int
    arcs: ArcSet
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise DigraphError(f"negative vertex count {self.n}")
        seen = set()
        for u, v in self.arcs:
            for w in (u, v):
                if not 0 <= w < self.n:
                    raise VertexOutOfRange(w, self.n)
            if u == v:
                raise LoopArc(u)
            if (u, v) in seen:
                raise DuplicateArc(u, v)
            seen.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted((int(u), int(v)) for u, v in self.arcs)))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise DigraphError("one label per vertex required")
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))

    @cached_property
    def out_adjacency(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(a) for a in out)

    @cached_property
    def in_adjacency(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(a)) for a in inn)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(a) for a in self.out_adjacency)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(a) for a in self.in_adjacency)

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def distances(self) -> "DistanceOracle":
        return DistanceOracle(_bfs_matrix(self))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def in_degree(self, v: int) -> int:
        return len(self.in_adjacency[v])

    def out_degree(self, v: int) -> int:
        return len(self.out_adjacency[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v + 1)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def build_digraph(n: int, arcs: Iterable[Sequence[int]], labels: Optional[Sequence[str]] = None) -> Digraph:
    """Validate and build a digraph from 0-based ``(u, v)`` pairs."""
    return Digraph(n, tuple((int(u), int(v)) for u, v in arcs), None if labels is None else tuple(labels))


def cycle(n: int) -> Digraph:
    """Directed cycle ``0 -> 1 -> ... -> n-1 -> 0``."""
    return build_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> VertexSet:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


class DistanceOracle:
    """All-pairs shortest directed path lengths, ``INF`` when unreachable."""

    def __init__(self, matrix: Sequence[Sequence[float]]):
        self.matrix = tuple(tuple(row) for row in matrix)
        self._balls: dict[int, tuple[int, ...]] = {}

    def __call__(self, x: int, y: int) -> float:
        return self.matrix[x][y]

    def __len__(self) -> int:
        return len(self.matrix)

    def ball(self, r: float) -> tuple[int, ...]:
        """Per vertex x, bitmask of the y with ``1 <= d(x, y) <= r``."""
        if r not in self._balls:
            self._balls[r] = tuple(
                to_mask(y for y, d in enumerate(row) if 1 <= d <= r) for row in self.matrix
            )
        return self._balls[r]

    def reverse_ball(self, r: float) -> tuple[int, ...]:
        """Per vertex y, bitmask of the x with ``1 <= d(x, y) <= r``."""
        key = -r - 1
        if key not in self._balls:
            n = len(self.matrix)
            self._balls[key] = tuple(
                to_mask(x for x in range(n) if 1 <= self.matrix[x][y] <= r) for y in range(n)
            )
        return self._balls[key]


def _bfs_matrix(D: Digraph) -> list[list[float]]:
    rows = []
    for s in range(D.n):
        dist: list[float] = [INF] * D.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in D.out_adjacency[u]:
                if dist[v] == INF:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        rows.append(dist)
    return rows


def all_pairs_distances(D: Digraph) -> DistanceOracle:
    return D.distances


def min_in_degree(D: Digraph) -> int:
    """Minimum in-degree; 0 for the empty digraph."""
    return min((len(a) for a in D.in_adjacency), default=0)


def min_out_degree(D: Digraph) -> int:
    return min((len(a) for a in D.out_adjacency), default=0)


def girth(D: Digraph) -> float:
    """Length of a shortest directed cycle, ``INF`` if ``D`` is acyclic."""
    d = D.distances
    return min((d(v, u) + 1 for u, v in D.arcs), default=INF)


def is_acyclic(D: Digraph) -> bool:
    return girth(D) == INF


def topological_order(D: Digraph) -> list[int]:
    """Kahn's algorithm; raises ``ValueError`` on a cycle."""
    indeg = [len(a) for a in D.in_adjacency]
    ready = deque(v for v in range(D.n) if indeg[v] == 0)
    order = []
    while ready:
        u = ready.popleft()
        order.append(u)
        for v in D.out_adjacency[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    if len(order) != D.n:
        raise ValueError("digraph has a directed cycle")
    return order


def omega_minus(D: Digraph, v: int) -> ArcSet:
    """Arcs with head ``v``."""
    return tuple((u, v) for u in D.in_adjacency[v])


def omega_plus(D: Digraph, v: int) -> ArcSet:
    """Arcs with tail ``v``."""
    return tuple((v, w) for w in D.out_adjacency[v])


def omega_minus_set(D: Digraph, U: Iterable[int]) -> ArcSet:
    """Arcs entering ``U`` from outside."""
    inside = set(U)
    return tuple((x, y) for x, y in D.arcs if y in inside and x not in inside)


def omega_plus_set(D: Digraph, U: Iterable[int]) -> ArcSet:
    """Arcs leaving ``U``: tail inside, head outside."""
    inside = set(U)
    return tuple((x, y) for x, y in D.arcs if x in inside and y not in inside)


def heads(arcs: Iterable[Arc]) -> VertexSet:
    return tuple(sorted({v for _, v in arcs}))


def tails(arcs: Iterable[Arc]) -> VertexSet:
    return tuple(sorted({u for u, _ in arcs}))


def out_neighborhood_r(D: Digraph, x: int, r: int) -> VertexSet:
    """Vertices ``y`` with ``1 <= d(x, y) <= r``; never contains ``x``."""
    if r < 1:
        raise ValueError("radius must be at least 1")
    return from_mask(D.distances.ball(r)[x])


def relabel(D: Digraph, labels: Sequence[str]) -> Digraph:
    return Digraph(D.n, D.arcs, tuple(labels))
