"""(k,l)-Grundy functions.

A labelling ``g: V -> N`` is a (k,l)-Grundy function when, at every
vertex ``x`` with ``g(x) = t``:

1. every value ``j < t`` occurs on some ``y`` with ``1 <= d(x, y) <= l``;
2. no ``y`` with ``1 <= d(x, y) <= k - 1`` has ``g(y) = t``.

(2,1) gives the classical Grundy function.  Labellings are tuples indexed
by vertex.
"""

from __future__ import annotations

from typing import Sequence

from .digraph import Digraph, VertexSet, from_mask, is_acyclic, topological_order
from .domination import is_kl_kernel
from .pld import PartialLineMap, build_pld

Labeling = tuple[int, ...]


class GrundyError(ValueError):
    pass


class NotAcyclic(GrundyError):
    pass


class NotAGrundyFunction(GrundyError):
    pass


class PreconditionLViolation(GrundyError):
    pass


class IllDefinedProjection(GrundyError):
    """Two kept in-arcs of one vertex carry different values."""

    def __init__(self, vertex: int, values: Sequence[int]):
        super().__init__(f"in-arcs of vertex {vertex} carry values {sorted(set(values))}")
        self.vertex = vertex
        self.values = tuple(values)


def _check_kl(k: int, l: int) -> None:
    if k < 2 or l < 1:
        raise ValueError(f"need k >= 2 and l >= 1, got k={k}, l={l}")


def is_kl_grundy(D: Digraph, g: Sequence[int], k: int, l: int) -> bool:
    _check_kl(k, l)
    if len(g) != D.n or any(v < 0 for v in g):
        return False
    reach = D.distances.ball(l)
    near = D.distances.ball(k - 1)
    for x in range(D.n):
        t = g[x]
        seen = {g[y] for y in from_mask(reach[x])}
        if any(j not in seen for j in range(t)):
            return False
        if any(g[y] == t for y in from_mask(near[x])):
            return False
    return True


def is_grundy(D: Digraph, g: Sequence[int]) -> bool:
    return is_kl_grundy(D, g, 2, 1)


def enumerate_kl_grundy(D: Digraph, k: int, l: int) -> list[Labeling]:
    """Every (k,l)-Grundy function of ``D``, sorted by value vector.

    Backtracking with forward checking.  Each vertex keeps a bitmask of
    still-allowed values, initially ``0..|N+_l(x)|``: condition (1) forces
    that bound since ``t`` distinct smaller values need ``t`` distinct
    vertices.  Assigning ``t`` removes it from every vertex within
    distance ``k - 1`` in either direction (condition (2)).  Condition (1)
    is checked whenever a vertex or one of its radius-``l`` targets is
    assigned: the smaller values not yet present must each remain
    available to some unassigned target.  The next vertex is one with the
    fewest allowed values.
    """
    _check_kl(k, l)
    n = D.n
    dist = D.distances
    reach = [from_mask(m) for m in dist.ball(l)]
    clash = [from_mask(f | b) for f, b in zip(dist.ball(k - 1), dist.reverse_ball(k - 1))]
    watchers: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        for y in reach[x]:
            watchers[y].append(x)
    g = [-1] * n
    out: list[Labeling] = []

    def demand_ok(x: int, dom: list[int]) -> bool:
        t = g[x]
        if t <= 0:
            return True
        seen = avail = 0
        open_slots = 0
        for y in reach[x]:
            if g[y] < 0:
                open_slots += 1
                avail |= dom[y]
            else:
                seen |= 1 << g[y]
        missing = ((1 << t) - 1) & ~seen
        return not missing & ~avail and bin(missing).count("1") <= open_slots

    def rec(dom: list[int], left: int) -> None:
        if not left:
            out.append(tuple(g))
            return
        v = min((x for x in range(n) if g[x] < 0), key=lambda x: bin(dom[x]).count("1"))
        values = dom[v]
        t = 0
        while values:
            if values & 1:
                g[v] = t
                bit = 1 << t
                nd = dom[:]
                ok = True
                for y in clash[v]:
                    if g[y] < 0:
                        nd[y] &= ~bit
                        if not nd[y]:
                            ok = False
                            break
                if ok and demand_ok(v, nd) and all(demand_ok(x, nd) for x in watchers[v] if g[x] > 0):
                    rec(nd, left - 1)
            values >>= 1
            t += 1
        g[v] = -1

    rec([(1 << (len(reach[x]) + 1)) - 1 for x in range(n)], n)
    return sorted(out)


def enumerate_grundy(D: Digraph) -> list[Labeling]:
    return enumerate_kl_grundy(D, 2, 1)


def acyclic_grundy(D: Digraph) -> Labeling:
    """The unique Grundy function of an acyclic digraph, by mex in reverse
    topological order."""
    if not is_acyclic(D):
        raise NotAcyclic("digraph has a directed cycle")
    g = [0] * D.n
    for x in reversed(topological_order(D)):
        taken = {g[y] for y in D.out_adjacency[x]}
        t = 0
        while t in taken:
            t += 1
        g[x] = t
    return tuple(g)


def grundy_zero_kernel(D: Digraph, g: Sequence[int], k: int, l: int) -> VertexSet:
    """Zero level of a (k,l)-Grundy function, which is a (k,l)-kernel."""
    if not is_kl_grundy(D, g, k, l):
        raise NotAGrundyFunction("labelling is not a (k,l)-Grundy function")
    K = tuple(x for x in range(D.n) if g[x] == 0)
    assert is_kl_kernel(D, K, k, l), "zero level of a Grundy function must be a kernel"
    return K


def lift_grundy(pmap: PartialLineMap, g: Sequence[int], k: int, l: int, pld: Digraph | None = None) -> Labeling:
    """Give each vertex ``yx`` of the partial line digraph the value ``g(x)``.

    ``pld`` is the already-built partial line digraph, if the caller has
    one; it is only used to check the result.
    """
    if not is_kl_grundy(pmap.base, g, k, l):
        raise NotAGrundyFunction("base labelling is not a (k,l)-Grundy function")
    lifted = tuple(g[x] for _, x in pmap.a_prime)
    if pld is None:
        pld = build_pld(pmap).digraph
    if not is_kl_grundy(pld, lifted, k, l):
        raise NotAGrundyFunction("lifted labelling failed on the partial line digraph")
    return lifted


def project_grundy(pmap: PartialLineMap, h: Sequence[int], k: int, l: int, pld: Digraph | None = None) -> Labeling:
    """Give each base vertex ``x`` the common value of its kept in-arcs.

    Needs ``l <= k - 1``.  Well-definedness is recomputed rather than
    assumed: disagreeing in-arcs raise :class:`IllDefinedProjection`.
    """
    _check_kl(k, l)
    if l > k - 1:
        raise PreconditionLViolation(f"projection needs l <= k - 1, got k={k}, l={l}")
    if pld is None:
        pld = build_pld(pmap).digraph
    if not is_kl_grundy(pld, h, k, l):
        raise NotAGrundyFunction("labelling is not a (k,l)-Grundy function of the partial line digraph")
    by_head: dict[int, list[int]] = {}
    for (_, x), value in zip(pmap.a_prime, h):
        by_head.setdefault(x, []).append(value)
    g = []
    for x in range(pmap.base.n):
        values = by_head[x]
        if len(set(values)) != 1:
            raise IllDefinedProjection(x, values)
        g.append(values[0])
    g = tuple(g)
    if not is_kl_grundy(pmap.base, g, k, l):
        raise NotAGrundyFunction("projected labelling failed on the base digraph")
    return g


__all__ = [
    "GrundyError",
    "IllDefinedProjection",
    "Labeling",
    "NotAGrundyFunction",
    "NotAcyclic",
    "PreconditionLViolation",
    "acyclic_grundy",
    "enumerate_grundy",
    "enumerate_kl_grundy",
    "grundy_zero_kernel",
    "is_grundy",
    "is_kl_grundy",
    "lift_grundy",
    "project_grundy",
]
