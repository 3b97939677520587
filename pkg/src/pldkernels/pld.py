"""Partial line digraphs.

A partial line map on a base digraph ``D`` is a pair ``(A', phi)`` where
``A'`` is a subset of the arcs whose heads cover every vertex, and ``phi``
sends every arc ``(i, j)`` to an arc of ``A'`` with the same head ``j``,
fixing ``A'`` pointwise.  The partial line digraph has ``A'`` as vertex
set and an arc ``(ij, phi(j, k))`` for every arc ``ij`` of ``A'`` and every
base arc ``(j, k)``.  Taking ``A' = A`` gives the ordinary line digraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import comb, prod
from typing import Iterator, Mapping, NamedTuple, Optional

from .digraph import Arc, ArcSet, Digraph, heads, min_in_degree


class PldError(ValueError):
    """A pair (A', phi) that does not define a partial line digraph."""


class MinInDegreeZero(PldError):
    def __init__(self, v: int):
        super().__init__(f"vertex {v} has in-degree 0")
        self.vertex = v


class ArcNotInBase(PldError):
    def __init__(self, arc: Arc):
        super().__init__(f"arc {arc} is not an arc of the base digraph")
        self.arc = arc


class HeadsNotCovering(PldError):
    def __init__(self, v: int):
        super().__init__(f"no arc of A' has head {v}")
        self.vertex = v


class PhiUndefined(PldError):
    def __init__(self, arc: Arc):
        super().__init__(f"phi is undefined on arc {arc} outside A'")
        self.arc = arc


class PhiNotFixing(PldError):
    def __init__(self, arc: Arc):
        super().__init__(f"phi moves arc {arc} of A'")
        self.arc = arc


class PhiWrongHead(PldError):
    def __init__(self, arc: Arc):
        super().__init__(f"phi{arc} has a different head")
        self.arc = arc


class PhiImageNotInAPrime(PldError):
    def __init__(self, arc: Arc):
        super().__init__(f"phi{arc} is not in A'")
        self.arc = arc


def _require_min_in_degree(base: Digraph) -> None:
    if base.n and min_in_degree(base) < 1:
        v = next(v for v in range(base.n) if not base.in_adjacency[v])
        raise MinInDegreeZero(v)


@dataclass(frozen=True)
class PartialLineMap:
    """A validated pair ``(A', phi)`` on ``base``.

    ``a_prime`` is sorted; vertex ``i`` of the partial line digraph is
    ``a_prime[i]``.  ``images[t]`` is ``phi(base.arcs[t])``.  Build
    instances with :func:`validate_pld`.
    """

    base: Digraph
    a_prime: ArcSet
    images: ArcSet

    def phi(self, arc: Arc) -> Arc:
        return self.images[self._arc_index[arc]]

    @cached_property
    def _arc_index(self) -> dict[Arc, int]:
        return {a: t for t, a in enumerate(self.base.arcs)}

    @cached_property
    def vertex_index(self) -> dict[Arc, int]:
        """Arc of ``A'`` -> vertex id in the partial line digraph."""
        return {a: i for i, a in enumerate(self.a_prime)}

    @property
    def phi_map(self) -> dict[Arc, Arc]:
        return dict(zip(self.base.arcs, self.images))

    @property
    def is_line_digraph(self) -> bool:
        return len(self.a_prime) == len(self.base.arcs)

    def to_json(self) -> dict:
        """1-based ``{a_prime: [[u, v], ...], phi: [[[u, v], [x, y]], ...]}``."""
        return {
            "a_prime": [[u + 1, v + 1] for u, v in self.a_prime],
            "phi": [[[u + 1, v + 1], [x + 1, y + 1]] for (u, v), (x, y) in zip(self.base.arcs, self.images)],
        }


def pld_from_json(base: Digraph, data: Mapping) -> PartialLineMap:
    a_prime = [(u - 1, v - 1) for u, v in data["a_prime"]]
    phi = {(a[0] - 1, a[1] - 1): (b[0] - 1, b[1] - 1) for a, b in data.get("phi", [])}
    return validate_pld(base, a_prime, phi)


def validate_pld(base: Digraph, a_prime, phi: Optional[Mapping[Arc, Arc]] = None) -> PartialLineMap:
    """Check conditions (i) and (ii) and return the validated map.

    ``phi`` may omit arcs of ``A'``; those default to the identity.  Raises
    the :class:`PldError` subclass naming the first violated condition.
    """
    _require_min_in_degree(base)
    phi = dict(phi or {})
    a_prime = tuple(sorted({(int(u), int(v)) for u, v in a_prime}))
    in_a_prime = set(a_prime)
    for arc in list(in_a_prime) + list(phi) + list(phi.values()):
        if not base.has_arc(*arc):
            raise ArcNotInBase(arc)
    covered = set(heads(a_prime))
    for v in range(base.n):
        if v not in covered:
            raise HeadsNotCovering(v)
    images = []
    for arc in base.arcs:
        image = phi.get(arc, arc if arc in in_a_prime else None)
        if image is None:
            raise PhiUndefined(arc)
        if arc in in_a_prime and image != arc:
            raise PhiNotFixing(arc)
        if image[1] != arc[1]:
            raise PhiWrongHead(arc)
        if image not in in_a_prime:
            raise PhiImageNotInAPrime(arc)
        images.append(image)
    return PartialLineMap(base, a_prime, tuple(images))


def identity_map(base: Digraph) -> PartialLineMap:
    """``A' = A`` with ``phi = id``."""
    return validate_pld(base, base.arcs)


@dataclass(frozen=True)
class LabeledPld:
    """A partial line digraph together with the map it was built from.

    ``vertex_label[i]`` is the base arc represented by vertex ``i``.
    """

    digraph: Digraph
    vertex_label: ArcSet
    source: PartialLineMap

    def vertex_of(self, arc: Arc) -> int:
        return self.source.vertex_index[arc]


def _arc_label(base: Digraph, arc: Arc) -> str:
    a, b = base.label(arc[0]), base.label(arc[1])
    return a + b if len(a) == 1 and len(b) == 1 else f"({a},{b})"


def build_pld(pmap: PartialLineMap) -> LabeledPld:
    base = pmap.base
    index = pmap.vertex_index
    arcs = set()
    for i, j in pmap.a_prime:
        for k in base.out_adjacency[j]:
            arcs.add((index[(i, j)], index[pmap.phi((j, k))]))
    labels = tuple(_arc_label(base, a) for a in pmap.a_prime)
    return LabeledPld(Digraph(len(pmap.a_prime), tuple(arcs), labels), pmap.a_prime, pmap)


def line_digraph(base: Digraph) -> LabeledPld:
    return build_pld(identity_map(base))


class PldBatch(NamedTuple):
    maps: list[PartialLineMap]
    truncated: bool


def iter_plds(base: Digraph) -> Iterator[PartialLineMap]:
    """Every valid ``(A', phi)`` in canonical order.

    ``A'`` is chosen arc by arc in sorted arc order, trying "keep" before
    "drop", so ``A' = A`` comes first and the indicator vectors of ``A'``
    descend lexicographically.  For a fixed ``A'`` the images of the
    dropped arcs run through the product of their candidate lists
    (``omega^-(j) & A'`` sorted), first dropped arc slowest.
    """
    _require_min_in_degree(base)
    arcs = base.arcs
    m = len(arcs)
    # last position of an arc with each head; dropping past it must leave one kept
    last = {}
    for t, (_, j) in enumerate(arcs):
        last[j] = t
    keep = [False] * m
    kept_head = [0] * base.n

    def choose(t: int) -> Iterator[tuple[Arc, ...]]:
        if t == m:
            yield tuple(a for a, kp in zip(arcs, keep) if kp)
            return
        j = arcs[t][1]
        keep[t] = True
        kept_head[j] += 1
        yield from choose(t + 1)
        kept_head[j] -= 1
        keep[t] = False
        if kept_head[j] or last[j] != t:
            yield from choose(t + 1)

    for a_prime in choose(0):
        kept = set(a_prime)
        dropped = [a for a in arcs if a not in kept]
        options = [[a for a in a_prime if a[1] == arc[1]] for arc in dropped]
        for combo in product(*options):
            phi = dict(zip(dropped, combo))
            yield PartialLineMap(base, a_prime, tuple(phi.get(a, a) for a in arcs))


def enumerate_plds(base: Digraph, cap: Optional[int] = None) -> PldBatch:
    """First ``cap`` maps of :func:`iter_plds`; ``truncated`` if more exist."""
    maps = []
    for pmap in iter_plds(base):
        if cap is not None and len(maps) == cap:
            return PldBatch(maps, True)
        maps.append(pmap)
    return PldBatch(maps, False)


def count_plds(base: Digraph) -> int:
    """Number of valid ``(A', phi)`` pairs, in closed form.

    The choices at different heads are independent: a head of in-degree
    ``d`` keeping ``s`` in-arcs leaves ``d - s`` arcs with ``s`` images each.
    """
    _require_min_in_degree(base)
    return prod(
        sum(comb(d, s) * s ** (d - s) for s in range(1, d + 1))
        for d in (len(a) for a in base.in_adjacency)
    )


__all__ = [
    "ArcNotInBase",
    "HeadsNotCovering",
    "LabeledPld",
    "MinInDegreeZero",
    "PartialLineMap",
    "PhiImageNotInAPrime",
    "PhiNotFixing",
    "PhiUndefined",
    "PhiWrongHead",
    "PldBatch",
    "PldError",
    "build_pld",
    "count_plds",
    "enumerate_plds",
    "identity_map",
    "iter_plds",
    "line_digraph",
    "pld_from_json",
    "validate_pld",
]
