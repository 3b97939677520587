"""k-independent sets, (k,l)-kernels, semikernels and the maps between
the families of a digraph and of its partial line digraphs.

All enumerators are exact.  They backtrack over vertices in index order,
keeping a bitmask of vertices that can still be added without breaking
independence, and prune a branch as soon as some vertex that can no
longer join the set has no way left to be absorbed (kernels) or answered
(semikernels).  Families are returned as sorted lists of sorted tuples.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from .digraph import INF, Digraph, VertexSet, from_mask, heads, omega_minus_set, to_mask
from .pld import PartialLineMap

SetFamily = list[VertexSet]


def _check_kl(k: int, l: int) -> None:
    if k < 2 or l < 1:
        raise ValueError(f"need k >= 2 and l >= 1, got k={k}, l={l}")


# -- predicates --------------------------------------------------------------


def is_k_independent(D: Digraph, U: Iterable[int], k: int) -> bool:
    """``d(u, v) >= k`` for every ordered pair of distinct members."""
    if k < 2:
        raise ValueError("k must be at least 2")
    d = D.distances
    U = list(U)
    return all(d(u, v) >= k for u in U for v in U if u != v)


def is_l_absorbing(D: Digraph, U: Iterable[int], l: int) -> bool:
    """Every vertex outside ``U`` reaches ``U`` within distance ``l``."""
    if l < 1:
        raise ValueError("l must be at least 1")
    d = D.distances
    U = set(U)
    return all(min((d(x, u) for u in U), default=INF) <= l for x in range(D.n) if x not in U)


def is_kl_kernel(D: Digraph, U: Iterable[int], k: int, l: int) -> bool:
    U = list(U)
    return bool(U or not D.n) and is_k_independent(D, U, k) and is_l_absorbing(D, U, l)


def is_independent(D: Digraph, U: Iterable[int]) -> bool:
    return is_k_independent(D, U, 2)


def is_semikernel(D: Digraph, S: Iterable[int]) -> bool:
    """Independent, and every arc ``(s, x)`` leaving ``S`` is answered by an
    arc ``(x, s')`` back into ``S``.

    The empty set satisfies this vacuously; the enumerator skips it.
    """
    S = set(S)
    if not is_independent(D, S):
        return False
    mask = to_mask(S)
    return all(D.out_masks[x] & mask for s in S for x in D.out_adjacency[s])


# -- enumeration ---------------------------------------------------------------


def _conflict_masks(D: Digraph, k: int) -> tuple[int, ...]:
    d = D.distances
    fwd, back = d.ball(k - 1), d.reverse_ball(k - 1)
    return tuple(f | b for f, b in zip(fwd, back))


def _search(n: int, conflict: tuple[int, ...], viable: Callable[[int, int], bool]) -> Iterator[int]:
    """Yield every set (as a mask) with no two members in conflict that
    passes ``viable(members, 0)``.

    ``viable(members, addable)`` must be monotone: if it fails it fails for
    every extension, so it doubles as the pruning test.
    """

    def rec(v: int, members: int, addable: int) -> Iterator[int]:
        if not viable(members, addable):
            return
        if v == n:
            yield members
            return
        bit = 1 << v
        if addable & bit:
            yield from rec(v + 1, members | bit, addable & ~conflict[v] & ~bit)
        yield from rec(v + 1, members, addable & ~bit)

    yield from rec(0, 0, (1 << n) - 1)


def _family(masks: Iterable[int]) -> SetFamily:
    return sorted(from_mask(m) for m in masks)


def enumerate_k_independent_sets(D: Digraph, k: int, include_empty: bool = False) -> SetFamily:
    if k < 2:
        raise ValueError("k must be at least 2")
    masks = _search(D.n, _conflict_masks(D, k), lambda members, addable: True)
    return _family(m for m in masks if m or include_empty)


def count_k_independent_sets(D: Digraph, k: int, include_empty: bool = False) -> int:
    return len(enumerate_k_independent_sets(D, k, include_empty))


def fibonacci_number(D: Digraph) -> int:
    """Number of independent vertex sets, the empty set included."""
    return count_k_independent_sets(D, 2, include_empty=True)


def enumerate_kl_kernels(D: Digraph, k: int, l: int) -> SetFamily:
    """All ``k``-independent, ``l``-absorbing vertex sets."""
    _check_kl(k, l)
    n = D.n
    reach = D.distances.ball(l)
    full = (1 << n) - 1

    def viable(members: int, addable: int) -> bool:
        possible = members | addable
        left_out = full & ~possible
        while left_out:
            low = left_out & -left_out
            if not reach[low.bit_length() - 1] & possible:
                return False
            left_out ^= low
        return True

    return _family(m for m in _search(n, _conflict_masks(D, k), viable) if m or not n)


def enumerate_kernels(D: Digraph) -> SetFamily:
    return enumerate_kl_kernels(D, 2, 1)


def enumerate_quasikernels(D: Digraph) -> SetFamily:
    """(2,2)-kernels."""
    return enumerate_kl_kernels(D, 2, 2)


def enumerate_semikernels(D: Digraph) -> SetFamily:
    """All nonempty semikernels."""
    out = D.out_masks

    def viable(members: int, addable: int) -> bool:
        possible = members | addable
        need = 0
        rest = members
        while rest:
            low = rest & -rest
            need |= out[low.bit_length() - 1]
            rest ^= low
        while need:
            low = need & -need
            if not out[low.bit_length() - 1] & possible:
                return False
            need ^= low
        return True

    return _family(m for m in _search(D.n, _conflict_masks(D, 2), viable) if m)


# -- maps between base and partial line digraph ---------------------------------


def map_f(pmap: PartialLineMap, K: Iterable[int]) -> VertexSet:
    """Vertices of the partial line digraph labelled by ``omega^-(K) & A'``."""
    index = pmap.vertex_index
    return tuple(sorted(index[a] for a in omega_minus_set(pmap.base, K) if a in index))


def map_h(pmap: PartialLineMap, khat: Iterable[int]) -> VertexSet:
    """Heads of the base arcs labelling ``khat``."""
    return heads(pmap.a_prime[i] for i in khat)


__all__ = [
    "SetFamily",
    "count_k_independent_sets",
    "enumerate_k_independent_sets",
    "enumerate_kernels",
    "enumerate_kl_kernels",
    "enumerate_quasikernels",
    "enumerate_semikernels",
    "fibonacci_number",
    "is_independent",
    "is_k_independent",
    "is_kl_kernel",
    "is_l_absorbing",
    "is_semikernel",
    "map_f",
    "map_h",
]
