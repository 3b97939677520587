"""Seeded random digraphs.

Randomness comes from SplitMix64 (Steele, Lea and Flood 2014) so that a
seed names the same digraph in any language: the state advances by the
golden-ratio constant and each output is the 64-bit finaliser of the new
state.  ``random()`` keeps the top 53 bits; ``below(m)`` reduces modulo
``m``.
"""

from __future__ import annotations

from .digraph import Digraph, build_digraph

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % m


def stream_value(seed: int, index: int) -> int:
    """The ``index``-th output of ``SplitMix64(seed)``, in O(1)."""
    return mix64(seed + (index + 1) * GAMMA)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair ``(u, v)``, ``u != v``, is an arc with probability
    ``p`` (row-major order); then every vertex left with no in-arc gets one
    from a uniformly chosen other vertex, so the minimum in-degree is >= 1.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    rng = SplitMix64(seed)
    arcs = set()
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                arcs.add((u, v))
    for v in range(n):
        if not any(b == v for _, b in arcs):
            others = [u for u in range(n) if u != v]
            arcs.add((others[rng.below(n - 1)], v))
    return build_digraph(n, arcs)


def random_dag(n: int, p: float, seed: int) -> Digraph:
    """Arcs only from earlier to later vertices of a random ordering."""
    rng = SplitMix64(seed)
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        order[i], order[j] = order[j], order[i]
    arcs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_digraph(n, arcs)
