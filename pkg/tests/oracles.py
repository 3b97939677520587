"""Brute-force reference implementations.

Everything here works from raw ``(n, arcs)`` data and deliberately shares
no code with the package: distances by Floyd-Warshall, families by
filtering every subset, Grundy functions by filtering every value vector.
"""

from __future__ import annotations

from itertools import combinations, product

INF = float("inf")


def floyd(n, arcs):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in arcs:
        d[u][v] = 1
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def girth(n, arcs):
    d = floyd(n, arcs)
    return min((d[v][u] + 1 for u, v in arcs), default=INF)


def subsets(n, include_empty=False):
    for r in range(0 if include_empty else 1, n + 1):
        yield from combinations(range(n), r)


def k_independent_sets(n, arcs, k, include_empty=False):
    d = floyd(n, arcs)
    return sorted(S for S in subsets(n, include_empty) if all(d[u][v] >= k for u in S for v in S if u != v))


def kl_kernels(n, arcs, k, l):
    d = floyd(n, arcs)
    out = []
    for S in k_independent_sets(n, arcs, k):
        if all(min(d[x][s] for s in S) <= l for x in range(n) if x not in S):
            out.append(S)
    return sorted(out)


def semikernels(n, arcs):
    arcset = set(arcs)
    out = []
    for S in k_independent_sets(n, arcs, 2):
        inside = set(S)
        if all(any((x, t) in arcset for t in S) for s, x in arcs if s in inside and x not in inside):
            out.append(S)
    return sorted(out)


def kl_grundy(n, arcs, k, l):
    d = floyd(n, arcs)
    reach_l = [[y for y in range(n) if 1 <= d[x][y] <= l] for x in range(n)]
    near = [[y for y in range(n) if 1 <= d[x][y] <= k - 1] for x in range(n)]
    found = []
    for g in product(range(n), repeat=n):
        ok = all(
            all(any(g[y] == j for y in reach_l[x]) for j in range(g[x]))
            and all(g[y] != g[x] for y in near[x])
            for x in range(n)
        )
        if ok:
            found.append(g)
    return sorted(found)


def pld_arcs(arcs, a_prime, phi):
    """Arcs of the partial line digraph, as pairs of base arcs."""
    out = set()
    for i, j in a_prime:
        for a, b in arcs:
            if a == j:
                out.add(((i, j), phi.get((a, b), (a, b))))
    return out


def all_plds(n, arcs):
    """Every valid (A', phi) by trying every subset and every function."""
    arcs = sorted(arcs)
    found = []
    for r in range(1, len(arcs) + 1):
        for a_prime in combinations(arcs, r):
            if {b for _, b in a_prime} != set(range(n)):
                continue
            chosen = set(a_prime)
            dropped = [a for a in arcs if a not in chosen]
            options = [[c for c in a_prime if c[1] == a[1]] for a in dropped]
            for images in product(*options):
                found.append((a_prime, dict(zip(dropped, images))))
    return found
