"""
(k,l)-kernels
=============

A (k,l)-kernel is a vertex set whose members are pairwise at distance at
least k and which every outside vertex reaches within l steps.
"""

# %%
from pldkernels import (
    build_pld,
    cycle,
    enumerate_kernels,
    enumerate_kl_kernels,
    enumerate_plds,
    fixture,
    identity_map,
    map_f,
    map_h,
)

D = fixture("fig2_left").digraph
L = fixture("fig2_right").digraph   # its line digraph


def show(G, family):
    return [{G.label(v) for v in S} for S in family]


# %%
# Quasikernels, i.e. (2,2)-kernels.  With l = k the line digraph can have
# strictly more of them.

print("digraph:", show(D, enumerate_kl_kernels(D, 2, 2)))
print("line digraph:", show(L, enumerate_kl_kernels(L, 2, 2)))

# %%
# Kernels of cycles: none on odd cycles, two on even ones.

for n in range(3, 8):
    print(f"C{n}:", enumerate_kernels(cycle(n)))

# %%
# The in-boundary map sends each kernel to a kernel of every partial line
# digraph, and taking heads sends it back.

pmap = identity_map(D)
for K in enumerate_kl_kernels(D, 2, 2):
    image = map_f(pmap, K)
    print(show(D, [K]), "->", show(L, [image]), "->", show(D, [map_h(pmap, image)]))

# %%
# For kernels proper the counts agree on every partial line digraph.

G = fixture("fig1").digraph
counts = {len(enumerate_kernels(build_pld(m).digraph)) for m in enumerate_plds(G, cap=50).maps}
print("base:", len(enumerate_kernels(G)), "partial line digraphs:", counts)
