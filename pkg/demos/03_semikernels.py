"""
Semikernels
===========

An independent set S is a semikernel when every arc leaving S is answered
by an arc from its head back into S.
"""

# %%
from pldkernels import enumerate_kernels, enumerate_semikernels, fixture, is_semikernel, line_digraph, map_h

D = fixture("fig3").digraph
print("kernels:", enumerate_kernels(D))
print("semikernels:", [[D.label(v) for v in S] for S in enumerate_semikernels(D)])

# %%
# A sink is always a semikernel on its own.

G = fixture("fig4_left").digraph
sink = next(v for v in range(G.n) if G.out_degree(v) == 0)
print("sink", G.label(sink), is_semikernel(G, [sink]))

# %%
# Counting through the line digraph: never fewer, and the heads of each
# semikernel upstairs form a semikernel downstairs.

lp = line_digraph(G)
base, up = enumerate_semikernels(G), enumerate_semikernels(lp.digraph)
print(len(base), "<=", len(up))
for S in up:
    print([lp.digraph.label(v) for v in S], "-> heads", [G.label(v) for v in map_h(lp.source, S)])
