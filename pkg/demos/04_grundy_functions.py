"""
(k,l)-Grundy functions
======================

A labelling where every positive value t sees each smaller value within l
steps, and no vertex within k-1 steps shares its value.
"""

# %%
from pldkernels import (
    acyclic_grundy,
    build_digraph,
    cycle,
    enumerate_kl_grundy,
    fixture,
    grundy_zero_kernel,
    identity_map,
    is_kl_grundy,
    lift_grundy,
    project_grundy,
    random_dag,
)

for name in ("fig5_left", "fig5_right"):
    fx = fixture(name)
    D = fx.digraph
    print(name, {D.label(v): t for v, t in enumerate(fx.grundy)}, is_kl_grundy(D, fx.grundy, *fx.grundy_kl))

# %%
# Odd cycles have no Grundy function; even cycles have two.

for n in range(3, 8):
    print(f"C{n}:", enumerate_kl_grundy(cycle(n), 2, 1))

# %%
# On an acyclic digraph the Grundy function is unique and given by mex.

dag = random_dag(6, 0.4, seed=3)
print(acyclic_grundy(dag), enumerate_kl_grundy(dag, 2, 1))

# %%
# The zero level of a Grundy function is a kernel.

fx = fixture("fig5_left")
print("zero level:", [fx.digraph.label(v) for v in grundy_zero_kernel(fx.digraph, fx.grundy, 2, 2)])

# %%
# Lifting to the line digraph and projecting back.

D = build_digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
pmap = identity_map(D)
for g in enumerate_kl_grundy(D, 2, 1):
    h = lift_grundy(pmap, g, 2, 1)
    print(g, "->", h, "->", project_grundy(pmap, h, 2, 1))
