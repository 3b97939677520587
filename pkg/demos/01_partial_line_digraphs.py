"""
Partial line digraphs
=====================

A partial line digraph keeps only some arcs of a digraph as vertices and
redirects the dropped ones to kept arcs with the same head.
"""

# %%
# A digraph with minimum in-degree 2 and the map that drops three arcs.

from pldkernels import build_pld, count_plds, enumerate_plds, fixture, line_digraph
from pldkernels.formats import to_dot

fx = fixture("fig1")
D, pmap = fx.digraph, fx.pld_map
print(D)
print("kept arcs:", [D.label(u) + D.label(v) for u, v in pmap.a_prime])
for arc, image in pmap.phi_map.items():
    if arc != image:
        print(f"  {D.label(arc[0])}{D.label(arc[1])} -> {D.label(image[0])}{D.label(image[1])}")

# %%
# Each kept arc ``ij`` gets one out-arc per arc ``jk`` of the base, pointing
# at the image of ``jk``.  Nine vertices and eighteen arcs.

L = build_pld(pmap).digraph
print(L.n, "vertices,", len(L.arcs), "arcs")
print(sorted(L.label(u) + "->" + L.label(v) for u, v in L.arcs))

# %%
# Keeping every arc gives the ordinary line digraph.

full = line_digraph(D).digraph
print("line digraph:", full.n, "vertices,", len(full.arcs), "arcs")

# %%
# How many partial line digraphs does this digraph have?  The choices at
# different heads are independent, so the count factors per vertex.

print("maps:", count_plds(D))
batch = enumerate_plds(D, cap=100)
print("first 100 enumerated, truncated =", batch.truncated)

# %%
# DOT text for rendering with graphviz.

print(to_dot(L, "pld"))
