"""
Hopf graphs over the symmetric group on three letters
======================================================

Build the group, look at its conjugacy classes, then put edges on the
group along two different classes and compare what comes out.
"""

from hopf_lpa import build_group, classify, conjugacy_classes, parse_ramification
from hopf_lpa import digraph as dg
from hopf_lpa.hopf_graph import build_gamma

G = build_group("symmetric:3")
print("elements:", G.names)
for c in conjugacy_classes(G):
    print("class of", G.name(c.representative), "->", [G.name(x) for x in c.members])

# The 3-cycles generate the alternating subgroup, so the graph splits in two.
r = parse_ramification(G, "(1 2 3)=1")
gamma = build_gamma(G, r)
comps = dg.connected_components(gamma)
print("\n3-cycles:", len(gamma.edges), "edges,", len(comps), "components")
for comp in comps:
    print("  ", [G.name(gamma.keys[v]) for v in comp])
c = classify(G, r)
print("   GK class", c.gk_dim, "| stable rank", c.stable_rank, "| structure", c.lpa_structure)

# Transpositions generate everything: one strongly connected piece.
r = parse_ramification(G, "(1 2)=1")
gamma = build_gamma(G, r)
print("\ntranspositions:", len(gamma.edges), "edges,",
      len(dg.scc(gamma).components), "strongly connected component")
c = classify(G, r)
print("   purely infinite simple:", c.purely_infinite_simple, "| IBN:", c.ibn)

# The same graph as DOT, ready for graphviz.
print()
print(gamma.to_dot("transpositions"))
