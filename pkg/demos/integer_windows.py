"""
The integers: infinite graphs seen through finite windows
==========================================================

Over Z the graph is infinite, so verdicts come from arithmetic on the
generating set.  A window [-n, n] is only for looking at.
"""

from hopf_lpa import build_group, classify, parse_ramification
from hopf_lpa.cross_check import evaluate
from hopf_lpa.hopf_graph import build_window

Z = build_group("integers")

for text in ["0=1;2=1", "2=1;3=1", "1=1;-1=1", "0=2"]:
    r = parse_ramification(Z, text)
    c = classify(Z, r)
    print(f"{str(r):<12} components={c.component_count!s:<9} GK={c.gk_dim:<9}"
          f" sr={c.stable_rank!s:<9} structure={c.lpa_structure}")

# A loop at every integer plus a step of two: the even and odd integers
# never meet.
g = build_window(parse_ramification(Z, "0=1;2=1"), 4)
print("\nwindow [-4, 4]:", g)
for s, t, _ in sorted(g.edges):
    if s != t:
        print(f"  {g.labels[s]:>2} -> {g.labels[t]}")

# The unit group is {0}; its subgraph is exact, a single loop.
sg, cls, bundle, report = evaluate(Z, parse_ramification(Z, "0=1;2=1"), window=4)
print("\nunit-group subgraph:", bundle.lambda_.labels, bundle.lambda_.edges)
print("window checks:", [(t.name, t.agree) for t in report.triples])
