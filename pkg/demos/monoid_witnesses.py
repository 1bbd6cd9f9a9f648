"""
Invariant basis number, by search and by lattice
=================================================

In the graph monoid every vertex equals the sum of the ranges of its edges.
When every vertex emits m >= 2 edges, m copies of the vertex sum equal one
copy.  The search finds such a rewrite; when none can exist, an integer
functional proves it.
"""

from hopf_lpa import build_group, parse_ramification
from hopf_lpa.cross_check import default_sweep, replay_certificate, run_sweep
from hopf_lpa.graph_monoid import GraphMonoid
from hopf_lpa.hopf_graph import build_gamma


def monoid_of(spec, text):
    G = build_group(spec)
    return G, GraphMonoid(build_gamma(G, parse_ramification(G, text)))


G, M = monoid_of("dihedral:4", "r=1;s=1")
d = M.ibn_test()
print("dihedral:4, r + s:", d.verdict, "m =", d.certificate["m"], "n =", d.certificate["n"])
print("  trace:", [(G.name(v), step) for v, step in d.certificate["trace"]])
print("  replays:", replay_certificate(M, d))

G, M = monoid_of("cyclic:6", "2=1")
d = M.ibn_test()
print("cyclic:6, [2]:", d.verdict, "functional", d.certificate["functional"])

# A slice of the cross-validation sweep.
out = run_sweep(default_sweep(groups=("cyclic:4", "symmetric:3")))
print("\nsweep slice:", out["summary"])
