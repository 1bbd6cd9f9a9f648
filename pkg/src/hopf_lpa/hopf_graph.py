"""Construction of the Hopf graph of a group with ramification data, its
component subgraph on the generated subgroup, its strongly connected subgraph
on the unit group, and finite windows of the integer case."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .digraph import MultiDigraph
from .errors import MissingWindow, SizeLimit
from .groups import TRIVIAL, FiniteGroup, IntegerGroup
from .ramification import RamificationData
from .semigroup import SemigroupReport

DEFAULT_MAX_EDGES = 10**6


class TruncationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SymbolicGraph:
    """Stand-in for an infinite graph over the integers when no window was requested."""

    description: str

    def to_json(self):
        return {"symbolic": self.description}


@dataclass(frozen=True)
class HopfGraphBundle:
    group: object
    ramification: RamificationData
    semigroup: SemigroupReport
    gamma: object  # MultiDigraph or SymbolicGraph
    delta: object  # MultiDigraph or SymbolicGraph
    lambda_: object  # MultiDigraph, SymbolicGraph or TRIVIAL
    window: Optional[int] = None

    def vertex_to_element(self):
        if isinstance(self.gamma, MultiDigraph):
            return dict(enumerate(self.gamma.keys))
        return None

    def subgraph(self, which: str):
        return {"gamma": self.gamma, "delta": self.delta, "lambda": self.lambda_}[which]


def _check_edge_cap(count, max_edges):
    if count > max_edges:
        raise SizeLimit(f"graph would have {count} edges, above the cap {max_edges}")


def build_gamma(G: FiniteGroup, r: RamificationData, max_edges: int = DEFAULT_MAX_EDGES):
    """Every x gets ``mult`` edges to x*c for each c in each supported class."""
    if isinstance(G, IntegerGroup):
        raise MissingWindow("the Hopf graph over the integers is infinite; build a window")
    _check_edge_cap(G.order * r.degree_sum(), max_edges)
    steps = r.steps()
    edges = []
    for x in range(G.order):
        for c, mult in steps:
            y = G.mul(x, c)
            edges.extend((x, y, t) for t in range(1, mult + 1))
    return MultiDigraph(G.names, edges, keys=range(G.order))


def build_window(r: RamificationData, n: int, max_edges: int = DEFAULT_MAX_EDGES):
    """Vertices -n..n of the integer Hopf graph, keeping edges with both ends inside."""
    if n < 0:
        raise ValueError("window radius must be nonnegative")
    _check_edge_cap((2 * n + 1) * r.degree_sum(), max_edges)
    outside = [c for c in r.support_elements() if abs(c) > n]
    if outside:
        warnings.warn(
            f"support elements {sorted(outside)} lie outside the window [-{n}, {n}]",
            TruncationWarning,
            stacklevel=2,
        )
    vertices = list(range(-n, n + 1))
    steps = r.steps()
    edges = []
    for x in vertices:
        for c, mult in steps:
            y = x + c
            if -n <= y <= n:
                edges.extend((x + n, y + n, t) for t in range(1, mult + 1))
    return MultiDigraph([str(v) for v in vertices], edges, keys=vertices, truncated=True)


def _exact_single_vertex(r: RamificationData):
    """The subgraph on {0} over the integers: one loop per copy of the class [0]."""
    loops = r.multiplicity(r.group.class_of(0))
    return MultiDigraph(["0"], [(0, 0, t) for t in range(1, loops + 1)], keys=[0])


def build_delta_lambda(
    G,
    r: RamificationData,
    sg: SemigroupReport,
    *,
    window: Optional[int] = None,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> HopfGraphBundle:
    if isinstance(G, IntegerGroup):
        return _integer_bundle(G, r, sg, window, max_edges)
    if window is not None:
        raise ValueError("a window only applies to the integers")
    gamma = build_gamma(G, r, max_edges)
    delta = gamma.induced(sg.delta0.members)
    lam = TRIVIAL if sg.lambda0 == TRIVIAL else gamma.induced(sg.lambda0.members)
    return HopfGraphBundle(G, r, sg, gamma, delta, lam)


def _integer_bundle(G, r, sg, window, max_edges):
    d = sg.delta0.modulus
    if window is None:
        gamma = SymbolicGraph(f"Hopf graph on Z with ramification {r}")
        delta = _exact_single_vertex(r) if d == 0 else SymbolicGraph(
            f"induced subgraph on {sg.delta0.describe()}")
    else:
        gamma = build_window(r, window, max_edges)
        if d == 0:
            delta = _exact_single_vertex(r)
        else:
            delta = gamma.induced(i for i, k in enumerate(gamma.keys) if k % d == 0)
    lam0 = sg.lambda0
    if lam0 == TRIVIAL:
        lam = TRIVIAL
    elif lam0.modulus == 0:
        lam = _exact_single_vertex(r)
    elif isinstance(gamma, MultiDigraph):
        lam = gamma.induced(i for i, k in enumerate(gamma.keys) if k % lam0.modulus == 0)
    else:
        lam = SymbolicGraph(f"induced subgraph on {lam0.describe()}")
    return HopfGraphBundle(G, r, sg, gamma, delta, lam, window)
