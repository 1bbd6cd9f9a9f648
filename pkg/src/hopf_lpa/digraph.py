"""Finite directed multigraphs and the direct graph-theoretic analyses used to
cross-check the classification: components, strongly connected components,
cycles and exits, exclusive cycles and chains, hereditary saturated closures,
maximal sinks and cycles."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import EmptyGraph, InvalidSpec
from .groups import INFINITE


class MultiDigraph:
    """Vertices ``0 .. n-1`` with display ``labels``; ``edges`` are
    ``(source, range, tag)`` triples, the tag telling parallel edges apart.

    ``keys`` optionally records the group element behind each vertex.
    ``truncated`` marks finite windows cut out of an infinite graph.
    """

    def __init__(
        self,
        labels: Sequence[str],
        edges: Iterable[tuple],
        *,
        keys: Optional[Sequence] = None,
        truncated: bool = False,
    ):
        self.labels = tuple(str(x) for x in labels)
        self.edges = tuple((int(s), int(r), int(t)) for s, r, t in edges)
        self.keys = tuple(keys) if keys is not None else tuple(range(len(self.labels)))
        self.truncated = truncated
        n = len(self.labels)
        if len(self.keys) != n:
            raise ValueError("keys and labels differ in length")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("(source, range, tag) triples must be unique")
        out_edges = [[] for _ in range(n)]
        in_edges = [[] for _ in range(n)]
        for k, (s, r, _) in enumerate(self.edges):
            if not (0 <= s < n and 0 <= r < n):
                raise ValueError(f"edge {k} has an endpoint outside the vertex range")
            out_edges[s].append(k)
            in_edges[r].append(k)
        self.out_edges = tuple(tuple(x) for x in out_edges)
        self.in_edges = tuple(tuple(x) for x in in_edges)

    @property
    def n(self):
        return len(self.labels)

    def out_degree(self, v):
        return len(self.out_edges[v])

    def in_degree(self, v):
        return len(self.in_edges[v])

    @cached_property
    def successors(self):
        """Per vertex, the ranges of its out-edges (with repetition)."""
        return tuple(tuple(self.edges[k][1] for k in ks) for ks in self.out_edges)

    @cached_property
    def simple_successors(self):
        return tuple(tuple(sorted(set(s))) for s in self.successors)

    @cached_property
    def simple_predecessors(self):
        preds = [set() for _ in range(self.n)]
        for s, r, _ in self.edges:
            preds[r].add(s)
        return tuple(tuple(sorted(p)) for p in preds)

    def audit(self) -> bool:
        """Adjacency lists agree with the edge list."""
        seen_out = sorted(k for ks in self.out_edges for k in ks)
        seen_in = sorted(k for ks in self.in_edges for k in ks)
        if seen_out != list(range(len(self.edges))) or seen_in != seen_out:
            return False
        return all(
            self.edges[k][0] == v for v, ks in enumerate(self.out_edges) for k in ks
        ) and all(self.edges[k][1] == v for v, ks in enumerate(self.in_edges) for k in ks)

    def induced(self, vertices: Iterable[int]) -> "MultiDigraph":
        """Subgraph on ``vertices`` keeping every edge with both ends inside."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[s], pos[r], t) for s, r, t in self.edges if s in pos and r in pos]
        return MultiDigraph(
            [self.labels[v] for v in vs],
            edges,
            keys=[self.keys[v] for v in vs],
            truncated=self.truncated,
        )

    def edge_triples(self):
        """Edges as ``(source key, range key, tag)``."""
        k = self.keys
        return {(k[s], k[r], t) for s, r, t in self.edges}

    def __repr__(self):
        flag = ", truncated" if self.truncated else ""
        return f"MultiDigraph(n={self.n}, edges={len(self.edges)}{flag})"

    # -- serialization ----------------------------------------------------

    def to_dot(self, name: str = "G") -> str:
        def q(s):
            return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

        lines = [f"digraph {q(name)} {{"]
        if self.truncated:
            lines.append('  comment="truncated window";')
        for v, label in enumerate(self.labels):
            lines.append(f"  v{v} [label={q(label)}];")
        for s, r, t in sorted(self.edges):
            lines.append(f"  v{s} -> v{r};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {
            "vertices": [{"index": v, "label": lab} for v, lab in enumerate(self.labels)],
            "edges": [{"source": s, "range": r, "tag": t} for s, r, t in sorted(self.edges)],
            "truncated": self.truncated,
        }

    @classmethod
    def from_json(cls, doc) -> "MultiDigraph":
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            verts = sorted(doc["vertices"], key=lambda v: v["index"])
            if [v["index"] for v in verts] != list(range(len(verts))):
                raise InvalidSpec("vertex indices must be 0 .. n-1")
            edges = [(e["source"], e["range"], e.get("tag", 1)) for e in doc["edges"]]
        except (KeyError, TypeError) as exc:
            raise InvalidSpec(f"malformed graph JSON: {exc}") from None
        return cls([v["label"] for v in verts], edges, truncated=bool(doc.get("truncated", False)))


# ---------------------------------------------------------------------------
# Components
# ---------------------------------------------------------------------------

def connected_components(g: MultiDigraph):
    """Components of the underlying undirected graph, as sorted vertex tuples
    ordered by their smallest vertex."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, r, _ in g.edges:
        a, b = find(s), find(r)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(vs) for vs in groups.values()), key=lambda c: c[0])


@dataclass(frozen=True)
class SccDecomposition:
    component_of: tuple
    components: tuple  # sorted vertex tuples, ordered by smallest vertex
    condensation: tuple  # sorted (a, b) pairs, a != b
    has_cycle: tuple
    topological_order: tuple  # sources of the condensation first

    def successors(self, c):
        return self._succ[c]

    def predecessors(self, c):
        return self._pred[c]

    @cached_property
    def _succ(self):
        out = [[] for _ in self.components]
        for a, b in self.condensation:
            out[a].append(b)
        return tuple(tuple(x) for x in out)

    @cached_property
    def _pred(self):
        out = [[] for _ in self.components]
        for a, b in self.condensation:
            out[b].append(a)
        return tuple(tuple(x) for x in out)


def _tarjan(n, succ):
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def scc(g: MultiDigraph) -> SccDecomposition:
    raw = _tarjan(g.n, g.simple_successors)
    comps = sorted((tuple(sorted(c)) for c in raw), key=lambda c: c[0])
    comp_of = [0] * g.n
    for cid, c in enumerate(comps):
        for v in c:
            comp_of[v] = cid
    cond = set()
    cyclic = [len(c) > 1 for c in comps]
    for s, r, _ in g.edges:
        a, b = comp_of[s], comp_of[r]
        if a != b:
            cond.add((a, b))
        elif s == r:
            cyclic[a] = True
    cond = tuple(sorted(cond))
    # Kahn's algorithm, smallest id first among ready components
    import heapq

    indeg = [0] * len(comps)
    succ = [[] for _ in comps]
    for a, b in cond:
        indeg[b] += 1
        succ[a].append(b)
    ready = [c for c in range(len(comps)) if indeg[c] == 0]
    heapq.heapify(ready)
    topo = []
    while ready:
        c = heapq.heappop(ready)
        topo.append(c)
        for b in succ[c]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(ready, b)
    return SccDecomposition(tuple(comp_of), tuple(comps), cond, tuple(cyclic), tuple(topo))


def sinks_sources(g: MultiDigraph):
    sinks = frozenset(v for v in range(g.n) if not g.out_edges[v])
    sources = frozenset(v for v in range(g.n) if not g.in_edges[v])
    regular = frozenset(v for v in range(g.n) if g.out_edges[v])
    return sinks, sources, regular


def has_cycle(g: MultiDigraph, dec: Optional[SccDecomposition] = None) -> bool:
    dec = dec or scc(g)
    return any(dec.has_cycle)


def exitless_cycle_exists(g: MultiDigraph) -> bool:
    """Is there a cycle none of whose vertices emits a second edge?"""
    nxt = [g.successors[v][0] if g.out_degree(v) == 1 else -1 for v in range(g.n)]
    state = [0] * g.n  # 0 unvisited, 1 on current walk, 2 done
    for start in range(g.n):
        if state[start]:
            continue
        walk = []
        v = start
        while v != -1 and state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = nxt[v]
        if v != -1 and state[v] == 1:
            return True
        for w in walk:
            state[w] = 2
    return False


# ---------------------------------------------------------------------------
# Exclusive cycles and chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainReport:
    exc_holds: bool
    d1: object  # int or INFINITE
    d2: object

    def gk_dimension(self):
        """max(2 d1 - 1, 2 d2), or INFINITE."""
        if not self.exc_holds:
            return INFINITE
        return max(2 * self.d1 - 1, 2 * self.d2, 0)


def _within_out_degree(g, dec, v):
    c = dec.component_of[v]
    return sum(1 for w in g.successors[v] if dec.component_of[w] == c)


def _single_cycle_components(g, dec):
    """Cycle-SCCs in which every vertex has exactly one out-edge inside the SCC."""
    out = []
    for cid, comp in enumerate(dec.components):
        if dec.has_cycle[cid] and all(_within_out_degree(g, dec, v) == 1 for v in comp):
            out.append(cid)
    return out


def exc_and_chains(g: MultiDigraph, dec: Optional[SccDecomposition] = None) -> ChainReport:
    dec = dec or scc(g)
    cyc = dec.has_cycle
    single = set(_single_cycle_components(g, dec))
    if any(cyc[c] and c not in single for c in range(len(cyc))):
        return ChainReport(False, INFINITE, INFINITE)
    has_exit = [cyc[c] and any(g.out_degree(v) > 1 for v in comp)
                for c, comp in enumerate(dec.components)]
    # longest chains starting at each component, processed sinks first
    down = [0] * len(cyc)
    down_exit = [None] * len(cyc)  # None: no chain with an exit from here
    for c in reversed(dec.topological_order):
        here = 1 if cyc[c] else 0
        best = max((down[b] for b in dec.successors(c)), default=0)
        down[c] = here + best
        cand = [down_exit[b] for b in dec.successors(c) if down_exit[b] is not None]
        best_exit = max(cand) + here if cand else None
        if has_exit[c]:
            best_exit = max(best_exit or 0, 1)
        down_exit[c] = best_exit
    d1 = max(down, default=0)
    d2 = max((x for x in down_exit if x is not None), default=0)
    return ChainReport(True, d1, d2)


# ---------------------------------------------------------------------------
# Hereditary saturated sets
# ---------------------------------------------------------------------------

def hs_closure(g: MultiDigraph, seed: Iterable[int]) -> frozenset:
    """Smallest hereditary and saturated vertex set containing ``seed``."""
    missing = [g.out_degree(v) for v in range(g.n)]
    inside = [False] * g.n
    work = list(seed)
    while work:
        v = work.pop()
        if inside[v]:
            continue
        inside[v] = True
        work.extend(g.successors[v])  # hereditary
        for k in g.in_edges[v]:
            s = g.edges[k][0]
            missing[s] -= 1
            if missing[s] == 0 and not inside[s]:
                work.append(s)  # saturated: s is regular and all its ranges are in
    return frozenset(v for v in range(g.n) if inside[v])


def only_trivial_hs(g: MultiDigraph, dec: Optional[SccDecomposition] = None) -> bool:
    if g.n == 0:
        raise EmptyGraph("graph has no vertices")
    dec = dec or scc(g)
    # vertices of one SCC reach the same set, hence have the same closure
    return all(len(hs_closure(g, [comp[0]])) == g.n for comp in dec.components)


def maximal_sink_or_cycle(g: MultiDigraph, dec: Optional[SccDecomposition] = None) -> bool:
    dec = dec or scc(g)
    cyc = dec.has_cycle
    cyclic_above = [False] * len(cyc)
    for c in dec.topological_order:
        cyclic_above[c] = any(cyc[p] or cyclic_above[p] for p in dec.predecessors(c))
    for v in range(g.n):
        if not g.out_edges[v] and not cyclic_above[dec.component_of[v]]:
            return True
    return any(not cyclic_above[c] for c in _single_cycle_components(g, dec))


def downward_directed(g: MultiDigraph, dec: Optional[SccDecomposition] = None) -> bool:
    """Every two SCCs have a common lower bound under reachability."""
    dec = dec or scc(g)
    m = len(dec.components)
    below = [None] * m
    for c in reversed(dec.topological_order):
        s = {c}
        for b in dec.successors(c):
            s |= below[b]
        below[c] = frozenset(s)
    return all(below[a] & below[b] for a in range(m) for b in range(a + 1, m))
