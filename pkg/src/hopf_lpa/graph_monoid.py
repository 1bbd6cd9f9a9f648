"""The graph monoid of a finite graph: nonnegative integer vectors on the
vertices modulo ``v = sum of the ranges of the edges leaving v`` at every
regular vertex.

Equality is semi-decided by bidirectional breadth-first search over single
rewrites and refuted by separating the difference from the relation lattice
in the group completion.  Anything else is reported as UNKNOWN.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .digraph import MultiDigraph
from .errors import EmptyGraph, NotApplicable
from .groups import INFINITE
from .lattice import IntegerLattice

EQUAL = "EQUAL"
NOT_EQUAL = "NOT_EQUAL"
UNKNOWN = "UNKNOWN"
IBN = "IBN"
NOT_IBN = "NOT_IBN"

DEFAULT_MAX_VISITED = 100_000
DEFAULT_COEFF_CAP = 64
DEFAULT_MAX_MN = 16


@dataclass(frozen=True)
class MonoidDecision:
    verdict: str
    certificate: dict = field(default_factory=dict)
    visited: int = field(default=0, compare=False)

    def to_json(self):
        cert = dict(self.certificate)
        if "trace" in cert:
            cert["trace"] = [[v, d] for v, d in cert["trace"]]
        return {"verdict": self.verdict, "certificate": cert}


class GraphMonoid:
    def __init__(self, g: MultiDigraph):
        if g.truncated:
            raise NotApplicable("the monoid of a truncated window says nothing about the full graph")
        self.graph = g
        self.n = g.n
        rhs = {}
        for v in range(g.n):
            if g.out_edges[v]:
                rhs[v] = tuple(sorted(Counter(g.successors[v]).items()))
        self.rhs = rhs

    @cached_property
    def lattice(self):
        rows = []
        for v, terms in sorted(self.rhs.items()):
            row = [0] * self.n
            row[v] += 1
            for w, k in terms:
                row[w] -= k
            if any(row):
                rows.append(row)
        return IntegerLattice(rows, self.n)

    def forward(self, x, v):
        """Replace one copy of v by its out-neighbours, or None."""
        if v not in self.rhs or x[v] < 1:
            return None
        y = list(x)
        y[v] -= 1
        for w, k in self.rhs[v]:
            y[w] += k
        return tuple(y)

    def backward(self, x, v):
        """Replace the out-neighbour multiset of v by one copy of v, or None."""
        if v not in self.rhs:
            return None
        y = list(x)
        for w, k in self.rhs[v]:
            y[w] -= k
            if y[w] < 0:
                return None
        y[v] += 1
        return tuple(y)

    def apply(self, x, step):
        v, direction = step
        return self.forward(x, v) if direction == "+" else self.backward(x, v)

    def one_step_rewrites(self, x):
        x = tuple(x)
        out = set()
        for v in self.rhs:
            for y in (self.forward(x, v), self.backward(x, v)):
                if y is not None and y != x:
                    out.add(y)
        return out

    def _neighbours(self, x, cap):
        for v in self.rhs:
            for direction in ("+", "-"):
                y = self.apply(x, (v, direction))
                if y is not None and y != x and max(y, default=0) <= cap:
                    yield (v, direction), y

    def search(self, x, y, max_visited=DEFAULT_MAX_VISITED, coeff_cap=DEFAULT_COEFF_CAP):
        """Bidirectional BFS; returns (trace or None, visited count)."""
        x, y = tuple(x), tuple(y)
        if x == y:
            return [], 1
        if sum(x) == 0 or sum(y) == 0:
            # zero only rewrites to itself
            return None, 1
        parents = ({x: None}, {y: None})
        frontiers = ([x], [y])
        while frontiers[0] and frontiers[1]:
            side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
            mine, theirs = parents[side], parents[1 - side]
            nxt = []
            for a in frontiers[side]:
                for step, b in self._neighbours(a, coeff_cap):
                    if b in mine:
                        continue
                    mine[b] = (a, step)
                    if b in theirs:
                        return self._trace(parents, b), len(parents[0]) + len(parents[1])
                    nxt.append(b)
                    if len(parents[0]) + len(parents[1]) >= max_visited:
                        return None, max_visited
            frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
        return None, len(parents[0]) + len(parents[1])

    @staticmethod
    def _trace(parents, meet):
        left = []
        node = meet
        while parents[0][node] is not None:
            prev, step = parents[0][node]
            left.append(step)
            node = prev
        left.reverse()
        right = []
        node = meet
        while parents[1][node] is not None:
            prev, (v, d) = parents[1][node]
            # the step went prev -> node; walking node -> prev inverts it
            right.append((v, "-" if d == "+" else "+"))
            node = prev
        return left + right

    def replay(self, x, trace):
        x = tuple(x)
        for step in trace:
            y = self.apply(x, step)
            if y is None:
                raise ValueError(f"step {step} does not apply to {x}")
            x = y
        return x

    def decide_equal(self, x, y, max_visited=DEFAULT_MAX_VISITED, coeff_cap=DEFAULT_COEFF_CAP):
        x, y = tuple(x), tuple(y)
        if len(x) != self.n or len(y) != self.n or min(x + y, default=0) < 0:
            raise ValueError("monoid elements are nonnegative vectors indexed by vertices")
        # the lattice test is cheap, so run it before searching
        diff = [a - b for a, b in zip(x, y)]
        sep = self.lattice.separating_functional(diff)
        if sep is not None:
            f, mod = sep
            return MonoidDecision(NOT_EQUAL, {"functional": f, "modulus": mod})
        trace, visited = self.search(x, y, max_visited, coeff_cap)
        if trace is not None:
            return MonoidDecision(EQUAL, {"trace": trace}, visited)
        note = "search space exhausted" if visited < max_visited else "visit budget exhausted"
        return MonoidDecision(UNKNOWN, {"note": f"{note} after {visited} elements"}, visited)

    def ibn_test(self, max_mn=DEFAULT_MAX_MN, max_visited=DEFAULT_MAX_VISITED,
                 coeff_cap=DEFAULT_COEFF_CAP):
        """Compare m copies of the vertex sum with n copies for m != n <= max_mn."""
        if self.n == 0:
            raise EmptyGraph("graph has no vertices")
        ones = (1,) * self.n
        order = self.lattice.order_of(ones)
        if order == INFINITE:
            j = next(j for j in range(self.lattice.rank, self.n)
                     if self.lattice.coordinates(ones)[j])
            f, _ = self.lattice.functional(j)
            return MonoidDecision(IBN, {"functional": f, "modulus": 0})
        # m[1] = n[1] forces n - m to be a multiple of the order
        spent = 0
        pairs = sorted(
            ((m, m + k) for k in range(order, max_mn, order) for m in range(1, max_mn - k + 1)),
            key=lambda p: (p[0], p[1]),
        )
        for m, n in pairs:
            x = tuple(m for _ in ones)
            y = tuple(n for _ in ones)
            trace, visited = self.search(x, y, max_visited - spent, coeff_cap)
            spent += visited
            if trace is not None:
                return MonoidDecision(NOT_IBN, {"m": m, "n": n, "trace": trace}, spent)
            if spent >= max_visited:
                break
        return MonoidDecision(
            UNKNOWN, {"note": f"no witness with m, n <= {max_mn}", "order": order}, spent)


def one_step_rewrites(g: MultiDigraph, x):
    return GraphMonoid(g).one_step_rewrites(x)


def decide_equal(g: MultiDigraph, x, y, max_visited=DEFAULT_MAX_VISITED,
                 coeff_cap=DEFAULT_COEFF_CAP) -> MonoidDecision:
    return GraphMonoid(g).decide_equal(x, y, max_visited, coeff_cap)


def ibn_test(g: MultiDigraph, max_mn=DEFAULT_MAX_MN, max_visited=DEFAULT_MAX_VISITED,
             coeff_cap=DEFAULT_COEFF_CAP) -> MonoidDecision:
    return GraphMonoid(g).ibn_test(max_mn, max_visited, coeff_cap)
