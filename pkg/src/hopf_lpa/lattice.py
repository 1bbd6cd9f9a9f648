"""Exact integer lattices given by generating rows.

The rows are reduced to diagonal form ``P R Q = D`` with unimodular ``P`` and
``Q`` by integer row and column operations (Python ints, no overflow).  Only
``Q`` and the diagonal are kept; that is enough to decide membership, compute
orders in the quotient group and produce separating functionals.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .groups import INFINITE


def _lcm(a, b):
    return a // gcd(a, b) * b


class IntegerLattice:
    """Subgroup of Z^n spanned by ``rows``."""

    def __init__(self, rows: Sequence[Sequence[int]], n: int):
        self.n = n
        self.rows = [list(map(int, r)) for r in rows]
        for r in self.rows:
            if len(r) != n:
                raise ValueError("row length does not match the ambient rank")
        self.diagonal, self.Q = _diagonalize(self.rows, n)

    @property
    def rank(self):
        return len(self.diagonal)

    def coordinates(self, z):
        """z Q: the coordinates in which the lattice is diagonal."""
        Q = self.Q
        return [sum(z[i] * Q[i][j] for i in range(self.n) if z[i]) for j in range(self.n)]

    def functional(self, j):
        """Column j of Q, and its modulus (0 means the value lives in Z)."""
        f = [self.Q[i][j] for i in range(self.n)]
        mod = abs(self.diagonal[j]) if j < self.rank else 0
        return f, mod

    def separating_functional(self, z):
        """A functional f with modulus d so that f kills every generator modulo d
        but not z; ``None`` when z lies in the lattice."""
        w = self.coordinates(z)
        for j, wj in enumerate(w):
            f, mod = self.functional(j)
            if (mod == 0 and wj != 0) or (mod and wj % mod):
                return f, mod
        return None

    def __contains__(self, z):
        return self.separating_functional(z) is None

    def order_of(self, z):
        """Order of z in Z^n / lattice, or INFINITE."""
        w = self.coordinates(z)
        order = 1
        for j, wj in enumerate(w):
            if j >= self.rank:
                if wj:
                    return INFINITE
                continue
            d = abs(self.diagonal[j])
            order = _lcm(order, d // gcd(d, wj % d))
        return order


def _diagonalize(rows, n):
    A = [r[:] for r in rows]
    m = len(A)
    Q = [[int(i == j) for j in range(n)] for i in range(n)]
    diag = []

    def swap_cols(a, b):
        if a != b:
            for row in A:
                row[a], row[b] = row[b], row[a]
            for row in Q:
                row[a], row[b] = row[b], row[a]

    def add_col(dst, src, k):
        # column dst -= k * column src
        for row in A:
            row[dst] -= k * row[src]
        for row in Q:
            row[dst] -= k * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    k = A[i][t] // p
                    if k:
                        A[i] = [a - k * b for a, b in zip(A[i], A[t])]
                    clean = clean and not A[i][t]
            for j in range(t + 1, n):
                if A[t][j]:
                    k = A[t][j] // p
                    if k:
                        add_col(j, t, k)
                    clean = clean and not A[t][j]
            if clean:
                break
            # a smaller remainder appeared in row t or column t: make it the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            _, i, j = min(cands)
            if j == t:
                A[t], A[i] = A[i], A[t]
            else:
                swap_cols(t, j)
        diag.append(A[t][t])
        t += 1
    return diag, Q
