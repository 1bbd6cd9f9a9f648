"""Independent brute-force oracles.  None of these import the algorithms they
check; they work from definitions, on inputs small enough to enumerate."""

import itertools
import random

import numpy as np


def reachability(n, edges):
    """Boolean matrix R with R[u, v] iff a path of positive length u -> v."""
    A = np.zeros((n, n), dtype=bool)
    for s, r, _ in edges:
        A[s, r] = True
    R = A.copy()
    for k in range(n):  # Warshall
        R |= np.outer(R[:, k], R[k, :])
    return R


def brute_components(n, edges):
    R = reachability(n, edges)
    U = R | R.T | np.eye(n, dtype=bool)
    for k in range(n):
        U |= np.outer(U[:, k], U[k, :])
    comps = {tuple(np.flatnonzero(U[v])) for v in range(n)}
    return sorted(comps)


def brute_sccs(n, edges):
    R = reachability(n, edges) | np.eye(n, dtype=bool)
    M = R & R.T
    return sorted({tuple(np.flatnonzero(M[v])) for v in range(n)})


def simple_cycles(n, edges):
    """All cycles as tuples of edge indices, each rotated to start at its
    smallest edge index.  Exponential; keep graphs tiny."""
    out_edges = [[] for _ in range(n)]
    for k, (s, r, _) in enumerate(edges):
        out_edges[s].append(k)
    found = set()

    def walk(start, v, path, seen):
        for k in out_edges[v]:
            r = edges[k][1]
            if r == start:
                cyc = path + [k]
                i = cyc.index(min(cyc))
                found.add(tuple(cyc[i:] + cyc[:i]))
            elif r not in seen and r > start:
                walk(start, r, path + [k], seen | {r})

    for v in range(n):
        walk(v, v, [], {v})
    return sorted(found)


def cycle_vertices(edges, cyc):
    return frozenset(edges[k][0] for k in cyc)


def brute_chains(n, edges):
    """(exc, d1, d2) from enumerated cycles, following the definitions."""
    cycles = simple_cycles(n, edges)
    verts = [cycle_vertices(edges, c) for c in cycles]
    for i, j in itertools.combinations(range(len(cycles)), 2):
        if verts[i] & verts[j]:
            return False, None, None
    R = reachability(n, edges) | np.eye(n, dtype=bool)
    out_deg = [0] * n
    for s, _, _ in edges:
        out_deg[s] += 1
    has_exit = [any(out_deg[v] > 1 for v in vs) for vs in verts]
    m = len(cycles)

    def above(i, j):  # a path from cycle i to cycle j
        return i != j and R[next(iter(verts[i])), next(iter(verts[j]))]

    best = {}

    def longest(i):
        if i not in best:
            best[i] = 1 + max((longest(j) for j in range(m) if above(i, j)), default=0)
        return best[i]

    best_exit = {}

    def longest_exit(i):
        # longest chain starting at i whose last cycle has an exit, or 0
        if i not in best_exit:
            tails = [longest_exit(j) for j in range(m) if above(i, j)]
            tails = [t for t in tails if t]
            if tails:
                best_exit[i] = 1 + max(tails)
            else:
                best_exit[i] = 1 if has_exit[i] else 0
        return best_exit[i]

    d1 = max((longest(i) for i in range(m)), default=0)
    d2 = max((longest_exit(i) for i in range(m)), default=0)
    return True, d1, d2


def is_hereditary(n, edges, H):
    return all(r in H for s, r, _ in edges if s in H)


def is_saturated(n, edges, H):
    for v in range(n):
        outs = [r for s, r, _ in edges if s == v]
        if outs and v not in H and all(r in H for r in outs):
            return False
    return True


def brute_hs_closure(n, edges, seed):
    """Intersection of all hereditary saturated supersets of ``seed``."""
    seed = frozenset(seed)
    best = frozenset(range(n))
    for bits in range(1 << n):
        H = frozenset(v for v in range(n) if bits >> v & 1)
        if seed <= H and is_hereditary(n, edges, H) and is_saturated(n, edges, H):
            best &= H
    return best


def brute_conjugacy_classes(table):
    table = np.asarray(table)
    n = len(table)
    e = next(i for i in range(n) if all(table[i, j] == j for j in range(n)))
    inv = [next(j for j in range(n) if table[i, j] == e) for i in range(n)]
    classes = set()
    for x in range(n):
        classes.add(frozenset(int(table[table[g, x], inv[g]]) for g in range(n)))
    return sorted(classes, key=min)


def brute_semigroup(table, gens):
    """All products of nonempty words of length <= |G| over gens."""
    table = np.asarray(table)
    n = len(table)
    layer = set(gens)
    total = set(layer)
    for _ in range(n):
        layer = {int(table[x, g]) for x in layer for g in gens}
        total |= layer
    return frozenset(total)


def zero_sum_word_exists(gens):
    """Search words of length <= 2 * max|g| summing to 0."""
    gens = sorted(set(gens))
    if not gens:
        return False
    bound = 2 * max(abs(g) for g in gens)
    sums = set(gens)
    for _ in range(bound):
        if 0 in sums:
            return True
        sums = {s + g for s in sums for g in gens if abs(s + g) <= bound * max(1, max(abs(g) for g in gens))}
    return 0 in sums


def sympy_lattice_contains(rows, z):
    from sympy import Matrix
    from sympy.matrices.normalforms import hermite_normal_form

    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return not any(z)
    M = Matrix(rows).T
    return hermite_normal_form(M) == hermite_normal_form(M.row_join(Matrix(list(z))))


def random_multigraph(rng: random.Random, max_vertices=8, max_out=3):
    n = rng.randint(1, max_vertices)
    edges = []
    for s in range(n):
        for t in range(rng.randint(0, max_out)):
            edges.append((s, rng.randrange(n), t + 1))
    return n, edges
