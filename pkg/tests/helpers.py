"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's own kernels: rank is
textbook elimination on dense 2D lists, and the reference bracket is a
per-state loop over plain exponent->coefficient dicts.  Golden values are
only ever frozen after these agree with the fast paths.
"""

from __future__ import annotations

import itertools
import random

from graphlink import LabeledGraph, parse

G7_TEXT = "7;-+-+-+-;1-2,2-3,3-4,4-5,5-6,1-6,2-7,4-7,6-7"


def g7() -> LabeledGraph:
    return parse(G7_TEXT)


def naive_rank(dense: list[list[int]]) -> int:
    """GF(2) rank by plain row reduction on a dense 2D list."""
    m = [row[:] for row in dense]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                m[i] = [a ^ b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def dense_adjacency(g: LabeledGraph) -> list[list[int]]:
    return [[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)]


def dense_submatrix(dense: list[list[int]], idx: list[int]) -> list[list[int]]:
    return [[dense[i][j] for j in idx] for i in idx]


LOOP = {2: -1, -2: -1}


def poly_add(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def poly_mul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def loop_pow(k: int) -> dict[int, int]:
    out = {0: 1}
    for _ in range(k):
        out = poly_mul(out, LOOP)
    return out


def bracket_reference(g: LabeledGraph) -> dict[int, int]:
    """State-sum bracket via the naive dense rank, as an exp->coef dict."""
    dense = dense_adjacency(g)
    total: dict[int, int] = {}
    for mask in range(1 << g.n):
        idx = [v for v in range(g.n) if (mask >> v) & 1]
        cork = len(idx) - naive_rank(dense_submatrix(dense, idx))
        al = sum(1 for v in idx if g.labels[v] == -1) + sum(
            1 for v in range(g.n) if not ((mask >> v) & 1) and g.labels[v] == 1
        )
        term = poly_mul({2 * al - g.n: 1}, loop_pow(cork))
        total = poly_add(total, term)
    return total


def as_dict(poly) -> dict[int, int]:
    return dict(poly.terms)


def brute_force_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if g1.n != g2.n:
        return False
    for perm in itertools.permutations(range(g1.n)):
        if g1.relabel(list(perm)) == g2:
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> LabeledGraph:
    labels = tuple(rng.choice((1, -1)) for _ in range(n))
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return LabeledGraph.from_edges(labels, edges)


def shuffled(rng: random.Random, g: LabeledGraph) -> LabeledGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)
