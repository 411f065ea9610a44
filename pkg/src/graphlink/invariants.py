"""Graph-link invariants: Kauffman bracket, writhe, Jones polynomial, and
the minimality/adequacy report.

The bracket of a graph on n vertices is an exact sum over all 2**n states;
the contribution of a state s is a^(2*alpha(s) - n) times the loop factor
(-a^2 - a^-2) raised to the corank of the induced adjacency matrix.  States
are enumerated in bitmask order and may be partitioned across threads; the
merge is an exact commutative sum, so the result is bit-identical for any
worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf2
from .errors import DomainError, ResourceLimitError
from .graph import LabeledGraph, a_state, adjacency_matrix, b_state
from .laurent import LaurentPoly, loop_factor_pow, span, unit_normalize

#: Default cap on the state-sum size (2**n states).
DEFAULT_MAX_N = 24


@lru_cache(maxsize=None)
def _loop_pow(k: int) -> LaurentPoly:
    return loop_factor_pow(k)


def kauffman_bracket(
    g: LabeledGraph, max_n: int = DEFAULT_MAX_N, threads: int = 1
) -> LaurentPoly:
    """Exact Kauffman bracket of a labeled graph."""
    n = g.n
    if n > max_n:
        raise ResourceLimitError(
            f"bracket of {n} vertices needs 2^{n} states (limit max_n={max_n})"
        )
    coranks = gf2.subset_coranks(g.adj, n, threads=threads)
    dtype = np.uint32 if n <= 32 else np.uint64
    masks = np.arange(1 << n, dtype=dtype)
    neg = sum(1 << v for v, s in enumerate(g.labels) if s == -1)
    pos = sum(1 << v for v, s in enumerate(g.labels) if s == 1)
    n_pos = pos.bit_count()
    alphas = np.bitwise_count(masks & dtype(neg)).astype(np.int64) + (
        n_pos - np.bitwise_count(masks & dtype(pos)).astype(np.int64)
    )
    keys = alphas * (n + 1) + coranks
    counts = np.bincount(keys, minlength=(n + 1) * (n + 1))
    total = LaurentPoly()
    for key in np.flatnonzero(counts):
        al, c = divmod(int(key), n + 1)
        weight = int(counts[key])
        total = total + _loop_pow(c).scale(weight, 2 * al - n)
    return total


def is_graph_knot(g: LabeledGraph) -> bool:
    """True iff corank(A(G) + E) = 0, i.e. the graph represents a one-
    component object.  Constant across a move orbit, so one representative
    decides."""
    return gf2.corank(gf2.add_identity(adjacency_matrix(g))) == 0


def writhe(g: LabeledGraph) -> int:
    """Writhe number: sum over vertices of (-1)^corank(B_i) * sign(v_i),
    with B_i = A + E + E_ii.  Defined only for graph-knots."""
    if not is_graph_knot(g):
        raise DomainError("writhe is defined only for graph-knots (corank(A+E)=0)")
    base = gf2.add_identity(adjacency_matrix(g))
    total = 0
    for i in range(g.n):
        c = gf2.corank(gf2.flip_diagonal(base, i))
        total += -g.labels[i] if c % 2 else g.labels[i]
    return total


def jones(g: LabeledGraph, max_n: int = DEFAULT_MAX_N, threads: int = 1) -> LaurentPoly:
    """Jones polynomial (-a)^(-3w) * <G> of a graph-knot."""
    w = writhe(g)
    return unit_normalize(kauffman_bracket(g, max_n=max_n, threads=threads), w)


@dataclass(frozen=True)
class PropertyReport:
    """Everything the minimality machinery derives from one graph.

    ``span`` and ``vertex_lower_bound`` are None when the graph is too big
    for the state sum; all other fields need only a handful of coranks.
    """

    n: int
    k: int
    l: int
    genus: int
    alternating: bool
    adequate: bool
    non_split: bool
    graph_knot: bool
    span: int | None
    vertex_lower_bound: int | None
    minimal_certified: bool

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "genus": self.genus,
            "alternating": self.alternating,
            "adequate": self.adequate,
            "non_split": self.non_split,
            "graph_knot": self.graph_knot,
            "span": self.span,
            "vertex_lower_bound": self.vertex_lower_bound,
            "minimal_certified": self.minimal_certified,
        }


def _circles(g: LabeledGraph, mask: int) -> int:
    members = [v for v in range(g.n) if (mask >> v) & 1]
    sub = gf2.principal_submatrix(adjacency_matrix(g), members)
    return gf2.corank(sub) + 1


def _locally_minimal(g: LabeledGraph, mask: int, circles: int) -> bool:
    # adequate at one state: no single-vertex flip gains a circle
    for v in range(g.n):
        if _circles(g, mask ^ (1 << v)) == circles + 1:
            return False
    return True


def analyze(
    g: LabeledGraph, max_n: int = DEFAULT_MAX_N, threads: int = 1
) -> PropertyReport:
    """Compute the full property report for one representative."""
    n = g.n
    sa = a_state(g)
    sb = b_state(g)
    k = _circles(g, sa.mask)
    l = _circles(g, sb.mask)
    genus = 1 - (k + l - n) // 2
    alternating = k + l == n + 2
    adequate = _locally_minimal(g, sa.mask, k) and _locally_minimal(g, sb.mask, l)
    non_split = all(g.adj[v] != 0 for v in range(n))
    knot = is_graph_knot(g)
    if n <= max_n:
        br = kauffman_bracket(g, max_n=max_n, threads=threads)
        sp = span(br) if not br.is_zero() else None
    else:
        sp = None
    lower = None if sp is None else -(-sp // 4)
    return PropertyReport(
        n=n,
        k=k,
        l=l,
        genus=genus,
        alternating=alternating,
        adequate=adequate,
        non_split=non_split,
        graph_knot=knot,
        span=sp,
        vertex_lower_bound=lower,
        minimal_certified=alternating and non_split,
    )


def brackets_unit_equivalent(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Whether q = (-a)^(3k) * p for some integer k (the R1 ambiguity)."""
    if p.is_zero() or q.is_zero():
        return p == q
    shift = q.min_exp - p.min_exp
    if shift % 3:
        return False
    k = shift // 3
    return q == p.scale(-1 if k % 2 else 1, 3 * k)
