"""Reidemeister graph-moves as executable rewrites.

Move semantics follow the adjacency-matrix transformations (rather than the
looser prose descriptions): the second move adds or removes a non-adjacent
'+'/'-' pair with identical neighbourhoods; the third move rewires a
degree-2 '-' vertex, dropping its two incident edges and giving it the
symmetric difference of its neighbours' neighbourhoods while those two
neighbours turn '+'; the fourth move toggles adjacency between the three
neighbourhood classes of an edge and swap-negates the endpoint labels; the
fifth move is literally the composite of the second and fourth moves and
turns one '-' vertex into a '+' vertex with two new pendant '+' vertices
(not adjacent to each other).

Every apply() is a pure transformation returning a new graph.  Removed
vertices compact the index range downward; added vertices take the highest
indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import MoveError, ParseError
from .graph import LabeledGraph


class MoveKind(str, Enum):
    R1_ADD = "R1_add"
    R1_REMOVE = "R1_remove"
    R2_ADD = "R2_add"
    R2_REMOVE = "R2_remove"
    R3_FWD = "R3_fwd"
    R3_INV = "R3_inv"
    R4 = "R4"
    R5_EXPAND = "R5_expand"
    R5_CONTRACT = "R5_contract"


#: The four defining moves in both directions; R5 is derived and excluded.
BASIC_KINDS = frozenset(
    {
        MoveKind.R1_ADD,
        MoveKind.R1_REMOVE,
        MoveKind.R2_ADD,
        MoveKind.R2_REMOVE,
        MoveKind.R3_FWD,
        MoveKind.R3_INV,
        MoveKind.R4,
    }
)

ALL_KINDS = frozenset(MoveKind)


@dataclass(frozen=True)
class MoveSite:
    """One applicable (or candidate) move: kind, involved vertices (0-based),
    and the extra data the kind needs (label for R1_add, neighbourhood for
    R2_add)."""

    kind: MoveKind
    vertices: tuple[int, ...] = ()
    label: int = 0
    neighborhood: frozenset[int] = field(default_factory=frozenset)


def _require(cond: bool, site: MoveSite, reason: str) -> None:
    if not cond:
        raise MoveError(f"{site.kind.value}: {reason}")


def _check_vertices(g: LabeledGraph, site: MoveSite) -> None:
    vs = site.vertices
    _require(len(set(vs)) == len(vs), site, "vertices must be distinct")
    for v in vs:
        _require(0 <= v < g.n, site, f"vertex {v + 1} out of range")


def _delete_vertices(g: LabeledGraph, dead: Iterable[int]) -> LabeledGraph:
    doomed = sorted(set(dead), reverse=True)
    labels = list(g.labels)
    rows = list(g.adj)
    for v in doomed:
        del labels[v]
        del rows[v]
        low = (1 << v) - 1
        rows = [(r & low) | ((r >> (v + 1)) << v) for r in rows]
    return LabeledGraph(len(labels), tuple(labels), tuple(rows))


def apply(g: LabeledGraph, site: MoveSite) -> LabeledGraph:
    """Apply one move site, checking its precondition first."""
    _check_vertices(g, site)
    kind = site.kind

    if kind == MoveKind.R1_ADD:
        _require(site.label in (1, -1), site, "label must be +1 or -1")
        return LabeledGraph(
            g.n + 1, g.labels + (site.label,), g.adj + (0,)
        )

    if kind == MoveKind.R1_REMOVE:
        (v,) = site.vertices
        _require(g.adj[v] == 0, site, f"vertex {v + 1} is not isolated")
        return _delete_vertices(g, [v])

    if kind == MoveKind.R2_ADD:
        nb = 0
        for t in site.neighborhood:
            _require(0 <= t < g.n, site, f"neighbourhood vertex {t + 1} out of range")
            nb |= 1 << t
        labels = g.labels + (1, -1)
        rows = [r | (((nb >> i) & 1) * (0b11 << g.n)) for i, r in enumerate(g.adj)]
        rows += [nb, nb]
        return LabeledGraph(g.n + 2, labels, tuple(rows))

    if kind == MoveKind.R2_REMOVE:
        u, v = site.vertices
        _require(g.labels[u] != g.labels[v], site, "labels must differ")
        _require(not g.has_edge(u, v), site, "vertices must be non-adjacent")
        _require(
            g.adj[u] == g.adj[v],
            site,
            "vertices must have the same adjacency with all others",
        )
        return _delete_vertices(g, [u, v])

    if kind == MoveKind.R3_FWD:
        u, v, w = site.vertices
        _require(
            g.labels[u] == g.labels[v] == g.labels[w] == -1,
            site,
            "u, v, w must all be labeled '-'",
        )
        _require(
            g.adj[u] == (1 << v) | (1 << w),
            site,
            "u must be adjacent exactly to v and w",
        )
        _require(not g.has_edge(v, w), site, "v and w must be non-adjacent")
        keep = ~((1 << u) | (1 << v) | (1 << w))
        new_nu = (g.adj[v] ^ g.adj[w]) & keep
        rows = list(g.adj)
        rows[u] = new_nu
        for t in range(g.n):
            if t == u:
                continue
            if (new_nu >> t) & 1:
                rows[t] |= 1 << u
            else:
                rows[t] &= ~(1 << u)
        labels = list(g.labels)
        labels[v] = labels[w] = 1
        return LabeledGraph(g.n, tuple(labels), tuple(rows))

    if kind == MoveKind.R3_INV:
        u, v, w = site.vertices
        _require(g.labels[u] == -1, site, "u must be labeled '-'")
        _require(
            g.labels[v] == g.labels[w] == 1, site, "v and w must be labeled '+'"
        )
        _require(not g.has_edge(u, v), site, "u and v must be non-adjacent")
        _require(not g.has_edge(u, w), site, "u and w must be non-adjacent")
        _require(not g.has_edge(v, w), site, "v and w must be non-adjacent")
        keep = ~((1 << u) | (1 << v) | (1 << w))
        _require(
            g.adj[u] == (g.adj[v] ^ g.adj[w]) & keep,
            site,
            "u's neighbourhood must be the symmetric difference of v's and w's",
        )
        new_nu = (1 << v) | (1 << w)
        rows = list(g.adj)
        rows[u] = new_nu
        for t in range(g.n):
            if t == u:
                continue
            if (new_nu >> t) & 1:
                rows[t] |= 1 << u
            else:
                rows[t] &= ~(1 << u)
        labels = list(g.labels)
        labels[v] = labels[w] = -1
        return LabeledGraph(g.n, tuple(labels), tuple(rows))

    if kind == MoveKind.R4:
        u, v = site.vertices
        _require(g.has_edge(u, v), site, "u and v must be adjacent")
        uv = (1 << u) | (1 << v)
        p1 = g.adj[u] & ~g.adj[v] & ~uv
        p2 = g.adj[v] & ~g.adj[u] & ~uv
        p3 = g.adj[u] & g.adj[v]
        rows = list(g.adj)
        for t in range(g.n):
            bit = 1 << t
            if p1 & bit:
                rows[t] ^= p2 | p3
            elif p2 & bit:
                rows[t] ^= p1 | p3
            elif p3 & bit:
                rows[t] ^= p1 | p2
        labels = list(g.labels)
        labels[u], labels[v] = -g.labels[v], -g.labels[u]
        return LabeledGraph(g.n, tuple(labels), tuple(rows))

    if kind == MoveKind.R5_EXPAND:
        (u,) = site.vertices
        _require(g.labels[u] == -1, site, "u must be labeled '-'")
        # R2_add of a pair seeing only u, then R4 along the edge to the
        # '-' partner; net effect: u turns '+' and gains two pendant '+'
        # vertices which are not adjacent to each other.
        g2 = apply(g, MoveSite(MoveKind.R2_ADD, neighborhood=frozenset({u})))
        return apply(g2, MoveSite(MoveKind.R4, (u, g.n + 1)))

    if kind == MoveKind.R5_CONTRACT:
        u, p, q = site.vertices
        _require(g.labels[u] == 1, site, "u must be labeled '+'")
        _require(
            g.labels[p] == 1 and g.labels[q] == 1,
            site,
            "the pendant pair must be labeled '+'",
        )
        _require(
            g.adj[p] == 1 << u and g.adj[q] == 1 << u,
            site,
            "p and q must be adjacent exactly to u",
        )
        g2 = apply(g, MoveSite(MoveKind.R4, (u, q)))
        return apply(g2, MoveSite(MoveKind.R2_REMOVE, (p, q)))

    raise MoveError(f"unknown move kind {kind!r}")


def enumerate_sites(
    g: LabeledGraph,
    kinds: Iterable[MoveKind] | None = None,
    r2_neighborhoods: Sequence[Iterable[int]] | None = None,
) -> list[MoveSite]:
    """All applicable sites of the requested kinds, duplicate-free.

    R1_add always yields its two label variants.  R2_add is an unbounded
    family, so unless ``r2_neighborhoods`` supplies explicit sets it is
    enumerated over the neighbourhoods already present in the graph plus
    the empty set.
    """
    wanted = ALL_KINDS if kinds is None else frozenset(MoveKind(k) for k in kinds)
    sites: list[MoveSite] = []

    if MoveKind.R1_ADD in wanted:
        sites.append(MoveSite(MoveKind.R1_ADD, label=1))
        sites.append(MoveSite(MoveKind.R1_ADD, label=-1))

    if MoveKind.R1_REMOVE in wanted:
        for v in range(g.n):
            if g.adj[v] == 0:
                sites.append(MoveSite(MoveKind.R1_REMOVE, (v,)))

    if MoveKind.R2_ADD in wanted:
        if r2_neighborhoods is None:
            pool = {0} | {g.adj[v] for v in range(g.n)}
        else:
            pool = set()
            for nb in r2_neighborhoods:
                mask = 0
                for t in nb:
                    mask |= 1 << t
                pool.add(mask)
        for mask in sorted(pool):
            members = frozenset(
                t for t in range(g.n) if (mask >> t) & 1
            )
            sites.append(MoveSite(MoveKind.R2_ADD, neighborhood=members))

    if MoveKind.R2_REMOVE in wanted:
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if (
                    g.labels[u] != g.labels[v]
                    and not g.has_edge(u, v)
                    and g.adj[u] == g.adj[v]
                ):
                    sites.append(MoveSite(MoveKind.R2_REMOVE, (u, v)))

    if MoveKind.R3_FWD in wanted:
        for u in range(g.n):
            if g.labels[u] != -1 or g.degree(u) != 2:
                continue
            v, w = g.neighbors(u)
            if (
                g.labels[v] == g.labels[w] == -1
                and not g.has_edge(v, w)
            ):
                sites.append(MoveSite(MoveKind.R3_FWD, (u, v, w)))

    if MoveKind.R3_INV in wanted:
        for u in range(g.n):
            if g.labels[u] != -1:
                continue
            for v in range(g.n):
                if v == u or g.labels[v] != 1 or g.has_edge(u, v):
                    continue
                for w in range(v + 1, g.n):
                    if (
                        w == u
                        or g.labels[w] != 1
                        or g.has_edge(u, w)
                        or g.has_edge(v, w)
                    ):
                        continue
                    keep = ~((1 << u) | (1 << v) | (1 << w))
                    if g.adj[u] == (g.adj[v] ^ g.adj[w]) & keep:
                        sites.append(MoveSite(MoveKind.R3_INV, (u, v, w)))

    if MoveKind.R4 in wanted:
        for u, v in g.edges:
            sites.append(MoveSite(MoveKind.R4, (u, v)))

    if MoveKind.R5_EXPAND in wanted:
        for u in range(g.n):
            if g.labels[u] == -1:
                sites.append(MoveSite(MoveKind.R5_EXPAND, (u,)))

    if MoveKind.R5_CONTRACT in wanted:
        for u in range(g.n):
            if g.labels[u] != 1:
                continue
            pendants = [
                p
                for p in range(g.n)
                if p != u and g.labels[p] == 1 and g.adj[p] == 1 << u
            ]
            for a in range(len(pendants)):
                for b in range(a + 1, len(pendants)):
                    sites.append(
                        MoveSite(MoveKind.R5_CONTRACT, (u, pendants[a], pendants[b]))
                    )

    return sites


def apply_script(g: LabeledGraph, sites: Iterable[MoveSite]) -> LabeledGraph:
    for site in sites:
        g = apply(g, site)
    return g


# ---------------------------------------------------------------------------
# Move scripts: newline-separated "kind arg1 arg2 ..." lines, 1-based.


def format_site(site: MoveSite) -> str:
    kind = site.kind
    if kind == MoveKind.R1_ADD:
        return f"R1_add {'+' if site.label == 1 else '-'}"
    if kind == MoveKind.R2_ADD:
        body = ",".join(str(t + 1) for t in sorted(site.neighborhood))
        return f"R2_add {body}" if body else "R2_add"
    args = " ".join(str(v + 1) for v in site.vertices)
    return f"{kind.value} {args}" if args else kind.value


def parse_script(text: str) -> list[MoveSite]:
    sites = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        name, args = tokens[0], tokens[1:]
        try:
            kind = MoveKind(name)
        except ValueError:
            raise ParseError(f"line {lineno}: unknown move kind {name!r}")
        try:
            if kind == MoveKind.R1_ADD:
                if len(args) != 1 or args[0] not in ("+", "-"):
                    raise ValueError
                sites.append(MoveSite(kind, label=1 if args[0] == "+" else -1))
            elif kind == MoveKind.R2_ADD:
                if len(args) > 1:
                    raise ValueError
                members = frozenset(
                    int(t) - 1 for t in args[0].split(",") if t
                ) if args else frozenset()
                if any(v < 0 for v in members):
                    raise ValueError
                sites.append(MoveSite(kind, neighborhood=members))
            else:
                arity = {
                    MoveKind.R1_REMOVE: 1,
                    MoveKind.R2_REMOVE: 2,
                    MoveKind.R3_FWD: 3,
                    MoveKind.R3_INV: 3,
                    MoveKind.R4: 2,
                    MoveKind.R5_EXPAND: 1,
                    MoveKind.R5_CONTRACT: 3,
                }[kind]
                if len(args) != arity:
                    raise ValueError
                vs = tuple(int(a) - 1 for a in args)
                if any(v < 0 for v in vs):
                    raise ValueError
                sites.append(MoveSite(kind, vs))
        except ValueError:
            raise ParseError(f"line {lineno}: bad arguments for {name}: {args!r}")
    return sites


def format_script(sites: Iterable[MoveSite]) -> str:
    return "\n".join(format_site(s) for s in sites)
