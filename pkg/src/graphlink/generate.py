"""Seeded random generators for graphs, diagrams, and move sequences.

Used by the self-test suites and the property tests; everything takes an
explicit ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random

from . import moves
from .chord import ChordDiagram
from .graph import LabeledGraph


def random_labeled_graph(
    rng: random.Random, n: int, edge_prob: float = 0.4
) -> LabeledGraph:
    labels = tuple(rng.choice((1, -1)) for _ in range(n))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return LabeledGraph.from_edges(labels, edges)


def random_chord_diagram(rng: random.Random, n: int) -> ChordDiagram:
    slots = list(range(2 * n))
    rng.shuffle(slots)
    word = [0] * (2 * n)
    for c in range(1, n + 1):
        word[slots[2 * c - 2]] = c
        word[slots[2 * c - 1]] = c
    # renumber chords by first appearance so ids are canonical
    remap: dict[int, int] = {}
    for x in word:
        if x not in remap:
            remap[x] = len(remap) + 1
    signs = tuple(rng.choice((1, -1)) for _ in range(n))
    return ChordDiagram(tuple(remap[x] for x in word), signs)


def random_move_site(rng: random.Random, g: LabeledGraph, max_vertices: int):
    """Pick one applicable move that keeps the graph within max_vertices;
    arbitrary neighbourhoods are allowed for the add-pair move."""
    options: list[moves.MoveSite] = []
    if g.n + 1 <= max_vertices:
        options.append(moves.MoveSite(moves.MoveKind.R1_ADD, label=rng.choice((1, -1))))
    if g.n + 2 <= max_vertices:
        nb = frozenset(v for v in range(g.n) if rng.random() < 0.5)
        options.append(moves.MoveSite(moves.MoveKind.R2_ADD, neighborhood=nb))
    shrink = moves.enumerate_sites(
        g, {moves.MoveKind.R1_REMOVE, moves.MoveKind.R2_REMOVE}
    )
    inplace = moves.enumerate_sites(
        g, {moves.MoveKind.R3_FWD, moves.MoveKind.R3_INV, moves.MoveKind.R4}
    )
    options.extend(shrink)
    options.extend(inplace)
    options.extend(inplace)  # bias toward label/edge churn
    return rng.choice(options) if options else None


def random_unknot_graph(
    rng: random.Random, steps: int, max_vertices: int = 10
) -> LabeledGraph:
    """Random walk through the move graph starting at the empty graph.

    Every move preserves corank(A+E) = 0, so the result is always a
    graph-knot representing the unknot.
    """
    g = LabeledGraph.empty()
    for _ in range(steps):
        site = random_move_site(rng, g, max_vertices)
        if site is None:
            break
        g = moves.apply(g, site)
    return g
