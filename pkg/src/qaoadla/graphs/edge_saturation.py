#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging
from itertools import combinations

from .graph import Graph
from .graph_shape import GraphShape
from .graph_shape import ShapeKind
from ..errors.input_error import InputError

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class EdgeSaturation:
    """adds edges through the Y and paw configurations until nothing changes.

    both rules leave the free-ansatz lie algebra unchanged, the fixpoint is the complete graph for
    non-bipartite inputs and the complete bipartite graph on the bipartition otherwise.
    """

    @classmethod
    def saturate(cls, graph: Graph) -> Graph:
        shape: GraphShape = GraphShape.of(graph)
        if shape.kind == ShapeKind.DISCONNECTED:
            raise InputError("graph must be connected")
        if shape.kind in (ShapeKind.PATH, ShapeKind.CYCLE):
            raise InputError(f"edge saturation does not apply to {shape.kind.name.lower()} graphs")

        rounds: int = 0
        while additions := cls._additions(graph):
            graph = graph.with_edges(additions)
            rounds += 1
            logger.debug(f"saturation round {rounds} added {len(additions)} edges")
        return graph

    @classmethod
    def _additions(cls, graph: Graph) -> set[Edge]:
        additions: set[Edge] = set()
        for a, b, e in cls._y_configurations(graph) + cls._paw_configurations(graph):
            for u in (a, b):
                if not graph.has_edge(u, e):
                    additions.add((min(u, e), max(u, e)))
        return additions

    @classmethod
    def _y_configurations(cls, graph: Graph) -> list[tuple[int, int, int]]:
        """center c with neighbors a, b, w and a neighbor e of w, five distinct vertices; adds {a, e} and {b, e}"""
        result: list[tuple[int, int, int]] = []
        for c in range(graph.n):
            for w in sorted(graph.neighbors(c)):
                others: list[int] = sorted(graph.neighbors(c) - {w})
                for e in sorted(graph.neighbors(w) - {c}):
                    for a, b in combinations(others, 2):
                        if e not in (a, b):
                            result.append((a, b, e))
        return result

    @classmethod
    def _paw_configurations(cls, graph: Graph) -> list[tuple[int, int, int]]:
        """triangle a, b, c and a vertex e adjacent to c outside the triangle; adds {a, e} and {b, e}"""
        result: list[tuple[int, int, int]] = []
        for c in range(graph.n):
            for a, b in combinations(sorted(graph.neighbors(c)), 2):
                if not graph.has_edge(a, b):
                    continue
                for e in sorted(graph.neighbors(c) - {a, b}):
                    result.append((a, b, e))
        return result

    @classmethod
    def is_complete(cls, graph: Graph) -> bool:
        return graph.edge_count() == graph.n * (graph.n - 1) // 2

    @classmethod
    def is_complete_bipartite(cls, graph: Graph) -> bool:
        shape: GraphShape = GraphShape.of(graph)
        if shape.parts is None:
            return False
        return graph.edge_count() == len(shape.parts[0]) * len(shape.parts[1])
