#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

from .graph import Graph
from .graph_io import GraphIO
from .refinement_search import RefinementSearch

logger = logging.getLogger(__name__)


class GraphEnumerator:
    """all isomorphism classes of graphs on n vertices, built by vertex augmentation.

    every graph on n vertices arises from a graph on n - 1 vertices by adding a vertex adjacent to some subset,
    classes are told apart by the canonical certificate of the refinement search.
    """

    def __init__(self) -> None:
        self._levels: dict[int, list[Graph]] = {1: [Graph(1)]}

    def all_graphs(self, n: int) -> list[Graph]:
        """canonical representatives of all classes on n vertices, sorted by graph6 text"""
        if n in self._levels:
            return self._levels[n]

        classes: dict[tuple[int, int], Graph] = {}
        for base in self.all_graphs(n - 1):
            for subset in range(1 << (n - 1)):
                edges: list[tuple[int, int]] = [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
                search: RefinementSearch = RefinementSearch(Graph(n, [*base.edges, *edges]))
                key: tuple[int, int] = search.certificate()
                if key not in classes:
                    classes[key] = search.canonical_graph()

        self._levels[n] = sorted(classes.values(), key=GraphIO.to_graph6)
        logger.info(f"enumerated {len(classes)} graphs on {n} vertices")
        return self._levels[n]

    def connected_graphs(self, n: int) -> list[Graph]:
        return [g for g in self.all_graphs(n) if g.is_connected()]

    def asymmetric_connected_graphs(self, n: int) -> list[Graph]:
        return [g for g in self.connected_graphs(n) if RefinementSearch(g).automorphism_group().is_trivial()]
