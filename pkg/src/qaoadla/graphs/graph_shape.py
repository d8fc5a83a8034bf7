#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass
from enum import auto
from enum import Enum

import networkx as nx

from .graph import Graph


class ShapeKind(Enum):
    DISCONNECTED = auto()
    PATH = auto()
    CYCLE = auto()
    BIPARTITE = auto()
    NON_BIPARTITE = auto()


@dataclass(frozen=True)
class GraphShape:
    kind: ShapeKind
    # the bipartition of a connected bipartite graph, the first part holds vertex 0
    parts: tuple[frozenset[int], frozenset[int]] | None = None

    @classmethod
    def of(cls, graph: Graph) -> "GraphShape":
        nx_graph: nx.Graph = graph.to_networkx()
        if not nx.is_connected(nx_graph):
            return cls(ShapeKind.DISCONNECTED)

        # distances from vertex 0 give the unique 2-coloring when there is one
        parts: tuple[frozenset[int], frozenset[int]] | None = None
        if nx.is_bipartite(nx_graph):
            distances: dict[int, int] = nx.single_source_shortest_path_length(nx_graph, 0)
            parts = (
                frozenset(v for v, d in distances.items() if d % 2 == 0),
                frozenset(v for v, d in distances.items() if d % 2 == 1),
            )

        degrees: list[int] = [graph.degree(v) for v in range(graph.n)]
        if graph.edge_count() == graph.n - 1 and max(degrees, default=0) <= 2:
            return cls(ShapeKind.PATH, parts)
        if graph.n >= 3 and all(d == 2 for d in degrees):
            return cls(ShapeKind.CYCLE, parts)
        if parts is not None:
            return cls(ShapeKind.BIPARTITE, parts)
        return cls(ShapeKind.NON_BIPARTITE)

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None

    def one_based_parts(self) -> list[list[int]] | None:
        if self.parts is None:
            return None
        return [sorted(v + 1 for v in part) for part in self.parts]
