#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

from .graph import Graph
from .perm_group import PermGroup

Edge = tuple[int, int]


@dataclass(frozen=True)
class GraphOrbits:
    """the vertex and edge orbits of a group acting on a graph, each orbit sorted and led by its smallest member"""

    vertex_orbits: tuple[tuple[int, ...], ...]
    edge_orbits: tuple[tuple[Edge, ...], ...]

    @classmethod
    def of(cls, graph: Graph, group: PermGroup) -> "GraphOrbits":
        vertex_orbits: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for v in range(graph.n):
            if v not in seen:
                orbit: tuple[int, ...] = tuple(sorted({g(v) for g in group.elements}))
                seen.update(orbit)
                vertex_orbits.append(orbit)

        edge_orbits: list[tuple[Edge, ...]] = []
        seen_edges: set[Edge] = set()
        for u, v in graph.edges:
            if (u, v) not in seen_edges:
                edges: tuple[Edge, ...] = tuple(sorted({(min(g(u), g(v)), max(g(u), g(v))) for g in group.elements}))
                seen_edges.update(edges)
                edge_orbits.append(edges)
        return cls(tuple(vertex_orbits), tuple(edge_orbits))

    def one_based(self) -> dict[str, list[list[object]]]:
        return {
            "vertex_orbits": [[v + 1 for v in orbit] for orbit in self.vertex_orbits],
            "edge_orbits": [[[u + 1, v + 1] for u, v in orbit] for orbit in self.edge_orbits],
        }
