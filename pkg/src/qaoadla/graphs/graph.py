#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from collections.abc import Iterable

import networkx as nx

from ..errors.input_error import InputError


class Graph:
    """an undirected simple graph on the vertices 0..n-1.

    vertices are 0-based inside the package, every external format and report uses 1-based labels.
    """

    __slots__ = ("n", "edges", "_neighbors")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InputError(f"a graph needs at least one vertex, got n = {n}")

        normalized: set[tuple[int, int]] = set()
        for u, v in edges:
            # reject loops, out of range vertices and duplicate edges
            if u == v:
                raise InputError(f"loop at vertex {u + 1} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {{{u + 1}, {v + 1}}} has a vertex outside of 1..{n}")
            edge: tuple[int, int] = (min(u, v), max(u, v))
            if edge in normalized:
                raise InputError(f"duplicate edge {{{edge[0] + 1}, {edge[1] + 1}}}")
            normalized.add(edge)

        self.n: int = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(normalized))
        self._neighbors: tuple[frozenset[int], ...] = tuple(
            frozenset({v for u, v in self.edges if u == w} | {u for u, v in self.edges if v == w}) for w in range(n)
        )

    @classmethod
    def from_one_based(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        pairs: list[tuple[int, int]] = []
        for edge in edges:
            u, v = edge
            pairs.append((int(u) - 1, int(v) - 1))
        return cls(n, pairs)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        # relabel the nodes by their position in the node order
        index: dict[int, int] = {node: i for i, node in enumerate(sorted(graph.nodes))}
        return cls(graph.number_of_nodes(), [(index[u], index[v]) for u, v in graph.edges])

    def to_networkx(self) -> nx.Graph:
        graph: nx.Graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def neighbors(self, vertex: int) -> frozenset[int]:
        return self._neighbors[vertex]

    def degree(self, vertex: int) -> int:
        return len(self._neighbors[vertex])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbors[u]

    def edge_count(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """a copy of the graph extended with the given edges, edges already present are ignored"""
        extra: set[tuple[int, int]] = {(min(u, v), max(u, v)) for u, v in edges} - set(self.edges)
        return Graph(self.n, [*self.edges, *extra])

    def relabel(self, image: Iterable[int]) -> "Graph":
        """the graph with vertex u renamed to image[u]"""
        mapping: list[int] = list(image)
        return Graph(self.n, [(mapping[u], mapping[v]) for u, v in self.edges])

    def one_based_edges(self) -> list[list[int]]:
        return [[u + 1, v + 1] for u, v in self.edges]

    def __eq__(self, other: object) -> bool:
        if type(other) != Graph:
            return False
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.one_based_edges()})"
