#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import networkx as nx

from .graph import Graph


class GraphFamilies:
    """the named graphs used throughout, vertex 0 first"""

    @classmethod
    def path(cls, n: int) -> Graph:
        return Graph(n, [(v, v + 1) for v in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return Graph(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def complete(cls, n: int) -> Graph:
        return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """K_{1,leaves} with the center at vertex 0"""
        return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])

    @classmethod
    def complete_bipartite(cls, p: int, q: int) -> Graph:
        return Graph(p + q, [(u, v) for u in range(p) for v in range(p, p + q)])

    @classmethod
    def house(cls) -> Graph:
        # a square 2-4-5-3 with the roof 1 on top of the edge 2-3
        return Graph.from_one_based(5, [[1, 2], [1, 3], [2, 3], [2, 4], [3, 5], [4, 5]])

    @classmethod
    def random_regular(cls, degree: int, n: int, seed: int) -> Graph:
        return Graph.from_networkx(nx.random_regular_graph(degree, n, seed=seed))
