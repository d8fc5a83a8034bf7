#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

import networkx as nx

from qaoadla.graphs.graph import Graph
from qaoadla.graphs.graph_enumerator import GraphEnumerator
from qaoadla.graphs.graph_io import GraphIO
from qaoadla.graphs.refinement_search import RefinementSearch


class TestGraphEnumerator(unittest.TestCase):
    # shared between the tests, the levels are cached inside the enumerator
    enumerator: GraphEnumerator = GraphEnumerator()

    def test_counts(self):
        self.assertListEqual([1, 2, 4, 11, 34, 156], [len(self.enumerator.all_graphs(n)) for n in range(1, 7)])
        self.assertListEqual([1, 1, 2, 6, 21, 112], [len(self.enumerator.connected_graphs(n)) for n in range(1, 7)])

    def test_seven_vertices(self):
        self.assertEqual(1044, len(self.enumerator.all_graphs(7)))
        self.assertEqual(853, len(self.enumerator.connected_graphs(7)))

    def test_atlas_oracle(self):
        # every graph of the atlas has exactly one representative in the enumeration
        atlas: dict[int, set[tuple[int, int]]] = {}
        for nx_graph in nx.graph_atlas_g()[1:]:
            graph: Graph = Graph.from_networkx(nx_graph)
            atlas.setdefault(graph.n, set()).add(RefinementSearch(graph).certificate())
        for n in range(1, 7):
            enumerated = {RefinementSearch(g).certificate() for g in self.enumerator.all_graphs(n)}
            self.assertSetEqual(atlas[n], enumerated)

    def test_asymmetric(self):
        self.assertEqual(0, len(self.enumerator.asymmetric_connected_graphs(5)))
        self.assertEqual(8, len(self.enumerator.asymmetric_connected_graphs(6)))

    def test_graph6_round_trip(self):
        for n in range(1, 8):
            for graph in self.enumerator.all_graphs(n):
                text: str = GraphIO.to_graph6(graph)
                self.assertEqual(text, GraphIO.to_graph6(GraphIO.parse(text)))
                self.assertEqual(graph, GraphIO.parse(text))

    def test_sorted(self):
        texts: list[str] = [GraphIO.to_graph6(g) for g in self.enumerator.all_graphs(5)]
        self.assertListEqual(sorted(texts), texts)
