#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import os
import unittest

from qaoadla.errors.input_error import InputError
from qaoadla.graphs.edge_saturation import EdgeSaturation
from qaoadla.graphs.graph import Graph
from qaoadla.graphs.graph_enumerator import GraphEnumerator
from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.graphs.graph_shape import GraphShape
from qaoadla.lie.generators import Generators
from qaoadla.lie.lie_closure import LieClosure


class TestEdgeSaturation(unittest.TestCase):
    def test_house(self):
        self.assertEqual(GraphFamilies.complete(5), EdgeSaturation.saturate(GraphFamilies.house()))

    def test_fixpoints(self):
        self.assertEqual(GraphFamilies.star(3), EdgeSaturation.saturate(GraphFamilies.star(3)))
        k23: Graph = GraphFamilies.complete_bipartite(2, 3)
        self.assertEqual(k23, EdgeSaturation.saturate(k23))

    def test_spider(self):
        spider: Graph = Graph.from_one_based(5, [[1, 3], [2, 3], [3, 4], [4, 5]])
        saturated: Graph = EdgeSaturation.saturate(spider)
        self.assertTrue(EdgeSaturation.is_complete_bipartite(saturated))
        self.assertEqual([[1, 2, 4], [3, 5]], GraphShape.of(saturated).one_based_parts())

    def test_preconditions(self):
        with self.assertRaises(InputError):
            EdgeSaturation.saturate(GraphFamilies.cycle(5))
        with self.assertRaises(InputError):
            EdgeSaturation.saturate(GraphFamilies.path(4))
        with self.assertRaises(InputError):
            EdgeSaturation.saturate(Graph(4, [(0, 1), (2, 3)]))

    def check_free_dimension_kept(self, n: int) -> int:
        saturable: int = 0
        for graph in GraphEnumerator().connected_graphs(n):
            try:
                saturated: Graph = EdgeSaturation.saturate(graph)
            except InputError:
                continue
            saturable += 1
            before: int = LieClosure.of(Generators.free(graph)).dim
            self.assertEqual(before, LieClosure.of(Generators.free(saturated)).dim, graph)
        return saturable

    def test_free_dimension_kept(self):
        # the star, the paw, the diamond and k4 are the four vertex graphs that are neither paths nor cycles
        self.assertEqual(4, sum(self.check_free_dimension_kept(n) for n in range(3, 5)))

    @unittest.skipUnless(os.environ.get("QAOADLA_LONG_TESTS"), "set QAOADLA_LONG_TESTS to run the five vertex check")
    def test_free_dimension_kept_five_vertices(self):
        self.assertGreater(self.check_free_dimension_kept(5), 0)
