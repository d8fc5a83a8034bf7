#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import os
import unittest

from qaoadla.graphs.graph_enumerator import GraphEnumerator
from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.lie.hierarchy import Hierarchy
from qaoadla.lie.hierarchy_report import HierarchyReport


class TestHierarchy(unittest.TestCase):
    def test_house(self):
        report: HierarchyReport = Hierarchy.check(GraphFamilies.house())
        self.assertEqual((248, 270, 510), (report.dim_std, report.dim_nat, report.dim_free))
        self.assertLessEqual(report.dim_std, report.dim_orbit)
        self.assertLessEqual(report.dim_orbit, report.dim_nat)
        self.assertEqual(272, report.u_nat_dim)
        self.assertTrue(report.u_nat_spanned)
        self.assertFalse(report.std_equals_nat)
        self.assertTrue(report.holds)

    def test_paths_skip_the_unitary_check(self):
        report: HierarchyReport = Hierarchy.check(GraphFamilies.path(4))
        self.assertIsNone(report.u_nat_dim)
        self.assertEqual(16, report.dim_nat)
        self.assertTrue(report.holds)

    def test_small_graphs(self):
        enumerator: GraphEnumerator = GraphEnumerator()
        for n in range(2, 5):
            for graph in enumerator.connected_graphs(n):
                self.assertTrue(Hierarchy.check(graph).holds, graph)

    @unittest.skipUnless(os.environ.get("QAOADLA_LONG_TESTS"), "set QAOADLA_LONG_TESTS to run the five vertex sweep")
    def test_five_vertex_graphs(self):
        for graph in GraphEnumerator().connected_graphs(5):
            self.assertTrue(Hierarchy.check(graph).holds, graph)
