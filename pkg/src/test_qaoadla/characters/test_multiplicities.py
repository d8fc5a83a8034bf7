#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

from qaoadla.characters.multiplicities import Multiplicities
from qaoadla.characters.multiplicity_table import MultiplicityTable
from qaoadla.errors.resource_error import ResourceError
from qaoadla.graphs.graph import Graph
from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.symmetry.decomposition_report import DecompositionReport


class TestMultiplicities(unittest.TestCase):
    def setUp(self):
        self.house: Graph = GraphFamilies.house()

    def test_house(self):
        table: MultiplicityTable = Multiplicities.multiplicity_table(self.house)
        self.assertFalse(table.trivial_only)
        self.assertEqual(10, table.trivial)
        self.assertEqual(6, table.entry(("t", "s")).multiplicity)
        self.assertEqual(10, table.entry(("s", "t")).multiplicity)
        self.assertEqual(6, table.entry(("s", "s")).multiplicity)
        self.assertEqual([10, 10, 6, 6], table.dual_dimensions())
        self.assertEqual(32, table.total_dimension())

    def test_projector_ranks(self):
        table: MultiplicityTable = Multiplicities.multiplicity_table(self.house)
        for entry in table.entries:
            self.assertEqual(entry.multiplicity, Multiplicities.projector_rank(self.house, entry.label), entry.label)

    def test_duality(self):
        table: MultiplicityTable = Multiplicities.multiplicity_table(self.house)
        decomposition: DecompositionReport = Multiplicities.u_nat_decomposition(self.house)
        self.assertTrue(Multiplicities.duality_holds(table, decomposition))

    def test_nonabelian_groups(self):
        table: MultiplicityTable = Multiplicities.multiplicity_table(GraphFamilies.complete(4))
        self.assertTrue(table.trivial_only)
        self.assertEqual(3, table.trivial)
        self.assertEqual({"trivial_only": True, "entries": [{"label": ["t", "t"], "m": 3, "d": 1}]}, table.to_dict())
        decomposition: DecompositionReport = Multiplicities.u_nat_decomposition(GraphFamilies.complete(4))
        self.assertTrue(Multiplicities.duality_holds(table, decomposition))

    def test_dense_limit(self):
        with self.assertRaises(ResourceError):
            Multiplicities.projector_rank(GraphFamilies.path(9), ("t", "t"))
