#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.pauli.coefficient_mode import CoefficientMode
from qaoadla.reporting.fixture import Fixture
from qaoadla.reporting.fixtures import Fixtures


class TestFixtures(unittest.TestCase):
    def test_generator_sets(self):
        fixtures: dict[str, Fixture] = Fixtures.generator_sets()
        self.assertEqual(["G_a", "G_b", "G_c", "G_d", "G_e", "G_f"], sorted(fixtures))
        self.assertEqual([15, 6, 3, 30, 15, 15], [fixtures[name].dim for name in sorted(fixtures)])
        self.assertEqual(10, len(fixtures["G_d"].generators))

    def test_irrational_entries_are_float(self):
        fixture: Fixture = Fixtures.generator_sets()["G_c"]
        self.assertTrue(all(g.mode == CoefficientMode.FLOAT for g in fixture.generators))
        self.assertTrue(all(g.n == fixture.n for g in fixture.generators))

    def test_house(self):
        self.assertEqual(GraphFamilies.house().edges, Fixtures.house().edges)
