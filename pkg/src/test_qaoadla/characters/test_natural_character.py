#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

from qaoadla.characters.flip import Flip
from qaoadla.characters.natural_character import NaturalCharacter
from qaoadla.graphs.graph_enumerator import GraphEnumerator
from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.graphs.permutation import Permutation


class TestNaturalCharacter(unittest.TestCase):
    def test_chi_nat(self):
        self.assertEqual(8, NaturalCharacter.chi_nat(Flip.ID, Permutation.identity(3)))
        self.assertEqual(0, NaturalCharacter.chi_nat(Flip.FLIP, Permutation.identity(3)))
        swap: Permutation = Permutation.from_cycles(4, [[1, 2], [3, 4]])
        self.assertEqual(4, NaturalCharacter.chi_nat(Flip.ID, swap))
        self.assertEqual(4, NaturalCharacter.chi_nat(Flip.FLIP, swap))
        self.assertEqual(0, NaturalCharacter.chi_nat(Flip.FLIP, Permutation.from_cycles(3, [[1, 2]])))

    def test_complete_graphs(self):
        for n in range(2, 7):
            self.assertEqual(n // 2 + 1, NaturalCharacter.trivial_multiplicity(GraphFamilies.complete(n)), n)

    def test_house(self):
        self.assertEqual(10, NaturalCharacter.trivial_multiplicity(GraphFamilies.house()))

    def test_asymmetric_graphs(self):
        for graph in GraphEnumerator().asymmetric_connected_graphs(6):
            self.assertEqual(32, NaturalCharacter.trivial_multiplicity(graph), graph)
