#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

from qaoadla.classify.family_classifier import FamilyClassifier
from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.lie.algebra_result import AlgebraResult
from qaoadla.lie.natural_algebra import NaturalAlgebra
from qaoadla.pauli.pauli_vector import PauliVector
from qaoadla.pauli.pauli_string import PauliString


class TestNaturalAlgebra(unittest.TestCase):
    def test_closed_forms(self):
        for graph in (
            GraphFamilies.path(3),
            GraphFamilies.path(4),
            GraphFamilies.cycle(4),
            GraphFamilies.cycle(5),
            GraphFamilies.complete(4),
        ):
            self.assertEqual(FamilyClassifier.nat_dim_closed_form(graph), NaturalAlgebra.natural_basis(graph).dim)

    def test_house(self):
        house = GraphFamilies.house()
        self.assertEqual(270, NaturalAlgebra.natural_basis(house).dim)
        self.assertEqual(272, NaturalAlgebra.u_nat_basis(house).dim)

    def test_u_nat_contains_the_flip(self):
        u_nat: AlgebraResult = NaturalAlgebra.u_nat_basis(GraphFamilies.path(3))
        self.assertTrue(u_nat.basis.contains(PauliVector.from_string(PauliString.identity(3))))
        self.assertTrue(u_nat.basis.contains(PauliVector.from_string(PauliString.all_x(3))))
        # the odd letter count of a single Z is never symmetric under the flip
        self.assertFalse(u_nat.basis.contains(PauliVector.from_label("ZII")))
