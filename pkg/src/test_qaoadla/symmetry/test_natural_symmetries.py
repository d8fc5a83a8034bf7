#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

import numpy as np

from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.graphs.permutation import Permutation
from qaoadla.lie.generators import Generators
from qaoadla.pauli.dense import Dense
from qaoadla.symmetry.commutant import Commutant
from qaoadla.symmetry.natural_symmetries import NaturalSymmetries
from qaoadla.symmetry.natural_symmetry_report import NaturalSymmetryReport


class TestNaturalSymmetries(unittest.TestCase):
    def test_permutation_matrix(self):
        swap: np.ndarray = NaturalSymmetries.permutation_matrix(Permutation([1, 0]))
        expected: np.ndarray = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
        self.assertTrue(np.array_equal(expected, swap))

    def test_permutation_matrix_moves_bits(self):
        # |100> has its bit on qubit 0, the cycle 0 -> 1 -> 2 moves it to qubit 1
        matrix: np.ndarray = NaturalSymmetries.permutation_matrix(Permutation([1, 2, 0]))
        self.assertEqual(1.0, matrix[0b010, 0b100])

    def test_house(self):
        house = GraphFamilies.house()
        standard = Commutant.of(5, Generators.standard(house))
        report: NaturalSymmetryReport = NaturalSymmetries.of(house, standard)
        self.assertEqual(4, report.nat_dim)
        self.assertEqual(2, report.hidden_dim)
        self.assertTrue(report.contained)

    def test_without_commutant(self):
        report: NaturalSymmetryReport = NaturalSymmetries.of(GraphFamilies.complete(3))
        # the six permutations of the triangle and their products with the flip
        self.assertIsNone(report.hidden_dim)
        self.assertGreaterEqual(report.nat_dim, 2)
        for row in report.basis.rows:
            for generator in Generators.standard(GraphFamilies.complete(3)):
                h: np.ndarray = Dense.matrix(generator)
                m: np.ndarray = Dense.matrix(row)
                self.assertTrue(np.allclose(m @ h, h @ m))
