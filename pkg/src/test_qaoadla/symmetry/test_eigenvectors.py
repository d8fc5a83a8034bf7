#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

import numpy as np

from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.lie.generators import Generators
from qaoadla.pauli.dense import Dense
from qaoadla.pauli.pauli_vector import PauliVector
from qaoadla.symmetry.block_half import BlockHalf
from qaoadla.symmetry.eigenvectors import Eigenvectors
from qaoadla.symmetry.isotypical import Isotypical
from qaoadla.symmetry.one_dim_eigenvector import OneDimEigenvector


class TestEigenvectors(unittest.TestCase):
    def test_house(self):
        generators: list[PauliVector] = Generators.standard(GraphFamilies.house())
        report = Isotypical.decompose(5, generators)
        found: list[OneDimEigenvector] = Eigenvectors.one_dim_eigenvectors(generators, report)
        self.assertEqual([BlockHalf.PLUS, BlockHalf.MINUS], [e.half for e in found])

        for eigenvector in found:
            sign: int = 1 if eigenvector.half == BlockHalf.PLUS else -1
            self.assertTrue(np.allclose(sign * eigenvector.vector, eigenvector.vector[::-1]))
            for generator, value in zip(generators, eigenvector.eigenvalues):
                h: np.ndarray = Dense.matrix(generator)
                self.assertTrue(np.allclose(h @ eigenvector.vector, value * eigenvector.vector))

    def test_normalize(self):
        vector: np.ndarray = np.array([0, -0.5j, 0.5j, 0])
        self.assertTrue(np.array_equal(np.array([0, 1, -1, 0]), Eigenvectors.normalize(vector)))

    def test_kets(self):
        eigenvector = OneDimEigenvector(np.array([0.0, 1.0, -1.0, 0.0]), (2.0,), BlockHalf.MINUS)
        self.assertEqual([(1.0, "01"), (-1.0, "10")], eigenvector.kets())
        expected: dict[str, object] = {"half": "-", "eigenvalues": [2.0], "kets": [[1.0, "01"], [-1.0, "10"]]}
        self.assertEqual(expected, eigenvector.to_dict())
