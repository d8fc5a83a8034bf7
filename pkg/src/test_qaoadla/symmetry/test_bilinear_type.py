#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

import numpy as np

from qaoadla.errors.numerical_error import NumericalError
from qaoadla.symmetry.bilinear_type import BilinearType
from qaoadla.symmetry.block_type import BlockType


class TestBilinearType(unittest.TestCase):
    def setUp(self):
        self.x: np.ndarray = np.array([[0, 1], [1, 0]], dtype=complex)
        self.y: np.ndarray = np.array([[0, -1j], [1j, 0]])
        self.z: np.ndarray = np.array([[1, 0], [0, -1]], dtype=complex)

    def test_su2_is_symplectic(self):
        self.assertEqual(BlockType.SYMPLECTIC, BilinearType.of([self.x, self.y, self.z]))
        form = BilinearType.invariant_form([self.x, self.z])
        assert form is not None
        self.assertTrue(np.allclose(form, -form.T))

    def test_so3_is_orthogonal(self):
        # i times the real antisymmetric generators of rotations in three dimensions
        rotations: list[np.ndarray] = []
        for a, b in ((0, 1), (0, 2), (1, 2)):
            generator: np.ndarray = np.zeros((3, 3), dtype=complex)
            generator[a, b], generator[b, a] = 1j, -1j
            rotations.append(generator)
        self.assertEqual(BlockType.ORTHOGONAL, BilinearType.of(rotations))

    def test_su3_is_unitary(self):
        s: float = 1 / np.sqrt(3)
        gell_mann: list[np.ndarray] = [
            np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
            np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]),
            np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
            np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
            np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]]),
            np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
            np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]),
            np.array([[s, 0, 0], [0, s, 0], [0, 0, -2 * s]], dtype=complex),
        ]
        self.assertEqual(BlockType.UNITARY, BilinearType.of(gell_mann))
        self.assertIsNone(BilinearType.invariant_form(gell_mann))

    def test_reducible_generators(self):
        # a single diagonal generator leaves two independent forms
        with self.assertRaises(NumericalError):
            BilinearType.of([self.z])
