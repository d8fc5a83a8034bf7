#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest
from fractions import Fraction

from qaoadla.errors.numerical_error import NumericalError
from qaoadla.pauli.pauli_vector import PauliVector
from qaoadla.pauli.coefficient_mode import CoefficientMode
from qaoadla.pauli.rational import Rational


class TestRational(unittest.TestCase):
    def test_snap(self):
        self.assertEqual(Fraction(1, 3), Rational.snap(1 / 3))
        self.assertEqual(Fraction(-5, 8), Rational.snap(-0.625 + 1e-12))
        with self.assertRaises(NumericalError):
            Rational.snap(2**0.5)

    def test_snap_vector(self):
        vector: PauliVector = PauliVector.from_labels({"XX": 0.5, "ZZ": -1.0}, CoefficientMode.FLOAT)
        self.assertEqual(PauliVector.from_labels({"XX": Fraction(1, 2), "ZZ": -1}), Rational.snap_vector(vector))

    def test_nullspace(self):
        basis: list[list[Fraction]] = Rational.nullspace([[1, 2, 3], [2, 4, 6]], 3)
        self.assertEqual(2, len(basis))
        for vector in basis:
            self.assertEqual(0, sum(a * b for a, b in zip([1, 2, 3], vector)))

        # full rank leaves nothing
        self.assertListEqual([], Rational.nullspace([[1, 0], [0, 1]], 2))

    def test_certify(self):
        vectors: list[PauliVector] = [PauliVector.from_labels({"XI": 0.25, "IX": 0.25}, CoefficientMode.FLOAT)]
        basis = Rational.certify(2, vectors, lambda v: v.commutes_with_all_x())
        self.assertEqual(1, basis.dim())
        with self.assertRaises(NumericalError):
            odd: PauliVector = PauliVector.from_labels({"ZI": 1.0}, CoefficientMode.FLOAT)
            Rational.certify(2, [odd], lambda v: v.commutes_with_all_x())
