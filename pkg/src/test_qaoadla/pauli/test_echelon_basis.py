#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.
#
# don't report this, as the unittests access private members:
# pyright: reportPrivateUsage=false

import unittest
from fractions import Fraction
from math import gcd

import numpy as np

from qaoadla.errors.algebra_error import AlgebraError
from qaoadla.pauli.coefficient_mode import CoefficientMode
from qaoadla.pauli.echelon_basis import EchelonBasis
from qaoadla.pauli.pauli_string import PauliString
from qaoadla.pauli.pauli_vector import PauliVector


class TestEchelonBasis(unittest.TestCase):
    def setUp(self):
        self.basis: EchelonBasis = EchelonBasis(2)

    def test_duplicate_insert(self):
        self.assertTrue(self.basis.insert(PauliVector.from_label("XI")))
        self.assertFalse(self.basis.insert(PauliVector.from_label("XI")))
        self.assertEqual(1, self.basis.dim())

    def test_independent_insert(self):
        self.assertTrue(self.basis.insert(PauliVector.from_label("XI")))
        self.assertTrue(self.basis.insert(PauliVector.from_labels({"XI": 1, "IX": 1})))
        self.assertEqual(2, self.basis.dim())

        # the rows are reduced against each other, so both single strings are rows now
        self.assertListEqual(["IX", "XI"], [row.strings()[0].label for row in self.basis.rows])
        for row in self.basis.rows:
            self.assertEqual(1, len(row))

    def test_fraction_free_rows(self):
        self.basis.insert(PauliVector.from_labels({"XI": Fraction(1, 2), "ZZ": Fraction(-3, 4)}))
        self.basis.insert(PauliVector.from_labels({"IX": 4, "ZZ": 6}))
        for row in self.basis._rows.values():
            values: list[int] = list(row.values())
            self.assertEqual(1, gcd(*values))
            self.assertGreater(row[min(row)], 0)

    def test_membership(self):
        self.basis.insert(PauliVector.from_labels({"XI": 1, "ZZ": 1}))
        self.basis.insert(PauliVector.from_labels({"IX": 1, "ZZ": -1}))
        self.assertTrue(self.basis.contains(PauliVector.from_labels({"XI": 2, "IX": 2})))
        self.assertFalse(self.basis.contains(PauliVector.from_label("ZZ")))
        self.assertTrue(self.basis.reduce(PauliVector.from_labels({"XI": 1, "IX": 1})).is_zero())

    def test_insert_remainder(self):
        self.basis.insert(PauliVector.from_label("XI"))
        remainder: PauliVector | None = self.basis.insert_remainder(PauliVector.from_labels({"XI": 3, "ZZ": 2}))
        self.assertEqual(PauliVector.from_label("ZZ"), remainder)
        self.assertIsNone(self.basis.insert_remainder(PauliVector.from_label("ZZ")))

    def test_order_independence(self):
        rng: np.random.Generator = np.random.default_rng(7)
        vectors: list[PauliVector] = []
        for _ in range(12):
            codes, values = rng.integers(1, 64, 3), rng.integers(-2, 3, 3)
            terms = {PauliString.from_code(3, int(c)): int(v) for c, v in zip(codes, values)}
            vectors.append(PauliVector(3, terms))

        first: EchelonBasis = EchelonBasis.spanned_by(3, vectors)
        for _ in range(5):
            order: list[int] = list(rng.permutation(len(vectors)))
            other: EchelonBasis = EchelonBasis.spanned_by(3, [vectors[i] for i in order])
            self.assertTrue(first.span_equals(other))
            self.assertEqual(first.rows, other.rows)

    def test_float_tolerance(self):
        basis: EchelonBasis = EchelonBasis(2, CoefficientMode.FLOAT)
        self.assertTrue(basis.insert(PauliVector.from_labels({"XI": 1.0, "IX": 1e-3}, CoefficientMode.FLOAT)))

        # a remainder of relative size 1e-12 counts as zero
        almost: PauliVector = PauliVector.from_labels({"XI": 1e3, "IX": 1.0 + 1e-12}, CoefficientMode.FLOAT)
        self.assertFalse(basis.insert(almost))
        self.assertTrue(basis.insert(PauliVector.from_labels({"XI": 1.0, "ZZ": 1e-3}, CoefficientMode.FLOAT)))
        self.assertEqual(2, basis.dim())

    def test_mismatches(self):
        with self.assertRaises(AlgebraError):
            self.basis.insert(PauliVector.from_label("XII"))
        with self.assertRaises(AlgebraError):
            self.basis.insert(PauliVector.from_label("XI").to_float())
