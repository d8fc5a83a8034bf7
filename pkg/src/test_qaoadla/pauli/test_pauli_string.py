#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

from qaoadla.errors.algebra_error import AlgebraError
from qaoadla.errors.input_error import InputError
from qaoadla.pauli.pauli_string import PauliString


class TestPauliString(unittest.TestCase):
    def test_label_round_trip(self):
        for label in ["I", "X", "Y", "Z", "XIZY", "YYI", "IIIIIII"]:
            self.assertEqual(label, PauliString.from_label(label).label)

    def test_bit_convention(self):
        # qubit 0 is the most significant bit of both masks
        string: PauliString = PauliString.from_label("XIZ")
        self.assertEqual(0b100, string.x_mask)
        self.assertEqual(0b001, string.z_mask)
        self.assertEqual("Y", PauliString.from_label("IY").letter(1))

    def test_invalid_masks(self):
        with self.assertRaises(AlgebraError):
            PauliString(2, 0b100, 0)
        with self.assertRaises(InputError):
            PauliString.from_label("XQ")

    def test_ordering(self):
        # ordered by z mask first, then x mask
        strings: list[PauliString] = [PauliString.from_label(s) for s in ["ZI", "XX", "II", "IX", "YI"]]
        self.assertListEqual(["II", "IX", "XX", "ZI", "YI"], [s.label for s in sorted(strings)])
        for a in strings:
            for b in strings:
                self.assertEqual(a < b, a.code < b.code)

    def test_multiply(self):
        p = PauliString.from_label

        # X * Z = -iY and Z * X = iY
        self.assertEqual((3, p("Y")), p("X").multiply(p("Z")))
        self.assertEqual((1, p("Y")), p("Z").multiply(p("X")))

        # Y * Y = I and XX * YY = -ZZ
        self.assertEqual((0, p("I")), p("Y").multiply(p("Y")))
        self.assertEqual((2, p("ZZ")), p("XX").multiply(p("YY")))

    def test_commutes_with(self):
        self.assertTrue(PauliString.from_label("ZZI").commutes_with(PauliString.from_label("IZZ")))
        self.assertFalse(PauliString.from_label("XI").commutes_with(PauliString.from_label("ZZ")))
        self.assertTrue(PauliString.from_label("XX").commutes_with(PauliString.from_label("ZZ")))
        with self.assertRaises(AlgebraError):
            PauliString.from_label("X").commutes_with(PauliString.from_label("XX"))

    def test_letter_counts(self):
        self.assertEqual((1, 0, 2, 0), PauliString.from_label("YYI").letter_counts())
        self.assertEqual((0, 4, 0, 0), PauliString.all_x(4).letter_counts())

        # restricted to the first qubit only
        self.assertEqual((0, 0, 0, 1), PauliString.from_label("ZZ").letter_counts([0]))
        with self.assertRaises(InputError):
            PauliString.from_label("ZZ").letter_counts([2])

    def test_commutes_with_all_x(self):
        self.assertTrue(PauliString.from_label("YYI").commutes_with_all_x())
        self.assertTrue(PauliString.from_label("ZXZ").commutes_with_all_x())
        self.assertFalse(PauliString.from_label("ZII").commutes_with_all_x())

    def test_permute(self):
        # the letter at qubit u moves to qubit image[u]
        string: PauliString = PauliString.from_label("XYZ")
        self.assertEqual("ZXY", string.permute([1, 2, 0]).label)
        self.assertEqual(string, string.permute([0, 1, 2]))

    def test_without_first(self):
        self.assertEqual("YZ", PauliString.from_label("XYZ").without_first().label)

    def test_from_code(self):
        string: PauliString = PauliString.from_label("YIXZ")
        self.assertEqual(string, PauliString.from_code(4, string.code))
