#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

import numpy as np

from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.lie.generators import Generators
from qaoadla.symmetry.isotypical import Isotypical
from qaoadla.symmetry.max_cut_support import MaxCutSupport


class TestMaxCutSupport(unittest.TestCase):
    def setUp(self):
        self.house = GraphFamilies.house()

    def test_problem_diagonal(self):
        diagonal: np.ndarray = MaxCutSupport.problem_diagonal(GraphFamilies.path(2))
        self.assertEqual([1, -1, -1, 1], diagonal.tolist())
        self.assertEqual(6, MaxCutSupport.problem_diagonal(self.house)[0])

    def test_house_max_cuts(self):
        self.assertEqual([0b00110, 0b01001, 0b10110, 0b11001], MaxCutSupport.max_cuts(self.house))
        self.assertEqual(-4, MaxCutSupport.problem_diagonal(self.house).min())

    def test_house_support(self):
        report = Isotypical.decompose(5, Generators.standard(self.house))
        support: dict[str, list[int]] = MaxCutSupport.of(self.house, report)
        self.assertEqual(["00110", "01001", "10110", "11001"], sorted(support))
        for blocks in support.values():
            self.assertTrue(blocks)
            self.assertLessEqual(len(blocks), len(report.blocks))
