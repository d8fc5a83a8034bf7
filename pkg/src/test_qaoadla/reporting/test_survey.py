#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import os
import unittest

from qaoadla.errors.resource_error import ResourceError
from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.reporting.command_result import CommandResult
from qaoadla.reporting.survey import Survey
from qaoadla.reporting.survey_row import SurveyRow


class TestSurvey(unittest.TestCase):
    def test_six_vertices(self):
        rows: list[SurveyRow] = Survey.rows(6)
        self.assertEqual(8, len(rows))
        self.assertEqual({0: 8}, Survey.histogram(rows))
        for row in rows:
            self.assertEqual((1, 1, 32), (row.commutant_dim, row.center_dim, row.largest_dimension))
        self.assertEqual(sorted(r.graph6 for r in rows), [r.graph6 for r in rows])

    def test_run(self):
        result: CommandResult = Survey.run(6)
        self.assertTrue(result.holds)
        self.assertEqual({"0": 8}, result.payload["histogram"])
        self.assertEqual(8, result.payload["count"])

    def test_house_row(self):
        # the mirror of the house splits the symmetric block further
        row: SurveyRow = Survey.row(GraphFamilies.house())
        self.assertEqual(16, row.largest_dimension + row.delta)
        self.assertGreater(row.delta, 0)
        self.assertEqual(row.delta, row.to_dict()["delta"])

    def test_limit(self):
        with self.assertRaises(ResourceError):
            Survey.rows(8)

    @unittest.skipUnless(os.environ.get("QAOADLA_LONG_TESTS"), "set QAOADLA_LONG_TESTS to run the seven vertex survey")
    def test_seven_vertices(self):
        self.assertEqual({0: 99, 1: 45}, Survey.histogram(Survey.rows(7)))
