#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import os
import unittest

from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.lie.ansatz_kind import AnsatzKind
from qaoadla.reporting.command_result import CommandResult
from qaoadla.reporting.gradvar import Gradvar
from qaoadla.reporting.gradvar_row import GradvarRow
from qaoadla.simulator.ensemble import Ensemble
from qaoadla.simulator.ensembles import Ensembles
from qaoadla.utils.run_config import RunConfig


class TestGradvar(unittest.TestCase):
    def setUp(self):
        self.config: RunConfig = RunConfig(seed=4, threads=1)

    def test_row_prediction(self):
        row: GradvarRow = Gradvar.row(GraphFamilies.complete(4), AnsatzKind.STANDARD, 2, 4, self.config)
        self.assertAlmostEqual(6144 / 4536, row.prediction)
        self.assertEqual(4.0, row.bound)
        self.assertGreater(row.variance, 0)

        path: GradvarRow = Gradvar.row(GraphFamilies.path(4), AnsatzKind.STANDARD, 2, 4, self.config)
        self.assertIsNone(path.prediction)
        self.assertIsNone(path.bound)

    def test_run(self):
        graphs = [GraphFamilies.complete(n) for n in (4, 5)]
        result: CommandResult = Gradvar.run(graphs, AnsatzKind.STANDARD, 1, 3, self.config, normalize=True)
        self.assertEqual("gradvar", result.command)
        rows = result.payload["rows"]
        assert isinstance(rows, list)
        self.assertEqual(2, len(rows))
        self.assertTrue(result.payload["normalized"])
        self.assertIsNotNone(result.payload["slope"])

    def test_slope(self):
        result: CommandResult = Gradvar.run([GraphFamilies.complete(4)], AnsatzKind.STANDARD, 1, 3, self.config)
        self.assertIsNone(result.payload["slope"])

    def test_csv(self):
        result: CommandResult = Gradvar.run([GraphFamilies.path(3)], AnsatzKind.FREE, 1, 3, self.config)
        lines: list[str] = Gradvar.to_csv(result).splitlines()
        self.assertEqual("n,graph6,edges,variance,prediction,bound", lines[0])
        self.assertEqual(2, len(lines))
        self.assertTrue(lines[1].startswith("3,"))
        self.assertTrue(lines[1].endswith(",,"))

    def ensemble_slope(self, ensemble: Ensemble) -> float:
        graphs = Ensembles.of(ensemble, range(4, 13), 0)
        result: CommandResult = Gradvar.run(graphs, AnsatzKind.FREE, 1, 100, RunConfig(seed=0), normalize=True)
        slope = result.payload["slope"]
        assert isinstance(slope, float)
        return slope

    @unittest.skipUnless(os.environ.get("QAOADLA_LONG_TESTS"), "set QAOADLA_LONG_TESTS to run the ensemble scans")
    def test_complete_graphs_concentrate(self):
        self.assertLessEqual(self.ensemble_slope(Ensemble.COMPLETE), -0.5)

    @unittest.skipUnless(os.environ.get("QAOADLA_LONG_TESTS"), "set QAOADLA_LONG_TESTS to run the ensemble scans")
    def test_three_regular_graphs_stay_flat(self):
        self.assertLess(abs(self.ensemble_slope(Ensemble.THREE_REGULAR)), 0.15)
