#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import json
import unittest
from fractions import Fraction

import numpy as np

from qaoadla.reporting.command_result import CommandResult
from qaoadla.reporting.json_report import JsonReport


class TestJsonReport(unittest.TestCase):
    def test_document(self):
        document: dict[str, object] = JsonReport.document(CommandResult("saturate", {"complete": True}, False))
        self.assertEqual("1.0", document["schema_version"])
        self.assertEqual("saturate", document["command"])
        self.assertFalse(document["holds"])
        self.assertTrue(document["complete"])

    def test_render(self):
        payload: dict[str, object] = {"bound": Fraction(8, 3), "count": np.int64(4), "value": np.float64(0.5)}
        text: str = JsonReport.render(CommandResult("characters", payload))
        self.assertTrue(text.endswith("}\n"))
        parsed: dict = json.loads(text)
        self.assertEqual(("8/3", 4, 0.5), (parsed["bound"], parsed["count"], parsed["value"]))

    def test_render_is_deterministic(self):
        result: CommandResult = CommandResult("survey", {"n": 6, "rows": [{"graph6": "E?Bw", "delta": 0}]})
        self.assertEqual(JsonReport.render(result), JsonReport.render(result))

    def test_unserializable(self):
        with self.assertRaises(TypeError):
            JsonReport.render(CommandResult("survey", {"n": object()}))

    def test_missing_keys(self):
        document: dict[str, object] = JsonReport.document(CommandResult("saturate", {"graph": {}, "saturated": {}}))
        self.assertEqual(["complete", "complete_bipartite"], JsonReport.missing_keys(document))

    def test_schema_covers_every_command(self):
        definitions = JsonReport.schema()["definitions"]
        assert isinstance(definitions, dict)
        for command in ("classify", "report", "survey", "gradvar", "saturate", "characters", "verify-free-families"):
            self.assertIn("required", definitions[command], command)
