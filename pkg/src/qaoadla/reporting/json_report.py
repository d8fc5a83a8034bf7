#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .command_result import CommandResult


class JsonReport:
    """renders command results as deterministic json documents carrying the schema version"""

    schema_path: Path = Path(__file__).parents[1] / "data" / "report_schema.json"

    @classmethod
    def schema(cls) -> dict:
        return json.loads(cls.schema_path.read_text())

    @classmethod
    def schema_version(cls) -> str:
        return str(cls.schema()["schema_version"])

    @classmethod
    def document(cls, result: CommandResult) -> dict[str, object]:
        envelope: dict[str, object] = {"schema_version": cls.schema_version(), "command": result.command}
        return envelope | {"holds": result.holds} | result.payload

    @classmethod
    def render(cls, result: CommandResult) -> str:
        return json.dumps(cls.document(result), indent=2, default=cls._default) + "\n"

    @classmethod
    def _default(cls, value: object) -> object:
        if isinstance(value, Fraction):
            return str(value)
        if isinstance(value, np.integer):
            return int(value)
        if isinstance(value, np.floating):
            return float(value)
        raise TypeError(f"{type(value).__name__} is not serializable")

    @classmethod
    def missing_keys(cls, document: dict[str, object]) -> list[str]:
        """the keys the schema requires for the command of the document but the document lacks"""
        definitions: dict = cls.schema()["definitions"]
        command: str = str(document.get("command"))
        required: list[str] = definitions["envelope"]["required"] + definitions[command]["required"]
        return [key for key in required if key not in document]
