#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass


@dataclass
class CommandResult:
    """the report of one command and whether every check in it held"""

    command: str
    payload: dict[str, object]
    holds: bool = True
