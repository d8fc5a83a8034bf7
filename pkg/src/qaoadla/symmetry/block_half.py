#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import Enum


class BlockHalf(Enum):
    """where a block sits relative to the eigenspaces of X on every qubit"""

    PLUS = "+"
    MINUS = "-"
    MIXED = "mixed"
