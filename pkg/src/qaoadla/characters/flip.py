#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import Enum


class Flip(Enum):
    """the two elements of the bit flip group generated by X on every qubit"""

    ID = "id"
    FLIP = "flip"
