#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import auto
from enum import Enum


class CoefficientMode(Enum):
    # exact rational coefficients, with fraction-free elimination in echelon bases
    EXACT = auto()
    # double precision coefficients, zero tests relative to a tolerance
    FLOAT = auto()
