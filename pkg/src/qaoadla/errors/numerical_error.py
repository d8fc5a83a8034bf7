#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from .qaoadla_error import QaoadlaError


class NumericalError(QaoadlaError):
    """a floating point result could not be turned into the exact quantity it approximates"""

    label: str = "numerical error"
