#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from .qaoadla_error import QaoadlaError


class InputError(QaoadlaError):
    """malformed input or a violated precondition on the input"""

    exit_code: int = 2
    label: str = "input error"
