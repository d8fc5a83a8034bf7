#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from .qaoadla_error import QaoadlaError


class ResourceError(QaoadlaError):
    exit_code: int = 2
    label: str = "resource error"

    def __init__(self, message: str, hint: str = ""):
        self.hint: str = hint

        # append the hint on how to lift the bound, when one is known
        super().__init__(f"{message} ({hint})" if hint else message)
