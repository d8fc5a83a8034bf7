#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from ..utils.colors import Colors


class QaoadlaError(Exception):
    # exit code used by the command line interface when this error terminates a run
    exit_code: int = 1
    # short label printed in front of the message
    label: str = "error"

    def __init__(self, message: str):
        self.message: str = message

        # construct the colored error message, the plain message stays available for callers
        prefix: str = f"{Colors.BOLD}{Colors.RED}{self.label}:{Colors.RESET}"
        super().__init__(f"{prefix} {message}")
