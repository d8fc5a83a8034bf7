#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass


@dataclass
class Colors:
    # colors
    RESET = "\033[0m"
    RED = "\033[31m"
    YELLOW = "\033[33m"
    MAGENTA = "\033[35m"
    CYAN = "\033[36m"
    BRIGHT_BLACK = "\033[90m"
    # style
    BOLD = "\033[1m"

    @classmethod
    def paint(cls, text: str, *codes: str) -> str:
        """wrap the text in the given codes, resetting the style afterwards"""
        return f"{''.join(codes)}{text}{cls.RESET}"
