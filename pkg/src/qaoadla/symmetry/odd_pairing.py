#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np

from .block import Block
from .block_half import BlockHalf
from .decomposition_report import DecompositionReport
from ..errors.algebra_error import AlgebraError


class OddPairing:
    """for an odd qubit count Z on every qubit swaps the two eigenspaces of X^n and their invariant subspaces"""

    tolerance: float = 1e-8

    @classmethod
    def check(cls, n: int, report: DecompositionReport) -> bool:
        if n % 2 == 0:
            raise AlgebraError(f"the pairing needs an odd qubit count, got {n}")

        plus: list[Block] = [b for b in report.blocks if b.half == BlockHalf.PLUS]
        minus: list[Block] = [b for b in report.blocks if b.half == BlockHalf.MINUS]
        if len(plus) != len(minus) or len(plus) + len(minus) != len(report.blocks):
            return False

        # conjugation by Z^n multiplies entry (a, b) by the parities of a and b
        signs: np.ndarray = 1 - 2 * (np.bitwise_count(np.arange(1 << n)) % 2)
        unmatched: list[np.ndarray] = [b.projector for b in minus]
        for block in plus:
            image: np.ndarray = signs[:, None] * block.projector * signs[None, :]
            match: int | None = next(
                (i for i, p in enumerate(unmatched) if np.abs(p - image).max() <= cls.tolerance), None
            )
            if match is None:
                return False
            unmatched.pop(match)
        return True
