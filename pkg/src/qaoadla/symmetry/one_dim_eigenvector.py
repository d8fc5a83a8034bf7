#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

import numpy as np

from .block_half import BlockHalf


@dataclass
class OneDimEigenvector:
    """a simultaneous eigenvector of all generators, spanning a one-dimensional invariant subspace"""

    vector: np.ndarray
    # the eigenvalue of every generator, equal tuples mean equivalent representations
    eigenvalues: tuple[float, ...]
    half: BlockHalf

    def kets(self, tolerance: float = 1e-8) -> list[tuple[float, str]]:
        """the nonzero components as (amplitude, bitstring) pairs"""
        n: int = self.vector.shape[0].bit_length() - 1
        return [
            (float(self.vector[a].real), format(a, f"0{n}b"))
            for a in range(self.vector.shape[0])
            if abs(self.vector[a]) > tolerance
        ]

    def to_dict(self) -> dict[str, object]:
        return {
            "half": self.half.value,
            "eigenvalues": [round(e, 12) for e in self.eigenvalues],
            "kets": [[amplitude, bits] for amplitude, bits in self.kets()],
        }
