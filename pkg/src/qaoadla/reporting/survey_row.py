#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass


@dataclass(frozen=True)
class SurveyRow:
    """the symmetric block of the standard ansatz on one asymmetric graph"""

    graph6: str
    n: int
    commutant_dim: int
    center_dim: int
    # the largest invariant subspace of the +1 eigenspace of X^n
    largest_dimension: int

    @property
    def delta(self) -> int:
        return 2 ** (self.n - 1) - self.largest_dimension

    def to_dict(self) -> dict[str, object]:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "delta": self.delta,
            "commutant_dim": self.commutant_dim,
            "center_dim": self.center_dim,
            "m": self.largest_dimension,
        }
