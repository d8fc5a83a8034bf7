#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass


@dataclass(frozen=True)
class VariancePrediction:
    """the gradient variance of a deep archetypal circuit and its simple upper bound"""

    n: int
    edges: int
    value: float
    bound: float

    def to_dict(self) -> dict[str, object]:
        return {"n": self.n, "edges": self.edges, "prediction": self.value, "bound": self.bound}
