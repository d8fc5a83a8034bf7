#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import math
from dataclasses import dataclass

from ..simulator.gradient_stats import GradientStats


@dataclass(frozen=True)
class GradvarRow:
    graph6: str
    n: int
    edges: int
    stats: GradientStats
    # the deep circuit prediction, only for archetypal graphs with more than three vertices
    prediction: float | None = None
    bound: float | None = None

    @property
    def variance(self) -> float:
        return self.stats.mean_variance

    @property
    def log2_variance(self) -> float:
        return math.log2(self.variance) if self.variance > 0 else float("-inf")

    def to_dict(self) -> dict[str, object]:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "edges": self.edges,
            "variance": self.variance,
            "prediction": self.prediction,
            "bound": self.bound,
            "stats": self.stats.to_dict(),
        }
