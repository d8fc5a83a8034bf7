#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

import numpy as np


@dataclass
class GradientStats:
    indices: list[int]
    mean: np.ndarray
    # unbiased, divided by samples - 1
    variance: np.ndarray
    samples: int
    seed: int
    normalized: bool

    @property
    def mean_variance(self) -> float:
        return float(np.mean(self.variance))

    def to_dict(self) -> dict[str, object]:
        return {
            "indices": self.indices,
            "mean": [float(x) for x in self.mean],
            "variance": [float(x) for x in self.variance],
            "samples": self.samples,
            "seed": self.seed,
            "normalized": self.normalized,
        }
