#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import Enum

import numpy as np


class ParameterDomain(Enum):
    # uniform angles on [-pi, pi]
    PI = "pi"
    # uniform angles on [-2 pi, 2 pi]
    TWO_PI = "2pi"

    @property
    def bound(self) -> float:
        return np.pi if self == ParameterDomain.PI else 2 * np.pi

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.uniform(-self.bound, self.bound, size)
