#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

import numpy as np

from .parameter_domain import ParameterDomain
from ..errors.input_error import InputError


@dataclass
class CircuitParams:
    """the angles of L layers, flat index = layer * generator_count + generator"""

    layers: int
    generator_count: int
    values: np.ndarray

    def __post_init__(self):
        if self.layers < 1:
            raise InputError(f"a circuit needs at least one layer, got {self.layers}")
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.layers * self.generator_count,):
            raise InputError(
                f"expected {self.layers * self.generator_count} angles for {self.layers} layers of "
                f"{self.generator_count} generators, got {self.values.size}"
            )

    @classmethod
    def zeros(cls, layers: int, generator_count: int) -> "CircuitParams":
        return cls(layers, generator_count, np.zeros(layers * generator_count))

    @classmethod
    def random(
        cls, layers: int, generator_count: int, rng: np.random.Generator, domain: ParameterDomain = ParameterDomain.PI
    ) -> "CircuitParams":
        return cls(layers, generator_count, domain.sample(rng, layers * generator_count))

    def __len__(self) -> int:
        return self.values.size

    def layer(self, index: int) -> np.ndarray:
        return self.values[index * self.generator_count : (index + 1) * self.generator_count]

    def flat_index(self, layer: int, generator: int) -> int:
        if not (0 <= layer < self.layers and 0 <= generator < self.generator_count):
            raise InputError(f"no angle for layer {layer} and generator {generator}")
        return layer * self.generator_count + generator

    def position(self, index: int) -> tuple[int, int]:
        if not 0 <= index < len(self):
            raise InputError(f"angle index {index} is outside of 0..{len(self) - 1}")
        return divmod(index, self.generator_count)

    def shifted(self, index: int, step: float) -> "CircuitParams":
        values: np.ndarray = self.values.copy()
        values[index] += step
        return CircuitParams(self.layers, self.generator_count, values)
