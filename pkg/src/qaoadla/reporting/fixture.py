#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

from ..pauli.pauli_vector import PauliVector


@dataclass(frozen=True)
class Fixture:
    """a small generator set with known closure, commutant and center dimensions"""

    name: str
    n: int
    generators: list[PauliVector]
    dim: int
    commutant_dim: int
    center_dim: int
