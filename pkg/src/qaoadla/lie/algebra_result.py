#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_vector import PauliVector


@dataclass
class AlgebraResult:
    """the span of a lie closure together with how it was reached"""

    basis: EchelonBasis
    generator_count: int
    # number of commutator epochs until nothing new was found
    depth: int = 0

    @property
    def dim(self) -> int:
        return self.basis.dim()

    @property
    def n(self) -> int:
        return self.basis.n

    def is_closed_under(self, generators: list[PauliVector]) -> bool:
        return all(self.basis.contains(g.commutator(row)) for g in generators for row in self.basis.rows)

    def contains_algebra(self, other: "AlgebraResult") -> bool:
        return self.basis.contains_all(other.basis.rows)
