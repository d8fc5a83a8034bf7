#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

from ..pauli.echelon_basis import EchelonBasis


@dataclass
class NaturalSymmetryReport:
    """the span of the automorphism operators and their products with X on every qubit"""

    basis: EchelonBasis
    # None when the natural symmetries do not all commute with the generators
    hidden_dim: int | None
    contained: bool

    @property
    def nat_dim(self) -> int:
        return self.basis.dim()
