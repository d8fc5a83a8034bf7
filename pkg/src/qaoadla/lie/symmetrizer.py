#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from fractions import Fraction

from .symmetrization_mode import SymmetrizationMode
from ..graphs.perm_group import PermGroup
from ..pauli.coefficient_mode import CoefficientMode
from ..pauli.pauli_string import PauliString
from ..pauli.pauli_vector import Coefficient
from ..pauli.pauli_vector import PauliVector


class Symmetrizer:
    """the averaging projections onto the natural symmetries of a graph"""

    def __init__(self, group: PermGroup):
        self.group: PermGroup = group

    def symmetrize(self, vector: PauliVector, mode: SymmetrizationMode) -> PauliVector:
        match mode:
            case SymmetrizationMode.Z2:
                return self.z2(vector)
            case SymmetrizationMode.AUT:
                return self.aut(vector)
            case SymmetrizationMode.NAT:
                return self.nat(vector)

    def z2(self, vector: PauliVector) -> PauliVector:
        # strings anticommuting with X on every qubit cancel against their conjugate
        return PauliVector(vector.n, {s: c for s, c in vector.terms.items() if s.commutes_with_all_x()}, vector.mode)

    def aut(self, vector: PauliVector) -> PauliVector:
        terms: dict[PauliString, Coefficient] = {}
        for element in self.group.elements:
            for string, coefficient in vector.terms.items():
                moved: PauliString = string.permute(element.image)
                terms[moved] = terms.get(moved, 0) + coefficient
        return PauliVector(vector.n, terms, vector.mode).scale(self._inverse_order(vector))

    def nat(self, vector: PauliVector) -> PauliVector:
        return self.aut(self.z2(vector))

    def _inverse_order(self, vector: PauliVector) -> Coefficient:
        if vector.mode == CoefficientMode.FLOAT:
            return 1.0 / self.group.order
        return Fraction(1, self.group.order)
