#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np
from scipy.linalg import eigh

from .state_vector import StateVector
from ..pauli.dense import Dense
from ..pauli.pauli_string import PauliString
from ..pauli.pauli_vector import PauliVector


class GeneratorGate:
    """the exact unitary exp(-i theta H) of one generator H = sum_P c_P P.

    jointly diagonal generators become a phase mask, other commuting sums a product of pauli rotations.
    generators with noncommuting terms, which only the natural ansatz produces, use an eigendecomposition.
    """

    def __init__(self, generator: PauliVector):
        self.n: int = generator.n
        self.terms: list[tuple[PauliString, float]] = sorted(
            ((s, float(c)) for s, c in generator.terms.items()), key=lambda t: t[0].sort_key()
        )
        self.diagonal: np.ndarray | None = None
        self._eigen: tuple[np.ndarray, np.ndarray] | None = None

        strings: list[PauliString] = [s for s, _ in self.terms]
        if all(s.x_mask == 0 for s in strings):
            indices: np.ndarray = np.arange(1 << self.n)
            self.diagonal = np.zeros(1 << self.n)
            for string, c in self.terms:
                self.diagonal += c * (1 - 2 * (np.bitwise_count(indices & string.z_mask) % 2))
        elif not all(a.commutes_with(b) for i, a in enumerate(strings) for b in strings[i + 1 :]):
            self._eigen = eigh(Dense.matrix(generator))

    @property
    def commuting(self) -> bool:
        return self._eigen is None

    def apply(self, state: StateVector, theta: float) -> StateVector:
        if self.diagonal is not None:
            return StateVector(self.n, np.exp(-1j * theta * self.diagonal) * state.amplitudes)
        if self._eigen is not None:
            values, vectors = self._eigen
            rotated: np.ndarray = vectors.conj().T @ state.amplitudes
            return StateVector(self.n, vectors @ (np.exp(-1j * theta * values) * rotated))

        result: StateVector = state.copy()
        for string, c in self.terms:
            angle: float = theta * c
            if string.z_mask == 0 and string.x_mask.bit_count() == 1:
                qubit: int = self.n - string.x_mask.bit_length()
                rotation: np.ndarray = np.array(
                    [[np.cos(angle), -1j * np.sin(angle)], [-1j * np.sin(angle), np.cos(angle)]]
                )
                result.apply_single_qubit(rotation, qubit)
            else:
                result.amplitudes = np.cos(angle) * result.amplitudes - 1j * np.sin(angle) * result.apply_string(string)
        return result

    def hamiltonian_action(self, state: StateVector) -> np.ndarray:
        """the amplitudes of H|psi>"""
        if self.diagonal is not None:
            return self.diagonal * state.amplitudes
        result: np.ndarray = np.zeros_like(state.amplitudes)
        for string, c in self.terms:
            result += c * state.apply_string(string)
        return result
