#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np

from ..errors.input_error import InputError
from ..errors.numerical_error import NumericalError
from ..pauli.dense import Dense
from ..pauli.pauli_string import PauliString


class StateVector:
    """a dense n qubit state, qubit 0 being the most significant bit of the basis index"""

    max_qubits: int = 16

    def __init__(self, n: int, amplitudes: np.ndarray):
        if amplitudes.shape != (1 << n,):
            raise InputError(f"expected {1 << n} amplitudes for {n} qubits, got shape {amplitudes.shape}")
        self.n: int = n
        self.amplitudes: np.ndarray = amplitudes.astype(complex, copy=False)

    @classmethod
    def prepare_plus(cls, n: int) -> "StateVector":
        if not 1 <= n <= cls.max_qubits:
            raise InputError(f"statevectors are limited to 1..{cls.max_qubits} qubits, got {n}")
        d: int = 1 << n
        return cls(n, np.full(d, 1 / np.sqrt(d), dtype=complex))

    @classmethod
    def basis_state(cls, n: int, index: int) -> "StateVector":
        amplitudes: np.ndarray = np.zeros(1 << n, dtype=complex)
        amplitudes[index] = 1
        return cls(n, amplitudes)

    @classmethod
    def from_bits(cls, bits: str) -> "StateVector":
        return cls.basis_state(len(bits), int(bits, 2))

    def copy(self) -> "StateVector":
        return StateVector(self.n, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def check_norm(self, tolerance: float = 1e-12) -> None:
        if abs(self.norm() - 1) > tolerance:
            raise NumericalError(f"state norm drifted to {self.norm()}")

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def apply_string(self, string: PauliString) -> np.ndarray:
        """the amplitudes of P|psi>, using P|a> = i^{|x & z|} (-1)^{|z & a|} |a ^ x>"""
        indices: np.ndarray = np.arange(1 << self.n)
        signs: np.ndarray = 1 - 2 * (np.bitwise_count(indices & string.z_mask) % 2)
        result: np.ndarray = np.empty_like(self.amplitudes)
        result[indices ^ string.x_mask] = Dense.powers_of_i[string.y_count() % 4] * signs * self.amplitudes
        return result

    def apply_single_qubit(self, matrix: np.ndarray, qubit: int) -> None:
        """apply a 2 x 2 matrix to one qubit in place"""
        tensor: np.ndarray = self.amplitudes.reshape([2] * self.n)
        tensor = np.moveaxis(np.tensordot(matrix, tensor, axes=([1], [qubit])), 0, qubit)
        self.amplitudes = np.ascontiguousarray(tensor).reshape(-1)

    def bit_flipped(self) -> "StateVector":
        """X on every qubit, reversing the basis order"""
        return StateVector(self.n, self.amplitudes[::-1].copy())

    def __repr__(self) -> str:
        return f"StateVector(n={self.n}, norm={self.norm():.12f})"
