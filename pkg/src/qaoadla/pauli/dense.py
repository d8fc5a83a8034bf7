#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np
from scipy.linalg import hadamard

from .coefficient_mode import CoefficientMode
from .pauli_string import PauliString
from .pauli_vector import PauliVector
from ..errors.algebra_error import AlgebraError


class Dense:
    """conversions between pauli strings/vectors and dense 2^n x 2^n matrices.

    the basis index of a state uses qubit 0 as its most significant bit, like PauliString.
    """

    # i^k for k = 0..3
    powers_of_i: np.ndarray = np.array([1, 1j, -1, -1j])

    @classmethod
    def string_matrix(cls, string: PauliString) -> np.ndarray:
        # P|a> = i^{|x & z|} (-1)^{|z & a|} |a ^ x>
        d: int = 1 << string.n
        columns: np.ndarray = np.arange(d)
        signs: np.ndarray = 1 - 2 * (np.bitwise_count(columns & string.z_mask) % 2)
        matrix: np.ndarray = np.zeros((d, d), dtype=complex)
        matrix[columns ^ string.x_mask, columns] = cls.powers_of_i[string.y_count() % 4] * signs
        return matrix

    @classmethod
    def matrix(cls, vector: PauliVector) -> np.ndarray:
        """the hermitian operator H = sum_P c_P P, so that the vector stands for the element iH"""
        d: int = 1 << vector.n
        result: np.ndarray = np.zeros((d, d), dtype=complex)
        for string, coefficient in vector.terms.items():
            result += float(coefficient) * cls.string_matrix(string)
        return result

    @classmethod
    def decompose(cls, matrix: np.ndarray) -> np.ndarray:
        """coefficients Tr(P M) / 2^n of a square matrix, as an array indexed [z_mask, x_mask].

        the trace is i^{|x & z|} sum_a (-1)^{|z & a|} M[a, a ^ x], a walsh-hadamard transform per x mask.
        """
        d: int = matrix.shape[0]
        if matrix.shape != (d, d) or d & (d - 1):
            raise AlgebraError(f"expected a square matrix of power of two size, got {matrix.shape}")

        rows: np.ndarray = np.arange(d)
        shifted: np.ndarray = matrix[rows[:, None], rows[:, None] ^ rows[None, :]]
        traces: np.ndarray = hadamard(d) @ shifted
        phases: np.ndarray = cls.powers_of_i[np.bitwise_count(rows[:, None] & rows[None, :]) % 4]
        return phases * traces / d

    @classmethod
    def to_vector(cls, matrix: np.ndarray, tolerance: float = 1e-12) -> PauliVector:
        """the vector of the element iM for a hermitian matrix M, dropping coefficients below the tolerance"""
        n: int = matrix.shape[0].bit_length() - 1
        coefficients: np.ndarray = cls.decompose(matrix)
        if np.abs(coefficients.imag).max(initial=0.0) > max(tolerance, 1e-9):
            raise AlgebraError("matrix is not hermitian, its pauli coefficients are not real")

        terms: dict[PauliString, float] = {}
        for z_mask, x_mask in zip(*np.nonzero(np.abs(coefficients.real) > tolerance)):
            terms[PauliString(n, int(x_mask), int(z_mask))] = float(coefficients[z_mask, x_mask].real)
        return PauliVector(n, terms, CoefficientMode.FLOAT)
