#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np

from ..errors.algebra_error import AlgebraError
from ..graphs.graph import Graph
from ..lie.generators import Generators
from ..pauli.dense import Dense
from ..pauli.pauli_string import PauliString
from ..pauli.pauli_vector import Coefficient
from ..pauli.pauli_vector import PauliVector


class BlockReduction:
    """the basis change that block diagonalizes operators commuting with X on every qubit.

    the upper-left block is the +1 eigenspace of X^n and the lower-right block the -1 eigenspace. a transformed
    string carries I on qubit 0 when both blocks see the same operator and Z when the lower one sees its negative.
    """

    @classmethod
    def lambda_transform(cls, string: PauliString) -> tuple[int, PauliString]:
        if string.n < 2:
            raise AlgebraError("the block transform needs at least two qubits")
        if not string.commutes_with_all_x():
            raise AlgebraError(f"{string.label} does not commute with X on every qubit")

        top: int = 1 << (string.n - 1)
        rest: PauliString = string.without_first()
        match string.letter(0):
            case "I" | "Z":
                return 1, PauliString(string.n, rest.x_mask, rest.z_mask)
            case "X":
                k, product = PauliString.all_x(string.n - 1).multiply(rest)
                return (1 if k == 0 else -1), PauliString(string.n, product.x_mask, product.z_mask | top)
            case _:
                # the extra factor i turns the odd phase of the product into a sign
                k, product = PauliString.all_x(string.n - 1).multiply(rest)
                return (1 if (k + 1) % 4 == 0 else -1), PauliString(string.n, product.x_mask, product.z_mask | top)

    @classmethod
    def reduce_to_blocks(cls, vector: PauliVector) -> tuple[PauliVector, PauliVector]:
        """the restrictions of the element to the two eigenspaces, as vectors on n - 1 qubits"""
        plus: dict[PauliString, Coefficient] = {}
        minus: dict[PauliString, Coefficient] = {}
        for string, coefficient in vector.terms.items():
            sign, transformed = cls.lambda_transform(string)
            reduced: PauliString = transformed.without_first()
            value: Coefficient = sign * coefficient
            plus[reduced] = plus.get(reduced, 0) + value
            same: bool = transformed.letter(0) == "I"
            minus[reduced] = minus.get(reduced, 0) + (value if same else -value)
        n: int = vector.n - 1
        return PauliVector(n, plus, vector.mode), PauliVector(n, minus, vector.mode)

    @classmethod
    def unitary(cls, n: int) -> np.ndarray:
        """U with U M U^dagger the transformed operator, U = [[1, X'], [1, -X']] / sqrt(2)"""
        half: int = 1 << (n - 1)
        identity: np.ndarray = np.eye(half)
        flip: np.ndarray = identity[::-1]
        return np.block([[identity, flip], [identity, -flip]]) / np.sqrt(2)

    @classmethod
    def transform_matrix(cls, matrix: np.ndarray) -> np.ndarray:
        n: int = matrix.shape[0].bit_length() - 1
        u: np.ndarray = cls.unitary(n)
        return u @ matrix @ u.conj().T

    @classmethod
    def plus_block(cls, matrix: np.ndarray) -> np.ndarray:
        half: int = matrix.shape[0] // 2
        return cls.transform_matrix(matrix)[:half, :half]

    @classmethod
    def standard_plus_generators(cls, graph: Graph) -> list[PauliVector]:
        """the problem and mixer hamiltonians restricted to the +1 eigenspace"""
        problem, _ = cls.reduce_to_blocks(Generators.problem_hamiltonian(graph))
        mixer, _ = cls.reduce_to_blocks(Generators.mixer_hamiltonian(graph.n))
        return [problem, mixer]

    @classmethod
    def delta_quantity(cls, operator: np.ndarray | PauliVector, dim: int) -> float:
        """Tr[B^2] - Tr[B]^2 / dim"""
        matrix: np.ndarray = Dense.matrix(operator) if isinstance(operator, PauliVector) else operator
        if matrix.shape != (dim, dim):
            raise AlgebraError(f"expected a {dim} x {dim} operator, got {matrix.shape}")
        trace: complex = np.trace(matrix)
        return float((np.trace(matrix @ matrix) - trace * trace / dim).real)
