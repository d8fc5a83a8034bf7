#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging
from fractions import Fraction

import numpy as np
from scipy.linalg import svd

from .commutant_result import CommutantResult
from ..errors.algebra_error import AlgebraError
from ..errors.numerical_error import NumericalError
from ..errors.resource_error import ResourceError
from ..pauli.coefficient_mode import CoefficientMode
from ..pauli.dense import Dense
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_string import PauliString
from ..pauli.pauli_vector import PauliVector
from ..pauli.rational import Rational
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class Commutant:
    """commutants of generator sets and their centers.

    the nullspace is found in floating point inside the joint eigenspaces of some of the generators, where every
    commuting matrix is block diagonal. exact generators get their basis snapped to rationals and checked exactly.
    """

    # singular values below this fraction of the largest one count as zero
    cutoff: float = 1e-8

    @classmethod
    def of(cls, n: int, generators: list[PauliVector], config: RunConfig | None = None) -> CommutantResult:
        config = config or RunConfig()
        if any(g.n != n for g in generators):
            raise AlgebraError(f"generators must act on {n} qubits")
        if n > config.max_exact_qubits:
            raise ResourceError(f"commutants are limited to {config.max_exact_qubits} qubits, got {n}")

        exact: bool = all(g.mode == CoefficientMode.EXACT for g in generators)
        if not generators:
            # everything commutes with nothing
            every: list[PauliVector] = [PauliVector.from_string(PauliString.from_code(n, c)) for c in range(4**n)]
            return CommutantResult(EchelonBasis.spanned_by(n, every))

        matrices: list[np.ndarray] = [Dense.matrix(g) for g in generators]
        solutions: list[np.ndarray] = cls._nullspace(matrices)
        basis: EchelonBasis = cls._hermitian_basis(n, solutions)
        logger.debug(f"commutant of {len(generators)} generators on {n} qubits has dimension {basis.dim()}")

        if not exact:
            return CommutantResult(basis)
        try:
            certified: EchelonBasis = Rational.certify(
                n, basis.rows, lambda s: all(s.commutator(g).is_zero() for g in generators)
            )
        except NumericalError as e:
            logger.info(f"snapping the commutant failed, solving it exactly on its support: {e}")
            certified = cls._exact_on_support(n, generators, basis)
        return CommutantResult(certified)

    @classmethod
    def _exact_on_support(cls, n: int, generators: list[PauliVector], basis: EchelonBasis) -> EchelonBasis:
        """the exact commutant among the combinations of the strings the float basis uses"""
        support: list[PauliString] = sorted({s for row in basis.rows for s in row.terms})

        # one equation per generator and string of its commutator with a support string
        equations: dict[tuple[int, PauliString], list[Fraction]] = {}
        for index, generator in enumerate(generators):
            for column, string in enumerate(support):
                for term, value in generator.commutator(PauliVector.from_string(string)).terms.items():
                    equations.setdefault((index, term), [Fraction(0)] * len(support))[column] = Fraction(value)

        kernel: list[list[Fraction]] = Rational.nullspace(list(equations.values()), len(support))
        vectors: list[PauliVector] = [PauliVector(n, dict(zip(support, k))) for k in kernel]
        exact: EchelonBasis = EchelonBasis.spanned_by(n, vectors)
        if exact.dim() != basis.dim():
            raise NumericalError(f"exact commutant has dimension {exact.dim()}, the float one {basis.dim()}")
        return exact

    @classmethod
    def _nullspace(cls, matrices: list[np.ndarray]) -> list[np.ndarray]:
        d: int = matrices[0].shape[0]
        basis, blocks, used = cls._eigenbasis(matrices)

        # unknowns are the row-major entries of the diagonal blocks S_c
        offsets: list[int] = [0]
        for block in blocks:
            offsets.append(offsets[-1] + len(block) ** 2)
        solutions: np.ndarray = np.eye(offsets[-1], dtype=complex)

        for index, matrix in enumerate(matrices):
            if index in used:
                continue
            rotated: np.ndarray = basis.conj().T @ matrix @ basis
            constraint: np.ndarray = cls._block_constraint(rotated, blocks, offsets)
            if constraint.shape[0] == 0:
                continue
            restricted: np.ndarray = constraint @ solutions
            solutions = solutions @ cls._kernel(restricted)
            if solutions.shape[1] == 0:
                break

        result: list[np.ndarray] = []
        for column in solutions.T:
            block_diagonal: np.ndarray = np.zeros((d, d), dtype=complex)
            for block, start, stop in zip(blocks, offsets, offsets[1:]):
                block_diagonal[np.ix_(block, block)] = column[start:stop].reshape(len(block), len(block))
            result.append(basis @ block_diagonal @ basis.conj().T)
        return result

    @classmethod
    def _kernel(cls, matrix: np.ndarray) -> np.ndarray:
        """orthonormal kernel columns, singular values are compared against the scale of the generators"""
        if matrix.shape[0] == 0:
            return np.eye(matrix.shape[1], dtype=matrix.dtype)
        _, values, vh = svd(matrix, full_matrices=matrix.shape[0] < matrix.shape[1])
        scale: float = max(float(values[0]) if values.size else 0.0, 1.0)
        rank: int = int((values > cls.cutoff * scale).sum())
        return vh[rank:].conj().T

    @classmethod
    def _eigenbasis(cls, matrices: list[np.ndarray]) -> tuple[np.ndarray, list[list[int]], set[int]]:
        """a basis and its joint eigenspaces (index groups) of the diagonal generators, or of one generator"""
        d: int = matrices[0].shape[0]
        diagonal: list[int] = [i for i, m in enumerate(matrices) if not (m - np.diag(np.diag(m))).any()]
        if diagonal:
            keys: np.ndarray = np.round(np.array([np.diag(matrices[i]).real for i in diagonal]).T, 8)
            groups: dict[tuple[float, ...], list[int]] = {}
            for a in range(d):
                groups.setdefault(tuple(keys[a]), []).append(a)
            return np.eye(d, dtype=complex), list(groups.values()), set(diagonal)

        # the generator with the smallest sum of squared multiplicities leaves the fewest unknowns
        best: tuple[int, np.ndarray, list[list[int]]] | None = None
        for index, matrix in enumerate(matrices):
            values, vectors = np.linalg.eigh(matrix)
            blocks: list[list[int]] = cls.group_eigenvalues(values)
            if best is None or sum(len(b) ** 2 for b in blocks) < sum(len(b) ** 2 for b in best[2]):
                best = (index, vectors, blocks)
        assert best is not None
        return best[1].astype(complex), best[2], {best[0]}

    @classmethod
    def group_eigenvalues(cls, values: np.ndarray, tolerance: float = 1e-8) -> list[list[int]]:
        """indices of sorted eigenvalues grouped by relative closeness"""
        scale: float = max(float(np.abs(values).max(initial=0.0)), 1.0)
        groups: list[list[int]] = []
        for index, value in enumerate(values):
            if groups and abs(value - values[groups[-1][-1]]) <= tolerance * scale:
                groups[-1].append(index)
            else:
                groups.append([index])
        return groups

    @classmethod
    def _block_constraint(cls, rotated: np.ndarray, blocks: list[list[int]], offsets: list[int]) -> np.ndarray:
        # S_c H_ce - H_ce S_e = 0 for every pair of blocks with a nonzero coupling H_ce
        rows: list[np.ndarray] = []
        for c, (block_c, start_c) in enumerate(zip(blocks, offsets)):
            for e, (block_e, start_e) in enumerate(zip(blocks, offsets)):
                coupling: np.ndarray = rotated[np.ix_(block_c, block_e)]
                if np.abs(coupling).max(initial=0.0) <= cls.cutoff:
                    continue
                m_c, m_e = len(block_c), len(block_e)
                row: np.ndarray = np.zeros((m_c * m_e, offsets[-1]), dtype=complex)
                row[:, start_c : start_c + m_c * m_c] += np.kron(np.eye(m_c), coupling.T)
                row[:, start_e : start_e + m_e * m_e] -= np.kron(coupling, np.eye(m_e))
                rows.append(row)
        if not rows:
            return np.zeros((0, offsets[-1]), dtype=complex)
        return np.vstack(rows)

    @classmethod
    def _hermitian_basis(cls, n: int, solutions: list[np.ndarray]) -> EchelonBasis:
        # the commutant of hermitian generators is closed under the adjoint, so hermitian parts span it
        basis: EchelonBasis = EchelonBasis(n, CoefficientMode.FLOAT)
        for s in solutions:
            for part in ((s + s.conj().T) / 2, (s - s.conj().T) / 2j):
                vector: PauliVector = Dense.to_vector(part, tolerance=1e-10)
                if not vector.is_zero(cls.cutoff):
                    basis.insert(vector)
        if basis.dim() != len(solutions):
            raise NumericalError(f"commutant has {len(solutions)} complex dimensions but {basis.dim()} hermitian ones")
        return basis

    @classmethod
    def center(cls, commutant: CommutantResult) -> EchelonBasis:
        """the elements of the commutant commuting with all of it"""
        n: int = commutant.n
        if commutant.is_commutative():
            return commutant.basis.copy()

        matrices: list[np.ndarray] = commutant.matrices()
        # column i stacks the commutators [C_i, C_j] over all j
        columns: list[np.ndarray] = [np.concatenate([(a @ b - b @ a).ravel() for b in matrices]) for a in matrices]
        system: np.ndarray = np.array(columns).T
        kernel: np.ndarray = cls._kernel(np.vstack([system.real, system.imag]))

        rows: list[PauliVector] = commutant.basis.rows
        center: EchelonBasis = EchelonBasis(n, CoefficientMode.FLOAT)
        for coefficients in kernel.T:
            vector: PauliVector = PauliVector.zero(n, CoefficientMode.FLOAT)
            for row, a in zip(rows, coefficients):
                vector = vector + row.to_float().scale(float(a))
            center.insert(vector)

        if commutant.basis.mode == CoefficientMode.FLOAT:
            return center
        return Rational.certify(n, center.rows, lambda z: all(cls._commutes(z, m) for m in matrices))

    @classmethod
    def _commutes(cls, vector: PauliVector, matrix: np.ndarray) -> bool:
        dense: np.ndarray = Dense.matrix(vector)
        return bool(np.abs(dense @ matrix - matrix @ dense).max(initial=0.0) <= cls.cutoff)
