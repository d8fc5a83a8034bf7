#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from collections.abc import Callable
from collections.abc import Sequence
from fractions import Fraction

from .coefficient_mode import CoefficientMode
from .echelon_basis import EchelonBasis
from .pauli_vector import PauliVector
from ..errors.numerical_error import NumericalError


class Rational:
    """exact helpers on top of floating point results"""

    # denominators of snapped coefficients stay below this bound
    max_denominator: int = 1 << 12

    @classmethod
    def snap(cls, value: float, tolerance: float = 1e-9) -> Fraction:
        fraction: Fraction = Fraction(value).limit_denominator(cls.max_denominator)
        if abs(float(fraction) - value) > tolerance:
            raise NumericalError(f"{value!r} is not close to a rational with denominator <= {cls.max_denominator}")
        return fraction

    @classmethod
    def snap_vector(cls, vector: PauliVector) -> PauliVector:
        if vector.mode == CoefficientMode.EXACT:
            return vector
        # scale to a unit largest coefficient before snapping, so the denominators stay small
        largest: float = vector.max_abs() or 1.0
        terms = {s: cls.snap(float(c) / largest) for s, c in vector.terms.items()}
        return PauliVector(vector.n, terms, CoefficientMode.EXACT)

    @classmethod
    def certify(
        cls, n: int, vectors: Sequence[PauliVector], constraint: Callable[[PauliVector], bool]
    ) -> EchelonBasis:
        """snap float basis vectors to exact ones and check the defining constraint on every one of them"""
        basis: EchelonBasis = EchelonBasis(n, CoefficientMode.EXACT)
        for vector in vectors:
            exact: PauliVector = cls.snap_vector(vector)
            if not constraint(exact):
                raise NumericalError("a snapped basis vector fails its exact constraint")
            basis.insert(exact)

        if basis.dim() != len(vectors):
            raise NumericalError(f"snapping lost rank: {len(vectors)} float vectors, {basis.dim()} exact ones")
        return basis

    @classmethod
    def nullspace(cls, rows: Sequence[Sequence[Fraction | int]], columns: int) -> list[list[Fraction]]:
        """exact nullspace of a small matrix by gauss-jordan elimination, one basis vector per free column"""
        matrix: list[list[Fraction]] = [[Fraction(v) for v in row] for row in rows]
        pivots: list[int] = []
        rank: int = 0

        for column in range(columns):
            # find a row with a nonzero entry in this column
            found: int | None = next((r for r in range(rank, len(matrix)) if matrix[r][column] != 0), None)
            if found is None:
                continue
            matrix[rank], matrix[found] = matrix[found], matrix[rank]

            # normalize the pivot row and clear the column in all other rows
            pivot: Fraction = matrix[rank][column]
            matrix[rank] = [v / pivot for v in matrix[rank]]
            for r in range(len(matrix)):
                if r != rank and matrix[r][column] != 0:
                    factor: Fraction = matrix[r][column]
                    matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
            pivots.append(column)
            rank += 1

        basis: list[list[Fraction]] = []
        for free in (c for c in range(columns) if c not in pivots):
            vector: list[Fraction] = [Fraction(0)] * columns
            vector[free] = Fraction(1)
            for r, column in enumerate(pivots):
                vector[column] = -matrix[r][free]
            basis.append(vector)
        return basis
