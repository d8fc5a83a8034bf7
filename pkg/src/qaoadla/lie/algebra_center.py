#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from fractions import Fraction

import numpy as np
from scipy.linalg import null_space

from .algebra_result import AlgebraResult
from .ansatz_kind import AnsatzKind
from .center_bounds import CenterBounds
from ..errors.algebra_error import AlgebraError
from ..pauli.coefficient_mode import CoefficientMode
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_vector import Coefficient
from ..pauli.pauli_vector import PauliVector
from ..pauli.rational import Rational


class AlgebraCenter:
    """the center of a generated algebra as its intersection with the commutant"""

    @classmethod
    def center_of_algebra(cls, algebra: AlgebraResult, commutant: EchelonBasis) -> EchelonBasis:
        if algebra.n != commutant.n:
            raise AlgebraError(f"qubit count mismatch: algebra has {algebra.n}, commutant has {commutant.n}")

        # sum_i a_i c_i lies in the algebra iff sum_i a_i r_i = 0 for the linear remainders r_i
        rows: list[PauliVector] = commutant.rows
        center: EchelonBasis = EchelonBasis(algebra.n, algebra.basis.mode)
        if not rows:
            return center
        if algebra.basis.mode != commutant.mode:
            if algebra.basis.mode == CoefficientMode.EXACT:
                raise AlgebraError("an exact algebra cannot be intersected with a float commutant")
            rows = [r.to_float() for r in rows]
        remainders: list[dict[int, Coefficient]] = [
            {s.code: c for s, c in algebra.basis.remainder(row).terms.items()} for row in rows
        ]
        codes: list[int] = sorted({code for r in remainders for code in r})

        if algebra.basis.mode == CoefficientMode.EXACT:
            matrix: list[list[Coefficient]] = [[r.get(code, 0) for r in remainders] for code in codes]
            for solution in Rational.nullspace(matrix, len(rows)):
                center.insert(cls._combination(rows, solution))
        else:
            dense: np.ndarray = np.array([[float(r.get(code, 0.0)) for r in remainders] for code in codes])
            dense = dense.reshape(len(codes), len(rows))
            solutions: np.ndarray = null_space(dense, rcond=EchelonBasis.tolerance).T if codes else np.eye(len(rows))
            for solution in solutions:
                center.insert(cls._combination(rows, [float(a) for a in solution]))
        return center

    @classmethod
    def _combination(cls, rows: list[PauliVector], coefficients: list[Fraction] | list[float]) -> PauliVector:
        result: PauliVector = PauliVector.zero(rows[0].n, rows[0].mode)
        for row, a in zip(rows, coefficients):
            if a:
                result = result + row.scale(a)
        return result

    @classmethod
    def center_bounds(
        cls, center_dim: int, generator_count: int, commutant_center_dim: int, kind: AnsatzKind, extra_z: bool = False
    ) -> CenterBounds:
        return CenterBounds(
            center_dim=center_dim,
            generator_count=generator_count,
            commutant_center_dim=commutant_center_dim,
            free_subalgebra=not extra_z,
            standard=kind == AnsatzKind.STANDARD and not extra_z,
        )

