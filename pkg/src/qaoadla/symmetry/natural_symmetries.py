#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np

from .commutant_result import CommutantResult
from .natural_symmetry_report import NaturalSymmetryReport
from ..graphs.graph import Graph
from ..graphs.perm_group import PermGroup
from ..graphs.permutation import Permutation
from ..graphs.refinement_search import RefinementSearch
from ..pauli.coefficient_mode import CoefficientMode
from ..pauli.dense import Dense
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_string import PauliString
from ..pauli.pauli_vector import PauliVector
from ..pauli.rational import Rational


class NaturalSymmetries:
    @classmethod
    def permutation_matrix(cls, permutation: Permutation) -> np.ndarray:
        """the operator moving the bit of qubit u to qubit permutation(u) in every basis state"""
        n: int = permutation.n
        d: int = 1 << n
        indices: np.ndarray = np.arange(d)
        images: np.ndarray = np.zeros(d, dtype=np.int64)
        for u in range(n):
            bits: np.ndarray = (indices >> (n - 1 - u)) & 1
            images |= bits << (n - 1 - permutation(u))
        matrix: np.ndarray = np.zeros((d, d))
        matrix[images, indices] = 1.0
        return matrix

    @classmethod
    def of(
        cls, graph: Graph, commutant: CommutantResult | None = None, group: PermGroup | None = None
    ) -> NaturalSymmetryReport:
        group = group or RefinementSearch(graph).automorphism_group()
        n: int = graph.n

        basis: EchelonBasis = EchelonBasis(n, CoefficientMode.FLOAT)
        for element in group.elements:
            zeta: np.ndarray = cls.permutation_matrix(element)
            for operator in (zeta, zeta[::-1]):
                # both hermitian parts of a real operator lie in the complex span
                for part in ((operator + operator.T) / 2, (operator - operator.T) / 2j):
                    vector: PauliVector = Dense.to_vector(part, tolerance=1e-10)
                    if not vector.is_zero():
                        basis.insert(vector)

        flip: PauliVector = PauliVector.from_string(PauliString.all_x(n))
        exact: EchelonBasis = Rational.certify(n, basis.rows, lambda s: s.commutator(flip).is_zero())
        if commutant is None:
            return NaturalSymmetryReport(exact, None, True)

        contained: bool = commutant.basis.mode == CoefficientMode.EXACT and commutant.basis.contains_all(exact.rows)
        hidden: int | None = commutant.dim - exact.dim() if contained else None
        return NaturalSymmetryReport(exact, hidden, contained)
