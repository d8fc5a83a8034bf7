#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import math

import numpy as np

from .variance_prediction import VariancePrediction
from ..classify.family import Family
from ..classify.family_classifier import FamilyClassifier
from ..errors.algebra_error import AlgebraError
from ..errors.input_error import InputError
from ..graphs.graph import Graph
from ..lie.generators import Generators
from ..pauli.dense import Dense
from ..pauli.pauli_string import PauliString
from ..symmetry.block_reduction import BlockReduction


class BarrenPlateau:
    """closed form gradient variances of archetypal graphs and the block quantities they are built from"""

    @classmethod
    def variance_prediction(cls, graph: Graph) -> VariancePrediction:
        if graph.n <= 3:
            raise InputError(f"the variance formula needs more than three vertices, got {graph.n}")
        if FamilyClassifier.classify(graph).family != Family.ARCHETYPAL:
            raise InputError("the variance formula only applies to archetypal graphs")
        d: int = 2**graph.n
        edges: int = graph.edge_count()
        value: float = 4 * d * d * edges / ((d * d - 4) * (d + 2))
        return VariancePrediction(graph.n, edges, value, cls.bound(graph.n))

    @classmethod
    def bound(cls, n: int) -> float:
        return 4 * n * n / 2**n

    @classmethod
    def depth_lower_bound(cls, epsilon: float, a_norm: float) -> float:
        """the depth log(1/epsilon) / log(1/a_norm) after which the circuit is an epsilon approximate design"""
        if not 0 < epsilon < 1:
            raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
        if not 0 < a_norm < 1:
            raise InputError(f"the operator norm must lie in (0, 1), got {a_norm}")
        return math.log(1 / epsilon) / math.log(1 / a_norm)

    @classmethod
    def plus_state(cls, n: int) -> np.ndarray:
        d: int = 1 << n
        return np.full((d, d), 1 / d, dtype=complex)

    @classmethod
    def plus_block_delta(cls, operator: np.ndarray) -> float:
        """Tr[B^2] - Tr[B]^2 / d_+ of the operator restricted to the +1 eigenspace of X^n"""
        block: np.ndarray = BlockReduction.plus_block(operator)
        return BlockReduction.delta_quantity(block, block.shape[0])

    @classmethod
    def string_delta(cls, string: PauliString) -> float:
        if string.is_identity() or string == PauliString.all_x(string.n) or not string.commutes_with_all_x():
            raise AlgebraError(f"{string.label} must commute with X^n and differ from I and X^n")
        return cls.plus_block_delta(Dense.string_matrix(string))

    @classmethod
    def block_deltas(cls, graph: Graph) -> dict[str, float]:
        return {
            "rho": cls.plus_block_delta(cls.plus_state(graph.n)),
            "problem": cls.plus_block_delta(Dense.matrix(Generators.problem_hamiltonian(graph))),
        }

    @classmethod
    def expected_block_deltas(cls, graph: Graph) -> dict[str, float]:
        d: int = 2**graph.n
        return {"rho": (d - 2) / d, "problem": graph.edge_count() * d / 2, "string": d / 2}
