#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

import numpy as np

from .circuit_params import CircuitParams
from .cost import Cost
from .generator_gate import GeneratorGate
from .state_vector import StateVector
from ..errors.input_error import InputError
from ..lie.ansatz_spec import AnsatzSpec
from ..lie.generators import Generators
from ..symmetry.max_cut_support import MaxCutSupport
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class Circuit:
    """L layers of the ansatz generators applied to the uniform superposition, without trotterization"""

    def __init__(self, spec: AnsatzSpec, config: RunConfig | None = None):
        if spec.n > StateVector.max_qubits:
            raise InputError(f"statevectors are limited to {StateVector.max_qubits} qubits, got {spec.n}")
        self.spec: AnsatzSpec = spec
        self.gates: list[GeneratorGate] = [GeneratorGate(g.to_float()) for g in Generators.of(spec, config)]
        self.problem_diagonal: np.ndarray = MaxCutSupport.problem_diagonal(spec.graph).astype(float)
        logger.debug(
            f"circuit for {spec.kind.value} ansatz on {spec.graph!r}: {len(self.gates)} generators, "
            f"{sum(not g.commuting for g in self.gates)} by eigendecomposition"
        )

    @property
    def generator_count(self) -> int:
        return len(self.gates)

    def zero_params(self, layers: int) -> CircuitParams:
        return CircuitParams.zeros(layers, self.generator_count)

    def _check(self, params: CircuitParams) -> None:
        if params.generator_count != self.generator_count:
            raise InputError(
                f"parameters are laid out for {params.generator_count} generators, "
                f"the ansatz has {self.generator_count}"
            )

    def apply_layer(self, state: StateVector, angles: np.ndarray) -> StateVector:
        if len(angles) != self.generator_count:
            raise InputError(f"a layer needs {self.generator_count} angles, got {len(angles)}")
        for gate, theta in zip(self.gates, angles):
            state = gate.apply(state, float(theta))
        return state

    def run(self, params: CircuitParams) -> StateVector:
        self._check(params)
        state: StateVector = StateVector.prepare_plus(self.spec.n)
        for layer in range(params.layers):
            state = self.apply_layer(state, params.layer(layer))
        return state

    def cost_of(self, state: StateVector, normalize: bool = False) -> float:
        return Cost.of(state, self.spec.graph, normalize, self.problem_diagonal)

    def cost(self, params: CircuitParams, normalize: bool = False) -> float:
        return self.cost_of(self.run(params), normalize)
