#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np

from .circuit import Circuit
from .circuit_params import CircuitParams
from .state_vector import StateVector


class Gradient:
    """exact cost derivatives by one forward and one backward sweep over the gates.

    the derivative of exp(-i theta H) is -iH exp(-i theta H), so the partial derivative for a gate is
    2 Im <lambda|H|psi> with psi the state after the gate and lambda the adjoint state pulled back to it.
    """

    # central difference step of the oracle
    step: float = 1e-5

    @classmethod
    def all(cls, circuit: Circuit, params: CircuitParams, normalize: bool = False) -> np.ndarray:
        state: StateVector = circuit.run(params)
        adjoint: StateVector = StateVector(state.n, circuit.problem_diagonal * state.amplitudes)
        gradients: np.ndarray = np.zeros(len(params))

        for index in reversed(range(len(params))):
            _, k = params.position(index)
            gate = circuit.gates[k]
            gradients[index] = 2 * np.vdot(adjoint.amplitudes, gate.hamiltonian_action(state)).imag
            theta: float = float(params.values[index])
            state = gate.apply(state, -theta)
            adjoint = gate.apply(adjoint, -theta)

        if normalize and circuit.spec.graph.edge_count():
            gradients /= circuit.spec.graph.edge_count()
        return gradients

    @classmethod
    def of(cls, circuit: Circuit, params: CircuitParams, index: int, normalize: bool = False) -> float:
        params.position(index)
        return float(cls.all(circuit, params, normalize)[index])

    @classmethod
    def finite_difference(
        cls, circuit: Circuit, params: CircuitParams, index: int, step: float | None = None, normalize: bool = False
    ) -> float:
        step = step or cls.step
        params.position(index)
        forward: float = circuit.cost(params.shifted(index, step), normalize)
        backward: float = circuit.cost(params.shifted(index, -step), normalize)
        return (forward - backward) / (2 * step)
