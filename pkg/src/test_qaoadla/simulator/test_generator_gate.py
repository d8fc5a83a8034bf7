#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

import numpy as np
from scipy.linalg import expm

from qaoadla.pauli.dense import Dense
from qaoadla.pauli.pauli_vector import PauliVector
from qaoadla.simulator.generator_gate import GeneratorGate
from qaoadla.simulator.state_vector import StateVector


class TestGeneratorGate(unittest.TestCase):
    def setUp(self):
        rng: np.random.Generator = np.random.default_rng(5)
        amplitudes: np.ndarray = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        self.state: StateVector = StateVector(3, amplitudes / np.linalg.norm(amplitudes))

    def check_against_expm(self, generator: PauliVector, theta: float) -> None:
        gate: GeneratorGate = GeneratorGate(generator.to_float())
        expected: np.ndarray = expm(-1j * theta * Dense.matrix(generator)) @ self.state.amplitudes
        self.assertTrue(np.allclose(expected, gate.apply(self.state, theta).amplitudes), generator)
        action: np.ndarray = Dense.matrix(generator) @ self.state.amplitudes
        self.assertTrue(np.allclose(action, gate.hamiltonian_action(self.state)))

    def test_diagonal(self):
        generator: PauliVector = PauliVector.from_labels({"ZZI": 1, "IZZ": 1, "ZIZ": 2})
        self.assertIsNotNone(GeneratorGate(generator.to_float()).diagonal)
        self.check_against_expm(generator, 0.37)

    def test_single_x(self):
        self.check_against_expm(PauliVector.from_label("IXI"), -1.1)

    def test_commuting_sum(self):
        generator: PauliVector = PauliVector.from_labels({"XII": 1, "IXI": 1, "IIX": 1, "YYI": 3})
        self.assertTrue(GeneratorGate(generator.to_float()).commuting)
        self.check_against_expm(generator, 0.8)

    def test_noncommuting_sum(self):
        generator: PauliVector = PauliVector.from_labels({"XII": 1, "ZZI": 1, "IYZ": -2})
        self.assertFalse(GeneratorGate(generator.to_float()).commuting)
        self.check_against_expm(generator, 2.3)

    def test_phase_of_one_edge(self):
        gate: GeneratorGate = GeneratorGate(PauliVector.from_label("ZZ").to_float())
        theta: float = 0.4
        result: StateVector = gate.apply(StateVector.prepare_plus(2), theta)
        phases: np.ndarray = np.exp(-1j * theta * np.array([1, -1, -1, 1])) / 2
        self.assertTrue(np.allclose(phases, result.amplitudes))

    def test_mixer_rotation(self):
        gate: GeneratorGate = GeneratorGate(PauliVector.from_label("XI").to_float())
        result: StateVector = gate.apply(StateVector.from_bits("00"), 0.3)
        self.assertTrue(np.allclose([np.cos(0.3), 0, -1j * np.sin(0.3), 0], result.amplitudes))
