#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np

from .decomposition_report import DecompositionReport
from .one_dim_eigenvector import OneDimEigenvector
from ..pauli.dense import Dense
from ..pauli.pauli_vector import PauliVector


class Eigenvectors:
    @classmethod
    def one_dim_eigenvectors(
        cls, generators: list[PauliVector], report: DecompositionReport
    ) -> list[OneDimEigenvector]:
        matrices: list[np.ndarray] = [Dense.matrix(g) for g in generators]
        result: list[OneDimEigenvector] = []
        for block in report.blocks:
            if block.dimension != 1:
                continue
            for column in block.vectors.T:
                vector: np.ndarray = cls.normalize(column)
                norm: float = float(np.vdot(vector, vector).real)
                eigenvalues: tuple[float, ...] = tuple(float(np.vdot(vector, h @ vector).real) / norm for h in matrices)
                result.append(OneDimEigenvector(vector, eigenvalues, block.half))
        return result

    @classmethod
    def normalize(cls, vector: np.ndarray, tolerance: float = 1e-8) -> np.ndarray:
        """fix the phase so the first component is positive, then scale the smallest component to one"""
        support: np.ndarray = np.flatnonzero(np.abs(vector) > tolerance)
        vector = vector / (vector[support[0]] / abs(vector[support[0]]))
        vector = vector / np.abs(vector[support]).min()

        # snap to integers when every component is close to one
        rounded: np.ndarray = np.round(vector.real)
        if np.abs(vector - rounded).max() <= 1e-6:
            return rounded
        return vector
