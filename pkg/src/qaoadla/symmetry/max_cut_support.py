#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np

from .decomposition_report import DecompositionReport
from ..graphs.graph import Graph


class MaxCutSupport:
    """which isotypical components the maximum cut basis states reach"""

    tolerance: float = 1e-8

    @classmethod
    def problem_diagonal(cls, graph: Graph) -> np.ndarray:
        """the diagonal of the problem hamiltonian, sum over edges of z_u z_v with z = +-1"""
        indices: np.ndarray = np.arange(1 << graph.n)
        spins: list[np.ndarray] = [1 - 2 * ((indices >> (graph.n - 1 - u)) & 1) for u in range(graph.n)]
        diagonal: np.ndarray = np.zeros(1 << graph.n, dtype=np.int64)
        for u, v in graph.edges:
            diagonal += spins[u] * spins[v]
        return diagonal

    @classmethod
    def max_cuts(cls, graph: Graph) -> list[int]:
        diagonal: np.ndarray = cls.problem_diagonal(graph)
        return [int(a) for a in np.flatnonzero(diagonal == diagonal.min())]

    @classmethod
    def of(cls, graph: Graph, report: DecompositionReport) -> dict[str, list[int]]:
        """for every maximum cut the indices of the blocks with a nonzero projection"""
        support: dict[str, list[int]] = {}
        for a in cls.max_cuts(graph):
            weights: list[float] = [float(np.linalg.norm(b.vectors[a])) for b in report.blocks]
            support[format(a, f"0{graph.n}b")] = [i for i, w in enumerate(weights) if w > cls.tolerance]
        return support
