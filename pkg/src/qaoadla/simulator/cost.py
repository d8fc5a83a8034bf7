#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np

from .state_vector import StateVector
from ..errors.input_error import InputError
from ..graphs.graph import Graph
from ..symmetry.max_cut_support import MaxCutSupport


class Cost:
    """the expectation of the problem hamiltonian, sum over edges of <Z_u Z_v>"""

    @classmethod
    def of(cls, state: StateVector, graph: Graph, normalize: bool = False, diagonal: np.ndarray | None = None) -> float:
        if state.n != graph.n:
            raise InputError(f"a {state.n} qubit state does not fit a graph on {graph.n} vertices")
        if diagonal is None:
            diagonal = MaxCutSupport.problem_diagonal(graph)
        value: float = float(np.dot(state.probabilities(), diagonal))
        # the renormalized cost divides by the number of edges
        if normalize and graph.edge_count():
            value /= graph.edge_count()
        return value
