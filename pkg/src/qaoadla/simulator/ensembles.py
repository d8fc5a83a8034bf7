#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

from .ensemble import Ensemble
from ..errors.input_error import InputError
from ..graphs.graph import Graph
from ..graphs.graph_families import GraphFamilies

logger = logging.getLogger(__name__)


class Ensembles:
    """one graph per vertex count for the gradient variance scans"""

    @classmethod
    def of(cls, ensemble: Ensemble, n_values: range | list[int], seed: int = 0) -> list[Graph]:
        match ensemble:
            case Ensemble.COMPLETE:
                return cls.complete(n_values)
            case Ensemble.THREE_REGULAR:
                return cls.three_regular(n_values, seed)

    @classmethod
    def complete(cls, n_values: range | list[int]) -> list[Graph]:
        return [GraphFamilies.complete(n) for n in n_values]

    @classmethod
    def three_regular(cls, n_values: range | list[int], seed: int = 0) -> list[Graph]:
        graphs: list[Graph] = []
        for n in n_values:
            if n < 4:
                raise InputError(f"3-regular graphs need at least 4 vertices, got {n}")
            # odd vertex counts have no 3-regular graphs
            if n % 2:
                logger.info(f"skipping n={n}, no 3-regular graph exists")
                continue
            graphs.append(GraphFamilies.random_regular(3, n, seed + n))
        return graphs
