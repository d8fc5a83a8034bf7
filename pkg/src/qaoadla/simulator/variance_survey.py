#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

import numpy as np

from .circuit import Circuit
from .circuit_params import CircuitParams
from .gradient import Gradient
from .gradient_stats import GradientStats
from .parameter_domain import ParameterDomain
from ..errors.input_error import InputError
from ..lie.ansatz_spec import AnsatzSpec
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class VarianceSurvey:
    """sample statistics of the cost gradient over random parameters.

    sample s draws its angles from the stream s of the run configuration, so the statistics do not depend on
    the thread count or the order in which samples finish.
    """

    @classmethod
    def run(
        cls,
        spec: AnsatzSpec,
        layers: int,
        samples: int,
        config: RunConfig | None = None,
        normalize: bool = False,
        domain: ParameterDomain = ParameterDomain.PI,
        indices: list[int] | None = None,
    ) -> GradientStats:
        if samples < 2:
            raise InputError(f"a variance needs at least two samples, got {samples}")
        config = config or RunConfig()
        circuit: Circuit = Circuit(spec, config)
        count: int = layers * circuit.generator_count
        indices = list(range(count)) if indices is None else indices
        for index in indices:
            if not 0 <= index < count:
                raise InputError(f"angle index {index} is outside of 0..{count - 1}")

        def sample(s: int) -> np.ndarray:
            params = CircuitParams.random(layers, circuit.generator_count, config.rng(s), domain)
            return Gradient.all(circuit, params, normalize)[indices]

        gradients: np.ndarray = np.array(config.map(sample, range(samples)))
        stats = GradientStats(
            indices,
            gradients.mean(axis=0),
            gradients.var(axis=0, ddof=1),
            samples,
            config.seed,
            normalize,
        )
        logger.debug(f"gradient variance of {spec.graph!r} with {layers} layers: {stats.mean_variance:.6g}")
        return stats
